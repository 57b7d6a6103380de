#pragma once

// On-disk cache of zero tables: one JSON document per (kind, nu, tol).

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "json.hpp"

#include "crossbessel/zero_table.hpp"

namespace crossbessel {

inline constexpr int kZeroTableSchemaVersion = 1;

nlohmann::json to_json(const ZeroTable& table);
ZeroTable zero_table_from_json(const nlohmann::json& doc);

// Header "n,zero,lo,hi", '\n' line endings, 17 significant digits.
std::string to_csv(const ZeroTable& table);

class ZeroCache {
 public:
  explicit ZeroCache(std::filesystem::path dir);

  // Directory resolution: explicit flag, then CROSSBESSEL_CACHE_DIR, then the
  // platform data directory.
  static std::filesystem::path resolve_dir(const std::optional<std::string>& flag);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(ZeroKind kind, Order nu, double tol) const;

  // A cached table with at least min_count zeros, if one exists and parses.
  std::optional<ZeroTable> load(ZeroKind kind, Order nu, double tol,
                                std::size_t min_count) const;
  // Write-then-rename; concurrent writers in one process are serialised.
  void store(const ZeroTable& table) const;

  ZeroTable j_zeros(Order nu, int count, double tol);
  ZeroTable gamma_zeros(Order nu, int count, double tol);

 private:
  std::filesystem::path dir_;
  mutable std::mutex write_mutex_;
};

}  // namespace crossbessel
