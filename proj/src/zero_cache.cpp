#include "crossbessel/zero_cache.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "crossbessel/errors.hpp"
#include "crossbessel/zeros.hpp"

namespace crossbessel {

namespace {

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::atomic<unsigned> g_tmp_counter{0};

}  // namespace

nlohmann::json to_json(const ZeroTable& table) {
  nlohmann::json brackets = nlohmann::json::array();
  for (const Bracket& b : table.brackets) brackets.push_back({b.lo, b.hi});
  return {{"schema_version", kZeroTableSchemaVersion},
          {"kind", std::string(to_string(table.kind))},
          {"nu", table.nu.value()},
          {"tol", table.tol},
          {"zeros", table.zeros},
          {"brackets", brackets}};
}

ZeroTable zero_table_from_json(const nlohmann::json& doc) {
  if (doc.at("schema_version").get<int>() != kZeroTableSchemaVersion) {
    throw DomainError("zero table: unsupported schema_version");
  }
  ZeroTable t{Order(doc.at("nu").get<double>()),
              zero_kind_from_string(doc.at("kind").get<std::string>()),
              doc.at("tol").get<double>(),
              doc.at("zeros").get<std::vector<double>>(),
              {}};
  for (const auto& b : doc.at("brackets")) {
    t.brackets.push_back({b.at(0).get<double>(), b.at(1).get<double>()});
  }
  if (t.brackets.size() != t.zeros.size()) {
    throw DomainError("zero table: brackets and zeros differ in length");
  }
  for (std::size_t i = 1; i < t.zeros.size(); ++i) {
    if (!(t.zeros[i] > t.zeros[i - 1])) throw DomainError("zero table: zeros not increasing");
  }
  return t;
}

std::string to_csv(const ZeroTable& table) {
  std::string out = "n,zero,lo,hi\n";
  for (std::size_t i = 0; i < table.zeros.size(); ++i) {
    out += std::to_string(i + 1) + "," + format17(table.zeros[i]) + "," +
           format17(table.brackets[i].lo) + "," + format17(table.brackets[i].hi) + "\n";
  }
  return out;
}

ZeroCache::ZeroCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ZeroCache::resolve_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("CROSSBESSEL_CACHE_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg != nullptr && *xdg != '\0') {
    return std::filesystem::path(xdg) / "crossbessel";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".local" / "share" / "crossbessel";
  }
  return std::filesystem::temp_directory_path() / "crossbessel";
}

std::filesystem::path ZeroCache::path_for(ZeroKind kind, Order nu, double tol) const {
  // nu rounded to 1e-12 in the key
  const double rounded = std::round(nu.value() * 1e12) / 1e12;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s_nu%+.12f_tol%.3e.json",
                kind == ZeroKind::J ? "j" : "cross", rounded == 0.0 ? 0.0 : rounded, tol);
  return dir_ / buf;
}

std::optional<ZeroTable> ZeroCache::load(ZeroKind kind, Order nu, double tol,
                                         std::size_t min_count) const {
  const auto path = path_for(kind, nu, tol);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const nlohmann::json doc = nlohmann::json::parse(in);
    ZeroTable t = zero_table_from_json(doc);
    if (t.kind != kind || t.size() < min_count ||
        std::fabs(t.nu.value() - nu.value()) > 1e-12) {
      return std::nullopt;
    }
    return t;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed and overwritten
  }
}

void ZeroCache::store(const ZeroTable& table) const {
  std::lock_guard lock(write_mutex_);
  std::filesystem::create_directories(dir_);
  const auto path = path_for(table.kind, table.nu, table.tol);
  std::ostringstream tag;
  tag << ".tmp." << ::getpid() << "." << std::this_thread::get_id() << "." << g_tmp_counter++;
  auto tmp = path;
  tmp += tag.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("zero cache: cannot write " + tmp.string());
    out << to_json(table).dump(2) << '\n';
    if (!out) throw Error("zero cache: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

ZeroTable ZeroCache::j_zeros(Order nu, int count, double tol) {
  if (auto hit = load(ZeroKind::J, nu, tol, static_cast<std::size_t>(count))) {
    hit->zeros.resize(count);
    hit->brackets.resize(count);
    return *hit;
  }
  ZeroTable t = crossbessel::j_zeros(nu, count, tol);
  store(t);
  return t;
}

ZeroTable ZeroCache::gamma_zeros(Order nu, int count, double tol) {
  if (auto hit = load(ZeroKind::Cross, nu, tol, static_cast<std::size_t>(count))) {
    hit->zeros.resize(count);
    hit->brackets.resize(count);
    return *hit;
  }
  const ZeroTable a = j_zeros(nu, count + 1, tol);
  const ZeroTable b = j_zeros(nu.shifted(1.0), count, tol);
  ZeroTable t = crossbessel::gamma_zeros(nu, count, tol, a, b);
  store(t);
  return t;
}

}  // namespace crossbessel
