#pragma once

// Self-verification suites behind `crossbessel verify`. Every check records
// the quantity it measured next to the limit it was held to.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace crossbessel {

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  bool informational = false;  // never counts as a failure
  nlohmann::json detail;
};

enum class Suite { All, Series, Zeros, Jacobi, Criterion, Starlike };
Suite suite_from_string(std::string_view text);

std::vector<Check> run_verification(Suite suite);
bool all_passed(const std::vector<Check>& checks);
nlohmann::json to_json(const std::vector<Check>& checks);

}  // namespace crossbessel
