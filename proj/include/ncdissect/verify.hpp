#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncdissect/numbers.hpp"

namespace ncdissect {

/// One row of the self-verification sweep. Count checks compare a formula
/// value with an enumeration; identity checks compare the number of items
/// tried with the number that satisfied the property.
struct CheckResult {
  std::string family;
  std::string parameters;
  bool identity = false;
  BigCount expected;
  BigCount observed;
  bool pass = false;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::vector<std::string> families() const;
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

struct VerifyOptions {
  int max_s = 3;
  int max_n = 4;
  int oracle_max_vertices = 16;  // partial-collection oracles run only for s*n up to this
  int arithmetic_max_s = 6;
  int arithmetic_max_n = 30;
  // Test hook: every expected value of this family is shifted by one.
  std::optional<std::string> inject_fault;
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace ncdissect
