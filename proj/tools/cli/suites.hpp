#pragma once

// Self-check suites run by `charsub verify`.

#include <cstddef>
#include <iosfwd>
#include <string>

namespace charsub::cli {

struct SuiteResult {
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool ok() const noexcept { return failed == 0; }
};

/// "paper": worked examples. "census": Chinv vs Hinv against the shoda
/// condition for every Jordan type of size <= max_dim. "oracle": the <Y>
/// formula against brute force for every eligible type of size <= max_dim.
/// One PASS/FAIL line per case goes to `log`. Throws ParseError for an
/// unknown suite name.
SuiteResult run_suite(const std::string& name, std::size_t max_dim, std::ostream& log);

std::size_t default_suite_max_dim(const std::string& name);

}  // namespace charsub::cli
