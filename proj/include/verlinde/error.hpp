#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

// Malformed arguments or input data; maps to CLI exit code 2.
struct ValidationError : std::invalid_argument {
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Floating-point evaluation could not certify a result at the requested
// tolerance, even after escalating precision; maps to CLI exit code 4.
struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// The analytic and recursive engines disagree; carries both values.
// Maps to CLI exit code 3.
struct EngineMismatchError : std::runtime_error {
  std::string analytic_value;
  std::string recursive_value;
  EngineMismatchError(std::string analytic, std::string recursive, const std::string& instance)
      : std::runtime_error("engine mismatch on " + instance + ": analytic=" + analytic +
                           " recursive=" + recursive),
        analytic_value(std::move(analytic)),
        recursive_value(std::move(recursive)) {}
};

// Memo-cache file is unreadable as a cache document.
struct CacheCorruptError : std::runtime_error {
  explicit CacheCorruptError(const std::string& what) : std::runtime_error(what) {}
};

// Memo-cache file has a version this build does not speak.
struct CacheVersionError : std::runtime_error {
  explicit CacheVersionError(const std::string& what) : std::runtime_error(what) {}
};

// Recursion depth cap hit: a logic error, never silent truncation.
struct RecursionBudgetError : std::logic_error {
  explicit RecursionBudgetError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace verlinde
