#pragma once

#include <stdexcept>
#include <string>

namespace oppk {

/// Precondition or input-validation failure. CLI exit code 2.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A configurable effort budget was exhausted before the computation could
/// finish (incomplete factorization, lifting caps). Never a wrong answer.
/// CLI exit code 3.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// The result would exceed a hard capacity bound (enumeration limits,
/// output of size Theta(n)). CLI exit code 4.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oppk
