#pragma once

#include <stdexcept>
#include <string>

namespace lappell {

/// Violated precondition or unsatisfiable request (non-lowering operator,
/// zero gamma, irreducible symbol polynomial, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// A computation asked for moments beyond the trustworthy range.
class truncation_error : public domain_error {
public:
    explicit truncation_error(const std::string& what) : domain_error(what) {}
};

/// Malformed textual/JSON input.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lappell
