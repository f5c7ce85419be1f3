#pragma once

#include <stdexcept>
#include <string>

namespace gpf {

/// Precondition failure on caller-supplied input (bad k, n, ratio, guard).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A term or intermediate product does not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace gpf
