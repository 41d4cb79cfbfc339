#pragma once

#include <stdexcept>
#include <string>

namespace torcc {

// Search exceeded its state budget. Callers get this instead of a wrong number.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Projection to an annulus is empty (the curve equals the core).
class UndefinedProjection : public std::runtime_error {
public:
    explicit UndefinedProjection(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violation on a domain value (non-canonical slope, det != 1, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace torcc
