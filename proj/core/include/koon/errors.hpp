#pragma once

#include <stdexcept>
#include <string>

namespace koon {

// Conditioning event (e.g. {T > t} or {X_{1:n} > t}) has probability zero.
struct ConditioningOnNullEvent : std::runtime_error {
    explicit ConditioningOnNullEvent(const std::string& what) : std::runtime_error(what) {}
};

// Category counts passed to a partition sum are negative or exceed n.
struct InvalidCounts : std::invalid_argument {
    explicit InvalidCounts(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the documented range (u > t, t < 0, bad k, ...).
struct InvalidArgs : std::invalid_argument {
    explicit InvalidArgs(const std::string& what) : std::invalid_argument(what) {}
};

// Numeric argument outside a function's domain (probabilities, gamma inverse targets, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// No usable tail bound exists for the requested truncation.
struct UnboundedTail : std::runtime_error {
    explicit UnboundedTail(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive enumeration would exceed the configured state budget.
struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampling acceptance rate fell below the usable floor.
struct ConditioningTooRare : std::runtime_error {
    explicit ConditioningTooRare(const std::string& what) : std::runtime_error(what) {}
};

// Two systems being compared do not share (n, k).
struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace koon
