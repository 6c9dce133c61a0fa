#pragma once

#include <stdexcept>
#include <string>

namespace gsup {

/// Malformed data structure (dart without a twin, bad rotation, ...).
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// A stated precondition of an operation does not hold (crossing input,
/// cycle system that is not abab-free, loop contraction, ...).
struct ContractViolation : std::runtime_error {
    explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Input file could not be parsed or references unknown names.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A rewrite pipeline exceeded its configured step budget.
struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Instance too large for an exhaustive oracle.
struct SizeGuard : std::runtime_error {
    explicit SizeGuard(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gsup
