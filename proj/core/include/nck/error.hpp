#pragma once

#include <stdexcept>
#include <string>

namespace nck {

// Thrown when input data violates a documented schema or type invariant.
// CLI maps this to exit code 2.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a computation exceeds a configured budget (exponent ranges,
// word counts, truncation cutoffs). CLI maps this to exit code 3.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nck
