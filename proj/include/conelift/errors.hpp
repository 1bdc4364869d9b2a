#pragma once

#include <stdexcept>
#include <string>

namespace conelift {

// Malformed input: bad dimensions, mismatched fields, unparseable data.
// CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation would exceed the configured work budget.
// CLI maps this to exit code 3.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that fails a mathematical precondition (cone membership,
// modular syndrome condition, selection failure). Carries any partial trace.
// CLI maps this to exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace conelift
