#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matsing {

// Raised on malformed input: bad polynomial text, non-rectangular matrices,
// incompatible ring contexts, out-of-range arguments.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a computation exceeds its configured work budget.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what, std::uint64_t spent)
        : std::runtime_error(what), work_spent(spent) {}
    std::uint64_t work_spent;
};

// Work budget shared by standard-basis computations.  The S-pair limit can
// be overridden with the MATSING_SPAIR_BUDGET environment variable.
struct Budget {
    std::uint64_t spair_limit = 2'000'000;
    std::uint64_t reduction_limit = 400'000'000;
};

Budget default_budget();

}  // namespace matsing
