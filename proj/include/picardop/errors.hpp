#pragma once

#include <stdexcept>
#include <string>

namespace picardop {

/// Grid/rank/shape mismatches and invalid experiment configuration.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite numeric input.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// A nonlinearity outside the admissible class (F(0) != 0 or Lipschitz bound exceeded).
struct admissibility_error : std::invalid_argument {
    explicit admissibility_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Fixed-point iteration failed to contract within the iteration budget.
/// Signals a violated contraction precondition rather than a tolerance issue.
struct solver_stall_error : std::runtime_error {
    explicit solver_stall_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exact rollout state left the admissible ball; carries the offending block.
struct horizon_exceeded_error : std::runtime_error {
    int block;
    horizon_exceeded_error(const std::string& what, int block_) : std::runtime_error(what), block(block_) {}
};

} // namespace picardop
