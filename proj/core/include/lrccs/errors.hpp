#ifndef LRCCS_ERRORS_HPP
#define LRCCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lrccs {

/// Invalid problem sizes (n, q, r, m) or mismatched shapes.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An input violated a documented precondition (e.g. non-orthonormal basis).
struct ContractViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Requested sample split cannot be formed from the available rows.
struct InfeasibleSplit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed (rank-destroying step, CG stall, ...).
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lrccs

#endif  // LRCCS_ERRORS_HPP
