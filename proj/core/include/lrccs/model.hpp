#ifndef LRCCS_MODEL_HPP
#define LRCCS_MODEL_HPP

#include <cstdint>

#include "lrccs/types.hpp"

namespace lrccs {

/// Draws a planted rank-r matrix: Ustar is an orthonormalized n x r standard
/// Gaussian matrix, the coefficient columns b_k are i.i.d. N(0, I_r).
/// kappa, mu and the extreme singular values are computed from the realized
/// draw. Deterministic in (dims, seed); column substreams make the result
/// independent of generation order.
GroundTruth gen_ground_truth(const ProblemDims& dims, std::uint64_t seed);

/// Samples q independent m x n standard Gaussian designs and the exact
/// sketches y_k = A_k x*_k.
MeasurementSet gen_measurements(const GroundTruth& gt, Index m, std::uint64_t seed);

/// Entrywise |y_k|; the designs are shared with the source set, not copied.
MagnitudeSet magnitudes_of(const MeasurementSet& ms);

/// Partitions the rows of every (A_k, y_k) into 2T+1 contiguous disjoint
/// blocks, larger blocks first. Throws InfeasibleSplit when m < 2T+1.
SplitMeasurements split_for_sampling(const MeasurementSet& ms, Index t_count);

/// mu and kappa recomputed from a dense matrix by full SVD; used to
/// cross-check the factored computation.
struct IncoherenceStats {
  double sigma_max;
  double sigma_min;
  double kappa;
  double mu;
};
IncoherenceStats incoherence_of(const Eigen::MatrixXd& x, Index r);

}  // namespace lrccs

#endif  // LRCCS_MODEL_HPP
