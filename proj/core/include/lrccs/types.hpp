#ifndef LRCCS_TYPES_HPP
#define LRCCS_TYPES_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace lrccs {

using Eigen::Index;

/// Problem sizes: ambient dimension n, number of columns q, rank r, and
/// measurements per column m.
struct ProblemDims {
  Index n = 0;
  Index q = 0;
  Index r = 0;
  Index m = 0;

  /// Throws DimensionError unless 1 <= r <= min(n, q) and m >= 1.
  void validate() const;
};

/// Planted low-rank matrix in factored form: X* = Ustar * Bstar_tilde with
/// Ustar an n x r basis matrix and Bstar_tilde = Sigma* V* (columns b_k).
/// kappa and mu are the realized condition number and incoherence of the
/// draw, computed from an r-SVD of Bstar_tilde.
struct GroundTruth {
  Eigen::MatrixXd Ustar;        // n x r, orthonormal columns
  Eigen::MatrixXd Bstar_tilde;  // r x q
  double sigma_max = 0.0;
  double sigma_min = 0.0;
  double kappa = 1.0;
  double mu = 1.0;

  Index n() const { return Ustar.rows(); }
  Index q() const { return Bstar_tilde.cols(); }
  Index r() const { return Ustar.cols(); }

  Eigen::VectorXd column(Index k) const { return Ustar * Bstar_tilde.col(k); }
  Eigen::MatrixXd assemble() const { return Ustar * Bstar_tilde; }
};

/// The q design matrices A_k. Shared between a MeasurementSet and any
/// MagnitudeSet derived from it (the matrices dominate memory).
using DesignList = std::vector<Eigen::MatrixXd>;

/// Per-column linear sketches y_k = A_k x*_k together with their designs.
struct MeasurementSet {
  ProblemDims dims;
  std::shared_ptr<const DesignList> designs;
  std::vector<Eigen::VectorXd> obs;  // y_k, length m each
  std::uint64_t seed = 0;

  const Eigen::MatrixXd& design(Index k) const { return (*designs)[static_cast<std::size_t>(k)]; }
};

/// Magnitude-only sketches |A_k x*_k|; designs shared with the source set.
struct MagnitudeSet {
  ProblemDims dims;
  std::shared_ptr<const DesignList> designs;
  std::vector<Eigen::VectorXd> obs;  // |y_k|, entrywise nonnegative
  std::uint64_t seed = 0;

  const Eigen::MatrixXd& design(Index k) const { return (*designs)[static_cast<std::size_t>(k)]; }
};

/// Lightweight row-range view over a measurement set. Sample-split
/// partitions are views like this into one master set; the full set is the
/// trivial view. Never outlives the set it refers to.
class MeasurementView {
 public:
  MeasurementView(const MeasurementSet& ms)  // NOLINT(google-explicit-constructor)
      : designs_(ms.designs.get()), obs_(&ms.obs), row0_(0), rows_(ms.dims.m), n_(ms.dims.n) {}
  MeasurementView(const MagnitudeSet& ms)  // NOLINT(google-explicit-constructor)
      : designs_(ms.designs.get()), obs_(&ms.obs), row0_(0), rows_(ms.dims.m), n_(ms.dims.n) {}
  MeasurementView(const MeasurementSet& ms, Index row0, Index rows)
      : designs_(ms.designs.get()), obs_(&ms.obs), row0_(row0), rows_(rows), n_(ms.dims.n) {}
  MeasurementView(const MagnitudeSet& ms, Index row0, Index rows)
      : designs_(ms.designs.get()), obs_(&ms.obs), row0_(row0), rows_(rows), n_(ms.dims.n) {}

  Index q() const { return static_cast<Index>(obs_->size()); }
  Index m() const { return rows_; }
  Index n() const { return n_; }
  Index row_begin() const { return row0_; }

  Eigen::Block<const Eigen::MatrixXd> design(Index k) const {
    return (*designs_)[static_cast<std::size_t>(k)].middleRows(row0_, rows_);
  }
  Eigen::VectorBlock<const Eigen::VectorXd> obs(Index k) const {
    return (*obs_)[static_cast<std::size_t>(k)].segment(row0_, rows_);
  }

 private:
  const DesignList* designs_;
  const std::vector<Eigen::VectorXd>* obs_;
  Index row0_;
  Index rows_;
  Index n_;
};

/// 2T+1 disjoint row partitions of a master set: partition 0 initializes,
/// partitions 1..T feed the min-B steps, T+1..2T the gradient steps.
struct SplitMeasurements {
  const MeasurementSet* master = nullptr;
  Index t_count = 0;  // T
  std::vector<Index> offsets;
  std::vector<Index> sizes;

  MeasurementView partition(Index tau) const {
    return MeasurementView(*master, offsets[static_cast<std::size_t>(tau)],
                           sizes[static_cast<std::size_t>(tau)]);
  }
  MeasurementView init_view() const { return partition(0); }
  MeasurementView minb_view(Index t) const { return partition(t); }           // t in 1..T
  MeasurementView grad_view(Index t) const { return partition(t_count + t); }  // t in 1..T
};

/// Current iterate (U orthonormal n x r, B r x q); the estimate is U * B.
struct FactoredEstimate {
  Eigen::MatrixXd U;
  Eigen::MatrixXd B;

  Eigen::MatrixXd assemble() const { return U * B; }
};

/// One row of a run trace; serializes to one CSV row.
struct IterRecord {
  int iter = 0;
  double elapsed_s = 0.0;
  double sd = std::numeric_limits<double>::quiet_NaN();  // SD(U_t, U*), NaN without ground truth
  double rel_fro_err = std::numeric_limits<double>::quiet_NaN();
  double max_col_rel_err = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t comm_floats = 0;  // cumulative; 0 for centralized runs
};

struct RunTrace {
  std::vector<IterRecord> iters;
  bool converged = false;      // stopping rule fired before T_max
  std::string stop_reason;
  int rank_used = 0;
  double eta = 0.0;
  double alpha = 0.0;          // truncation threshold used at init (when applicable)
  double init_spectral_norm = 0.0;  // top singular-value estimate of the init matrix
  std::vector<std::string> warnings;
};

enum class EtaRule { practical, theorem };
enum class CTildeMode { fixed, automatic };
enum class SvdMethod { auto_select, exact, power };
enum class InitKind { spectral, oracle };

/// Tunables of the truncated spectral initialization.
struct InitConfig {
  double c_tilde = 9.0;
  CTildeMode c_tilde_mode = CTildeMode::fixed;
  SvdMethod svd_method = SvdMethod::auto_select;
  int power_iters = 0;          // 0 = auto budget with early exit
  bool split_alpha = false;     // estimate the threshold from rows not used for the init matrix
  Index dense_operator_max_n = 2000;  // above this, apply the magnitude init matrix as an operator
};

/// Gradient-descent driver tunables.
struct GdConfig {
  EtaRule eta_rule = EtaRule::practical;
  double eta_c = 0.4;           // eta = eta_c / scale^2 (scale per rule)
  int t_max = 400;
  double stop_tol_factor = 0.01;  // stop when SD(U_t, U_{t-1}) <= factor * sqrt(r) ...
  int stop_patience = 3;          // ... for this many consecutive iterations
  bool sample_split = false;
  Index rank = 0;                 // 0 = estimate from the init matrix spectrum
  double rank_energy_b = 85.0;    // percent, for rank estimation
  InitKind init_kind = InitKind::spectral;  // oracle requires ground truth

  void validate() const;
};

/// Inner phase-retrieval solver tunables (per-column min step of the
/// magnitude-only solver).
struct RwfConfig {
  int iters_offset = 5;   // iterations at outer step t: max(iters_offset + t, iters_min)
  int iters_min = 40;
  double step_size = 0.5;
  bool cold_start = false;  // spectral re-init every outer iteration instead of warm start

  int iters_for(int outer_t) const {
    const int v = iters_offset + outer_t;
    return v > iters_min ? v : iters_min;
  }
};

struct SolveResult {
  FactoredEstimate estimate;
  RunTrace trace;
};

}  // namespace lrccs

#endif  // LRCCS_TYPES_HPP
