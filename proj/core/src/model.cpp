#include "lrccs/model.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "lrccs/errors.hpp"
#include "lrccs/rng.hpp"
#include "lrccs/threading.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lrccs {

void ProblemDims::validate() const {
  if (r < 1 || r > std::min(n, q))
    throw DimensionError("ProblemDims: need 1 <= r <= min(n, q), got n=" + std::to_string(n) +
                         " q=" + std::to_string(q) + " r=" + std::to_string(r));
  if (m < 1) throw DimensionError("ProblemDims: need m >= 1, got m=" + std::to_string(m));
}

namespace {

// Fills column-major, one fixed order per column stream.
void fill_gaussian(Eigen::Ref<Eigen::MatrixXd> out, SplitMix64& stream) {
  for (Index j = 0; j < out.cols(); ++j)
    for (Index i = 0; i < out.rows(); ++i) out(i, j) = stream.next_gaussian();
}

// Thin Q factor with the R-diagonal sign convention (R_ii >= 0), so the
// basis is a deterministic function of the input.
Eigen::MatrixXd thin_q(const Eigen::MatrixXd& a) {
  const Index r = a.cols();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(a.rows(), r);
  const auto& rmat = qr.matrixQR();
  for (Index j = 0; j < r; ++j)
    if (rmat(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

}  // namespace

IncoherenceStats incoherence_of(const Eigen::MatrixXd& x, Index r) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(x);
  const auto& s = svd.singularValues();
  IncoherenceStats st;
  st.sigma_max = s(0);
  st.sigma_min = s(r - 1);
  if (st.sigma_min <= 0.0) throw SolverError("incoherence_of: matrix is rank-deficient below r");
  st.kappa = st.sigma_max / st.sigma_min;
  const Index q = x.cols();
  double max_col = 0.0;
  for (Index k = 0; k < q; ++k) max_col = std::max(max_col, x.col(k).norm());
  st.mu = std::max(1.0, max_col * std::sqrt(static_cast<double>(q) / static_cast<double>(r)) /
                            st.sigma_max);
  return st;
}

GroundTruth gen_ground_truth(const ProblemDims& dims, std::uint64_t seed) {
  dims.validate();
  GroundTruth gt;

  SplitMix64 basis_stream(domain_seed(seed, rng_tag::kGroundTruthBasis));
  Eigen::MatrixXd g(dims.n, dims.r);
  fill_gaussian(g, basis_stream);
  gt.Ustar = thin_q(g);

  gt.Bstar_tilde.resize(dims.r, dims.q);
  const std::uint64_t coeff_domain = domain_seed(seed, rng_tag::kGroundTruthCoeffs);
  for (Index k = 0; k < dims.q; ++k) {
    SplitMix64 s = column_stream(coeff_domain, static_cast<std::uint64_t>(k));
    for (Index i = 0; i < dims.r; ++i) gt.Bstar_tilde(i, k) = s.next_gaussian();
  }

  const IncoherenceStats st = incoherence_of(gt.Bstar_tilde, dims.r);
  gt.sigma_max = st.sigma_max;
  gt.sigma_min = st.sigma_min;
  gt.kappa = st.kappa;
  gt.mu = st.mu;
  return gt;
}

MeasurementSet gen_measurements(const GroundTruth& gt, Index m, std::uint64_t seed) {
  if (m < 1) throw DimensionError("gen_measurements: need m >= 1");
  const Index n = gt.n();
  const Index q = gt.q();

  auto designs = std::make_shared<DesignList>(static_cast<std::size_t>(q));
  std::vector<Eigen::VectorXd> obs(static_cast<std::size_t>(q));
  const std::uint64_t design_domain = domain_seed(seed, rng_tag::kDesign);

  const int nthreads = effective_threads();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads)
#endif
  for (Index k = 0; k < q; ++k) {
    SplitMix64 s = column_stream(design_domain, static_cast<std::uint64_t>(k));
    Eigen::MatrixXd a(m, n);
    fill_gaussian(a, s);
    obs[static_cast<std::size_t>(k)] = a * gt.column(k);
    (*designs)[static_cast<std::size_t>(k)] = std::move(a);
  }
  (void)nthreads;

  MeasurementSet ms;
  ms.dims = ProblemDims{n, q, gt.r(), m};
  ms.designs = std::move(designs);
  ms.obs = std::move(obs);
  ms.seed = seed;
  return ms;
}

MagnitudeSet magnitudes_of(const MeasurementSet& ms) {
  MagnitudeSet mag;
  mag.dims = ms.dims;
  mag.designs = ms.designs;
  mag.obs.reserve(ms.obs.size());
  for (const auto& y : ms.obs) mag.obs.push_back(y.cwiseAbs());
  mag.seed = ms.seed;
  return mag;
}

SplitMeasurements split_for_sampling(const MeasurementSet& ms, Index t_count) {
  const Index parts = 2 * t_count + 1;
  if (t_count < 1) throw InfeasibleSplit("split_for_sampling: need T >= 1");
  if (ms.dims.m < parts)
    throw InfeasibleSplit("split_for_sampling: m=" + std::to_string(ms.dims.m) +
                          " rows cannot form " + std::to_string(parts) + " nonempty partitions");

  SplitMeasurements sp;
  sp.master = &ms;
  sp.t_count = t_count;
  const Index base = ms.dims.m / parts;
  const Index rem = ms.dims.m % parts;
  Index offset = 0;
  for (Index tau = 0; tau < parts; ++tau) {
    const Index size = base + (tau < rem ? 1 : 0);  // larger partitions first
    sp.offsets.push_back(offset);
    sp.sizes.push_back(size);
    offset += size;
  }
  return sp;
}

}  // namespace lrccs
