#include "lrccs/init.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "lrccs/detail/reduce.hpp"
#include "lrccs/errors.hpp"
#include "lrccs/rng.hpp"
#include "lrccs/threading.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lrccs {

namespace {

// Subspace distance without the orthonormality contract check (both inputs
// come from QR here).
double gram_sd(const Eigen::MatrixXd& u1, const Eigen::MatrixXd& u2) {
  const double r = static_cast<double>(u2.cols());
  return std::sqrt(std::max(0.0, r - (u1.transpose() * u2).squaredNorm()));
}

Eigen::MatrixXd thin_q(const Eigen::MatrixXd& a) {
  const Index r = a.cols();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(a.rows(), r);
  const auto& rmat = qr.matrixQR();
  for (Index j = 0; j < r; ++j)
    if (rmat(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

// Deterministic column signs: largest-magnitude entry of each column positive.
void fix_signs(Eigen::MatrixXd& u) {
  for (Index j = 0; j < u.cols(); ++j) {
    Index imax = 0;
    u.col(j).cwiseAbs().maxCoeff(&imax);
    if (u(imax, j) < 0.0) u.col(j) = -u.col(j);
  }
}

int auto_power_budget(Index n, Index q) {
  const double d = static_cast<double>(std::max(n, q));
  return static_cast<int>(std::ceil(10.0 * std::log2(std::max(2.0, d))));
}

// Fixed internal seed for the power-method start block; the start must be
// identical across the centralized and federated paths.
constexpr std::uint64_t kPowerStartSeed = 0x5EEDB10C5ULL;

Eigen::MatrixXd power_start(Index n, Index r) {
  SplitMix64 s(kPowerStartSeed);
  Eigen::MatrixXd v(n, r);
  for (Index j = 0; j < r; ++j)
    for (Index i = 0; i < n; ++i) v(i, j) = s.next_gaussian();
  return thin_q(v);
}

double total_obs_energy(const MeasurementView& mv) {
  double sum = 0.0;
  for (Index k = 0; k < mv.q(); ++k) sum += mv.obs(k).squaredNorm();
  return sum;
}

}  // namespace

double truncation_threshold(const MeasurementView& mv, double c_tilde) {
  if (c_tilde <= 0.0) throw ContractViolation("truncation_threshold: c_tilde must be positive");
  const double mq = static_cast<double>(mv.m()) * static_cast<double>(mv.q());
  if (mq <= 0.0) throw DimensionError("truncation_threshold: empty observation set");
  return c_tilde * total_obs_energy(mv) / mq;
}

double auto_c_tilde(const MeasurementView& mv) {
  const double m = static_cast<double>(mv.m());
  if (m <= 0.0 || mv.q() == 0) throw DimensionError("auto_c_tilde: empty observation set");
  double total = 0.0, max_col = 0.0;
  for (Index k = 0; k < mv.q(); ++k) {
    const double e = mv.obs(k).squaredNorm();
    total += e;
    max_col = std::max(max_col, e);
  }
  if (total == 0.0) throw ContractViolation("auto_c_tilde: all observations are zero");
  return 9.0 * static_cast<double>(mv.q()) * max_col / total;
}

Eigen::MatrixXd build_init_matrix(const MeasurementView& mv, double alpha) {
  if (alpha < 0.0) throw ContractViolation("build_init_matrix: alpha must be nonnegative");
  const Index n = mv.n();
  const Index q = mv.q();
  const double m = static_cast<double>(mv.m());
  Eigen::MatrixXd x0(n, q);

  const int nthreads = effective_threads();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
#endif
  for (Index k = 0; k < q; ++k) {
    const auto y = mv.obs(k);
    Eigen::VectorXd y_trunc = (y.array().square() <= alpha).select(y, 0.0);
#ifndef NDEBUG
    for (Index i = 0; i < y_trunc.size(); ++i)
      assert(y_trunc(i) == 0.0 || y_trunc(i) * y_trunc(i) <= alpha);
#endif
    x0.col(k) = mv.design(k).transpose() * y_trunc / m;
  }
  (void)nthreads;
  return x0;
}

SpectralInit spectral_init(const Eigen::MatrixXd& x0, Index r, const InitConfig& cfg) {
  const Index n = x0.rows();
  const Index q = x0.cols();
  if (r < 1 || r > std::min(n, q))
    throw DimensionError("spectral_init: need 1 <= r <= min(n, q)");

  const bool use_exact = cfg.svd_method == SvdMethod::exact ||
                         (cfg.svd_method == SvdMethod::auto_select && std::min(n, q) <= 2000);

  SpectralInit out;
  if (use_exact) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(x0, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    out.U = svd.matrixU().leftCols(r);
    out.sigma = s.head(std::min<Index>(s.size(), r + 1));
    if (r < s.size() && std::abs(s(r - 1) - s(r)) <= 1e-9 * std::max(1.0, s(0)))
      out.tie_warning = true;  // measure-zero for random data; proceed
    fix_signs(out.U);
    return out;
  }

  const int budget = cfg.power_iters > 0 ? cfg.power_iters : auto_power_budget(n, q);
  const bool early_exit = cfg.power_iters == 0;
  Eigen::MatrixXd v = power_start(n, r);
  int used = 0;
  for (int it = 0; it < budget; ++it) {
    Eigen::MatrixXd w = x0 * (x0.transpose() * v);
    Eigen::MatrixXd v_next = thin_q(w);
    ++used;
    const double delta = gram_sd(v_next, v);
    v = std::move(v_next);
    if (early_exit && delta < 1e-9) break;
  }
  out.U = v;
  out.sigma.resize(r);
  for (Index j = 0; j < r; ++j) out.sigma(j) = (x0.transpose() * v.col(j)).norm();
  // QR keeps the dominant direction first, but sort defensively.
  std::vector<Index> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return out.sigma(a) > out.sigma(b); });
  Eigen::MatrixXd u_sorted(n, r);
  Eigen::VectorXd s_sorted(r);
  for (Index j = 0; j < r; ++j) {
    u_sorted.col(j) = out.U.col(order[static_cast<std::size_t>(j)]);
    s_sorted(j) = out.sigma(order[static_cast<std::size_t>(j)]);
  }
  out.U = std::move(u_sorted);
  out.sigma = std::move(s_sorted);
  out.power_iters_used = used;
  fix_signs(out.U);
  return out;
}

Index estimate_rank(const Eigen::MatrixXd& x0, double b_percent, Index m) {
  if (b_percent <= 0.0 || b_percent > 100.0)
    throw ContractViolation("estimate_rank: b_percent must be in (0, 100]");
  Eigen::BDCSVD<Eigen::MatrixXd> svd(x0);
  const auto& s = svd.singularValues();
  const Index dim_cap = std::min({x0.rows(), x0.cols(), m});
  const Index j_max = std::min<Index>(std::max<Index>(1, dim_cap / 10), s.size());
  double total = 0.0;
  for (Index j = 0; j < j_max; ++j) total += s(j) * s(j);
  if (total == 0.0) return 1;
  const double target = (b_percent / 100.0) * total;
  double cum = 0.0;
  for (Index j = 0; j < j_max; ++j) {
    cum += s(j) * s(j);
    if (cum >= target - 1e-12 * total) return j + 1;
  }
  return j_max;
}

LrprInitResult lrpr_init(const MeasurementView& mag, double c_tilde, Index r,
                         const InitConfig& cfg) {
  const Index n = mag.n();
  const Index q = mag.q();
  const double m = static_cast<double>(mag.m());
  if (r > n) throw DimensionError("lrpr_init: r exceeds the ambient dimension");
  const double mq = m * static_cast<double>(q);
  if (mq <= 0.0) throw DimensionError("lrpr_init: empty observation set");

  LrprInitResult out;
  out.threshold = c_tilde * total_obs_energy(mag) / mq;
  out.mean_col_energy = total_obs_energy(mag) / mq;

  // Truncated squared weights; all-zero weights leave no subspace to find.
  std::vector<Eigen::VectorXd> weights(static_cast<std::size_t>(q));
  double weight_total = 0.0;
  for (Index k = 0; k < q; ++k) {
    const auto y = mag.obs(k);
    Eigen::ArrayXd y2 = y.array().square();
    weights[static_cast<std::size_t>(k)] = (y2 <= out.threshold).select(y2.matrix(), 0.0);
    weight_total += weights[static_cast<std::size_t>(k)].sum();
  }
  if (weight_total == 0.0) throw SolverError("lrpr_init: zero matrix has no top-r subspace");

  if (n <= cfg.dense_operator_max_n) {
    Eigen::MatrixXd yu = Eigen::MatrixXd::Zero(n, n);
    for (Index k = 0; k < q; ++k) {
      const Eigen::MatrixXd scaled =
          weights[static_cast<std::size_t>(k)].cwiseSqrt().asDiagonal() * mag.design(k);
      yu.selfadjointView<Eigen::Lower>().rankUpdate(scaled.transpose());
    }
    yu = yu.selfadjointView<Eigen::Lower>();
    yu /= mq;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(yu);
    const auto& vals = eig.eigenvalues();  // ascending
    out.U0.resize(n, r);
    out.eigvals.resize(std::min<Index>(n, r + 1));
    for (Index j = 0; j < r; ++j) out.U0.col(j) = eig.eigenvectors().col(n - 1 - j);
    for (Index j = 0; j < out.eigvals.size(); ++j) out.eigvals(j) = vals(n - 1 - j);
    if (r < n && std::abs(out.eigvals(r - 1) - out.eigvals(r)) <=
                     1e-9 * std::max(1.0, out.eigvals(0)))
      out.tie_warning = true;
    fix_signs(out.U0);
  } else {
    // Apply Y_U as an operator inside block power iterations.
    const auto apply = [&](const Eigen::MatrixXd& v) {
      std::vector<Eigen::MatrixXd> terms(static_cast<std::size_t>(q));
      const int nthreads = effective_threads();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
#endif
      for (Index k = 0; k < q; ++k) {
        const auto a = mag.design(k);
        terms[static_cast<std::size_t>(k)] =
            a.transpose() * (weights[static_cast<std::size_t>(k)].asDiagonal() * (a * v));
      }
      (void)nthreads;
      Eigen::MatrixXd w = detail::tree_sum(terms);
      w /= mq;
      return w;
    };
    const int budget = cfg.power_iters > 0 ? cfg.power_iters : auto_power_budget(n, q);
    const bool early_exit = cfg.power_iters == 0;
    Eigen::MatrixXd v = power_start(n, r);
    for (int it = 0; it < budget; ++it) {
      Eigen::MatrixXd v_next = thin_q(apply(v));
      const double delta = gram_sd(v_next, v);
      v = std::move(v_next);
      if (early_exit && delta < 1e-9) break;
    }
    out.U0 = v;
    out.eigvals.resize(r);
    const Eigen::MatrixXd av = apply(v);
    for (Index j = 0; j < r; ++j) out.eigvals(j) = v.col(j).dot(av.col(j));
    fix_signs(out.U0);
  }

  const double top = out.eigvals(0);
  const double excess = top - out.mean_col_energy;
  // lambda_1(Y_U) ~ ||X*||_F^2/q + 2 sigma_max^2/q for Gaussian designs.
  out.sigma_max_sq_hat = excess > 0.0 ? static_cast<double>(q) * excess / 2.0
                                      : static_cast<double>(q) * top / 3.0;
  return out;
}

double beta_k(double alpha_over_normsq) {
  if (alpha_over_normsq < 0.0) throw ContractViolation("beta_k: argument must be nonnegative");
  const double c = std::sqrt(alpha_over_normsq);
  return std::erf(c / std::sqrt(2.0)) - c * std::sqrt(2.0 / M_PI) * std::exp(-0.5 * c * c);
}

}  // namespace lrccs
