#ifndef LRCCS_INIT_HPP
#define LRCCS_INIT_HPP

#include "lrccs/types.hpp"

namespace lrccs {

/// Truncation threshold alpha = c_tilde * sum_ki y_ki^2 / (m q).
double truncation_threshold(const MeasurementView& mv, double c_tilde);

/// Data-driven truncation multiplier: 9 times the plug-in estimate of
/// kappa^2 mu^2, i.e. 9 * q * max_k ||y_k||^2 / sum_k ||y_k||^2.
double auto_c_tilde(const MeasurementView& mv);

/// Truncated back-projection matrix: column k is
/// (1/m) A_k^T (y_k o 1{y_ki^2 <= alpha}). Entries above the threshold
/// contribute nothing.
Eigen::MatrixXd build_init_matrix(const MeasurementView& mv, double alpha);

struct SpectralInit {
  Eigen::MatrixXd U;       // n x r, orthonormal, deterministic column signs
  Eigen::VectorXd sigma;   // leading singular-value estimates (descending)
  bool tie_warning = false;  // sigma_r ~ sigma_{r+1}: subspace ill-defined
  int power_iters_used = 0;  // 0 for the exact path
};

/// Top-r left singular subspace of x0. Uses an exact SVD when
/// min(n, q) <= 2000 (or cfg forces it); otherwise block power iterations on
/// x0 x0^T with QR re-orthonormalization, auto budget
/// ceil(10 log2(max(n, q))) and early exit when successive iterates agree to
/// 1e-9 in subspace distance.
SpectralInit spectral_init(const Eigen::MatrixXd& x0, Index r, const InitConfig& cfg);

/// Smallest r whose leading singular energy reaches b percent of the energy
/// in the first max(1, floor(min(n, q, m)/10)) singular values of x0.
Index estimate_rank(const Eigen::MatrixXd& x0, double b_percent, Index m);

struct LrprInitResult {
  Eigen::MatrixXd U0;        // n x r
  Eigen::VectorXd eigvals;   // leading eigenvalues of the init operator (descending)
  double threshold = 0.0;    // truncation level applied to y^2
  double mean_col_energy = 0.0;  // sum_ki y_ki^2 / (m q), estimates ||X*||_F^2 / q
  double sigma_max_sq_hat = 0.0;  // spectral estimate of sigma_max(X*)^2
  bool tie_warning = false;
};

/// Magnitude-only initialization: top-r eigenvectors of
/// Y_U = (1/(mq)) sum_ki y_ki^2 a_ki a_ki^T 1{y_ki^2 <= threshold}.
/// Y_U is formed densely for n <= cfg.dense_operator_max_n and applied as an
/// operator inside power iterations otherwise.
LrprInitResult lrpr_init(const MeasurementView& mag, double c_tilde, Index r,
                         const InitConfig& cfg);

/// E[zeta^2 1{zeta^2 <= c^2}] for standard normal zeta, with
/// c = sqrt(alpha_over_normsq): erf(c/sqrt(2)) - c sqrt(2/pi) exp(-c^2/2).
double beta_k(double alpha_over_normsq);

}  // namespace lrccs

#endif  // LRCCS_INIT_HPP
