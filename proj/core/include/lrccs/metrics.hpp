#ifndef LRCCS_METRICS_HPP
#define LRCCS_METRICS_HPP

#include "lrccs/types.hpp"

namespace lrccs {

/// Frobenius sin-theta distance between the column spans of two n x r basis
/// matrices: ||(I - U1 U1^T) U2||_F, computed via the Gram identity
/// sqrt(max(0, r - ||U1^T U2||_F^2)). Symmetric for equal-shape inputs.
/// Throws ContractViolation if either input is not orthonormal to 1e-8.
double subspace_distance(const Eigen::MatrixXd& u1, const Eigen::MatrixXd& u2);

/// ||U^T U - I||_F, the orthonormality defect used in contracts and traces.
double orthonormality_defect(const Eigen::MatrixXd& u);

/// Sign-invariant distance between real vectors: min(||a - b||, ||a + b||).
double phase_invariant_dist(const Eigen::VectorXd& x_true, const Eigen::VectorXd& x_hat);

/// ||Xhat - Xstar||_F / ||Xstar||_F. With phase_invariant, each column of
/// Xhat is sign-aligned to the corresponding column of Xstar first.
double matrix_rel_err(const Eigen::MatrixXd& x_hat, const Eigen::MatrixXd& x_star,
                      bool phase_invariant = false);

/// Per-column relative errors dist(x_hat_k, x*_k) / ||x*_k||.
Eigen::VectorXd column_errs(const Eigen::MatrixXd& x_hat, const Eigen::MatrixXd& x_star,
                            bool phase_invariant = false);

/// CSV header shared by all trace writers.
const char* iter_record_csv_header();

/// One CSV row: iter,elapsed_s,sd,rel_fro_err,max_col_rel_err,comm_floats.
std::string to_csv_row(const IterRecord& rec);

}  // namespace lrccs

#endif  // LRCCS_METRICS_HPP
