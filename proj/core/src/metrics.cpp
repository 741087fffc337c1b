#include "lrccs/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lrccs/errors.hpp"

namespace lrccs {

namespace {
constexpr double kOrthoTol = 1e-8;
}

double orthonormality_defect(const Eigen::MatrixXd& u) {
  const Index r = u.cols();
  return (u.transpose() * u - Eigen::MatrixXd::Identity(r, r)).norm();
}

double subspace_distance(const Eigen::MatrixXd& u1, const Eigen::MatrixXd& u2) {
  if (u1.rows() != u2.rows())
    throw DimensionError("subspace_distance: ambient dimensions differ");
  if (orthonormality_defect(u1) > kOrthoTol || orthonormality_defect(u2) > kOrthoTol)
    throw ContractViolation("subspace_distance: input is not orthonormal to 1e-8");
  const double r = static_cast<double>(u2.cols());
  const double overlap = (u1.transpose() * u2).squaredNorm();
  return std::sqrt(std::max(0.0, r - overlap));
}

double phase_invariant_dist(const Eigen::VectorXd& x_true, const Eigen::VectorXd& x_hat) {
  if (x_true.size() != x_hat.size())
    throw DimensionError("phase_invariant_dist: length mismatch");
  return std::min((x_true - x_hat).norm(), (x_true + x_hat).norm());
}

double matrix_rel_err(const Eigen::MatrixXd& x_hat, const Eigen::MatrixXd& x_star,
                      bool phase_invariant) {
  if (x_hat.rows() != x_star.rows() || x_hat.cols() != x_star.cols())
    throw DimensionError("matrix_rel_err: shape mismatch");
  const double denom = x_star.norm();
  if (denom == 0.0) throw ContractViolation("matrix_rel_err: reference matrix is zero");
  if (!phase_invariant) return (x_hat - x_star).norm() / denom;
  double sq = 0.0;
  for (Index k = 0; k < x_star.cols(); ++k) {
    const double d = phase_invariant_dist(x_star.col(k), x_hat.col(k));
    sq += d * d;
  }
  return std::sqrt(sq) / denom;
}

Eigen::VectorXd column_errs(const Eigen::MatrixXd& x_hat, const Eigen::MatrixXd& x_star,
                            bool phase_invariant) {
  if (x_hat.rows() != x_star.rows() || x_hat.cols() != x_star.cols())
    throw DimensionError("column_errs: shape mismatch");
  Eigen::VectorXd errs(x_star.cols());
  for (Index k = 0; k < x_star.cols(); ++k) {
    const double denom = x_star.col(k).norm();
    if (denom == 0.0) throw ContractViolation("column_errs: reference column is zero");
    const double d = phase_invariant ? phase_invariant_dist(x_star.col(k), x_hat.col(k))
                                     : (x_star.col(k) - x_hat.col(k)).norm();
    errs(k) = d / denom;
  }
  return errs;
}

const char* iter_record_csv_header() {
  return "iter,elapsed_s,sd,rel_fro_err,max_col_rel_err,comm_floats";
}

std::string to_csv_row(const IterRecord& rec) {
  char buf[192];
  std::snprintf(buf, sizeof(buf), "%d,%.6f,%.17g,%.17g,%.17g,%llu", rec.iter, rec.elapsed_s,
                rec.sd, rec.rel_fro_err, rec.max_col_rel_err,
                static_cast<unsigned long long>(rec.comm_floats));
  return buf;
}

}  // namespace lrccs
