#include "citsdid/ols.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <map>
#include <numeric>

#include "citsdid/error.hpp"

namespace citsdid {

namespace {

constexpr double kPivotTolerance = 1e-10;  // relative to the largest pivot

void check_fit_inputs(const DesignMatrix& X, const Eigen::VectorXd& y,
                      const Eigen::VectorXd& w) {
  const auto n = X.values.rows();
  const auto p = X.values.cols();
  if (n == 0) throw ValidationError("empty data: design matrix has no rows");
  if (y.size() != n || w.size() != n)
    throw ValidationError("design matrix, outcome and weight lengths differ");
  if (static_cast<std::size_t>(p) != X.column_names.size())
    throw ValidationError("column_names length does not match design matrix");
  if (!X.values.allFinite()) throw ValidationError("non-finite design matrix entry");
  if (!y.allFinite()) throw ValidationError("non-finite outcome");
  for (Eigen::Index i = 0; i < n; ++i)
    if (!(w[i] > 0.0) || !std::isfinite(w[i]))
      throw ValidationError("weights must be strictly positive and finite");
}

// Gathers the retained (pivot) columns of X in QR pivot order.
Eigen::MatrixXd retained_columns(const DesignMatrix& X,
                                 const std::vector<int>& pivot_to_original, int rank) {
  Eigen::MatrixXd Xr(X.values.rows(), rank);
  for (int i = 0; i < rank; ++i) Xr.col(i) = X.values.col(pivot_to_original[i]);
  return Xr;
}

// Scatters a rank x rank matrix (pivot order) into the full p x p frame,
// zero elsewhere.
Eigen::MatrixXd scatter(const Eigen::MatrixXd& small,
                        const std::vector<int>& pivot_to_original, Eigen::Index p) {
  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(p, p);
  const int rank = static_cast<int>(small.rows());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      full(pivot_to_original[i], pivot_to_original[j]) = small(i, j);
  return full;
}

struct QrPieces {
  std::vector<int> pivot_to_original;  // pivot position -> original column
  int rank = 0;
  Eigen::MatrixXd bread;  // (Xr' W Xr)^-1 in pivot order, rank x rank
};

// Recomputes the pivoted factorization pieces needed for any covariance
// estimator. Cheap relative to the fit itself and keeps OlsFit small.
QrPieces qr_pieces(const DesignMatrix& X, const Eigen::VectorXd& w) {
  const Eigen::VectorXd sw = w.array().sqrt();
  Eigen::MatrixXd Xw = sw.asDiagonal() * X.values;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Xw);
  qr.setThreshold(kPivotTolerance);

  QrPieces pieces;
  pieces.rank = static_cast<int>(qr.rank());
  const auto& perm = qr.colsPermutation().indices();
  pieces.pivot_to_original.assign(perm.data(), perm.data() + perm.size());

  const int r = pieces.rank;
  if (r > 0) {
    Eigen::MatrixXd R = qr.matrixR().topLeftCorner(r, r).triangularView<Eigen::Upper>();
    Eigen::MatrixXd Rinv =
        R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(r, r));
    pieces.bread = Rinv * Rinv.transpose();  // (R'R)^-1 = (Xr'WXr)^-1
  }
  return pieces;
}

}  // namespace

OlsFit fit_wls(const DesignMatrix& X, const Eigen::VectorXd& y,
               const Eigen::VectorXd& w) {
  check_fit_inputs(X, y, w);
  const Eigen::Index n = X.values.rows();
  const Eigen::Index p = X.values.cols();

  const Eigen::VectorXd sw = w.array().sqrt();
  Eigen::MatrixXd Xw = sw.asDiagonal() * X.values;
  Eigen::VectorXd yw = sw.asDiagonal() * y;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Xw);
  qr.setThreshold(kPivotTolerance);
  const int rank = static_cast<int>(qr.rank());

  OlsFit fit;
  fit.column_names = X.column_names;
  fit.rank = rank;
  fit.dof = static_cast<int>(n) - rank;

  // Solve R11 u = (Q'yw) on the pivot columns and pin the rest to zero, so a
  // dropped column always reads as coefficient 0 rather than an arbitrary
  // least-norm blend.
  Eigen::VectorXd qty = qr.householderQ().transpose() * yw;
  Eigen::VectorXd u = Eigen::VectorXd::Zero(p);
  if (rank > 0) {
    u.head(rank) = qr.matrixR()
                       .topLeftCorner(rank, rank)
                       .triangularView<Eigen::Upper>()
                       .solve(qty.head(rank));
  }
  fit.coefficients = qr.colsPermutation() * u;

  const auto& perm = qr.colsPermutation().indices();
  for (Eigen::Index i = rank; i < p; ++i)
    fit.dropped_columns.push_back(X.column_names[perm[i]]);
  std::sort(fit.dropped_columns.begin(), fit.dropped_columns.end());

  fit.residuals = y - X.values * fit.coefficients;

  const double rss = (w.array() * fit.residuals.array().square()).sum();
  fit.sigma2 = fit.dof > 0 ? rss / fit.dof : 0.0;

  const double wsum = w.sum();
  const double ybar = (w.array() * y.array()).sum() / wsum;
  const double tss = (w.array() * (y.array() - ybar).square()).sum();
  fit.r_squared = tss > 0.0 ? 1.0 - rss / tss : (rss <= 1e-24 ? 1.0 : 0.0);

  fit.vcov = vcov_estimate(fit, X, y, w, SeType::Classical);
  return fit;
}

Eigen::MatrixXd vcov_estimate(const OlsFit& fit, const DesignMatrix& X,
                              const Eigen::VectorXd& y, const Eigen::VectorXd& w,
                              SeType se_type) {
  const Eigen::Index n = X.values.rows();
  const Eigen::Index p = X.values.cols();
  const auto pieces = qr_pieces(X, w);
  const int rank = pieces.rank;
  if (rank == 0) return Eigen::MatrixXd::Zero(p, p);

  if (se_type == SeType::Classical)
    return scatter(fit.sigma2 * pieces.bread, pieces.pivot_to_original, p);

  const Eigen::MatrixXd Xr = retained_columns(X, pieces.pivot_to_original, rank);
  const Eigen::VectorXd score_scale = w.array() * fit.residuals.array();  // w_i r_i

  Eigen::MatrixXd meat = Eigen::MatrixXd::Zero(rank, rank);
  double factor = 1.0;

  if (se_type == SeType::Hc1) {
    // sum (w_i r_i)^2 x_i x_i'
    meat = Xr.transpose() * score_scale.array().square().matrix().asDiagonal() * Xr;
    factor = fit.dof > 0 ? static_cast<double>(n) / fit.dof : 1.0;
  } else {  // ClusterByUnit
    if (X.cluster_ids.size() != static_cast<std::size_t>(n))
      throw ValidationError("cluster SEs requested but cluster_ids missing");
    std::map<std::string, Eigen::VectorXd> scores;
    for (Eigen::Index i = 0; i < n; ++i) {
      auto [it, inserted] =
          scores.try_emplace(X.cluster_ids[i], Eigen::VectorXd::Zero(rank));
      it->second += score_scale[i] * Xr.row(i).transpose();
    }
    const auto n_clusters = scores.size();
    if (n_clusters < 2)
      throw ValidationError("cluster SEs need at least 2 clusters, got " +
                            std::to_string(n_clusters));
    for (const auto& [id, s] : scores) meat += s * s.transpose();
    const double g = static_cast<double>(n_clusters);
    factor = g / (g - 1.0) *
             (static_cast<double>(n) - 1.0) / std::max(1, fit.dof);
  }

  Eigen::MatrixXd sandwich = factor * pieces.bread * meat * pieces.bread;
  return scatter(sandwich, pieces.pivot_to_original, p);
}

EffectEstimate linear_combination(const OlsFit& fit, const Eigen::VectorXd& weights,
                                  double ci_level) {
  if (weights.size() != fit.coefficients.size())
    throw ConfigError("contrast weight length does not match coefficient count");
  EffectEstimate estimate;
  estimate.point = weights.dot(fit.coefficients);
  const double variance = weights.dot(fit.vcov * weights);
  estimate.se = variance > 0.0 ? std::sqrt(variance) : 0.0;
  const double z = normal_quantile(0.5 + ci_level / 2.0);
  estimate.ci_low = estimate.point - z * estimate.se;
  estimate.ci_high = estimate.point + z * estimate.se;
  return estimate;
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("normal quantile needs p in (0,1)");
  static const boost::math::normal_distribution<double> standard_normal;
  return boost::math::quantile(standard_normal, p);
}

}  // namespace citsdid
