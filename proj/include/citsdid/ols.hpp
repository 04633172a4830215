#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "citsdid/panel.hpp"

namespace citsdid {

struct DesignMatrix {
  Eigen::MatrixXd values;                 // n x p, finite
  std::vector<std::string> column_names;  // length p, coefficient roles
  std::vector<std::string> cluster_ids;   // length n when cluster SEs are wanted
};

// Weighted least-squares fit. Coefficients of rank-deficient columns are
// pinned to zero and reported by name in dropped_columns; vcov rows/columns
// of dropped coefficients are zero.
struct OlsFit {
  Eigen::VectorXd coefficients;  // length p
  Eigen::MatrixXd vcov;          // p x p, symmetric PSD on retained columns
  Eigen::VectorXd residuals;     // length n, y - X*beta (unweighted)
  int rank = 0;
  int dof = 0;  // n - rank
  std::vector<std::string> column_names;
  std::vector<std::string> dropped_columns;
  double sigma2 = 0.0;     // weighted RSS / dof (0 when dof == 0)
  double r_squared = 0.0;  // weighted, centered
};

// Minimizes sum_i w_i (y_i - x_i'beta)^2 via column-pivoted Householder QR of
// sqrt(W)X. Rank detection uses a relative pivot threshold of 1e-10 times the
// largest pivot. The stored vcov is the classical estimate; use vcov_estimate
// to select hc1 or cluster-robust covariance.
OlsFit fit_wls(const DesignMatrix& X, const Eigen::VectorXd& y,
               const Eigen::VectorXd& w);

// Covariance of the coefficient estimates for a fit produced from the same
// (X, y, w):
//   classical        sigma^2 (X'WX)^-1
//   hc1              (X'WX)^-1 [sum (w_i r_i)^2 x_i x_i'] (X'WX)^-1 * n/(n-p)
//   cluster_by_unit  same sandwich with scores summed within clusters and
//                    G/(G-1) * (n-1)/(n-p) small-sample factor
// Cluster SEs require X.cluster_ids with at least two distinct values.
Eigen::MatrixXd vcov_estimate(const OlsFit& fit, const DesignMatrix& X,
                              const Eigen::VectorXd& y, const Eigen::VectorXd& w,
                              SeType se_type);

// A point estimate with a normal-approximation confidence interval.
struct EffectEstimate {
  double point = 0.0;
  double se = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::optional<double> time;
  std::string label;
};

// Delta-method estimate of weights'beta: point = w'beta, se = sqrt(w'Vw),
// CI from the normal quantile at ci_level.
EffectEstimate linear_combination(const OlsFit& fit, const Eigen::VectorXd& weights,
                                  double ci_level);

// Inverse standard normal CDF.
double normal_quantile(double p);

}  // namespace citsdid
