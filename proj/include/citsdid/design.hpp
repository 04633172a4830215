#pragma once

#include <optional>
#include <string>
#include <vector>

#include "citsdid/ols.hpp"
#include "citsdid/panel.hpp"

namespace citsdid {

// Minimum time-point counts per design. The defaults are the published
// minimums; the identification minimums are what the algebra needs.
struct DesignRequirements {
  int min_pre = 1;
  int min_post = 1;
  int identification_min_pre = 1;
  int identification_min_post = 1;
};

DesignRequirements requirements_for(Design design);

// Checks the panel's pre/post counts against the design's minimums. Throws
// ValidationError naming the design and the deficit. When
// spec.enforce_paper_minimums is false, only the identification minimums are
// enforced and a warning is returned for counts below the published rule.
std::vector<std::string> validate_design_requirements(const PanelDataset& panel,
                                                      const DesignSpec& spec);

enum class ColumnRole {
  Intercept,      // beta0_0
  Time,           // beta1_0, centered time t'
  Group,          // beta0_1
  GroupTime,      // beta1_1, g * t'
  Post,           // betaCheck0_0, I{t >= t0}
  PostTime,       // betaCheck1_0, I{t >= t0} * t'
  CompPostShift,  // betaCheck_k_0[k], I{t == k} for post k
  TimeEffect,     // gamma[s], I{t == s} for s != first time
  TreatedPost,    // tau[k] = g * I{t == k}, or pooled tau = g * I{t >= t0}
  TreatedPostIntercept,  // tau0, g * I{t >= t0}
  TreatedPostSlope,      // tau1, g * I{t >= t0} * t'
  GroupTimeEffect,       // delta[s], g * I{t == s} for s != reference
  Covariate,             // theta[name]
};

struct Column {
  ColumnRole role;
  double time = 0.0;      // the indexed time for per-time roles
  int covariate = -1;     // index into DesignLayout::covariate_indices
  std::string name;
};

// Resolved column structure of one design on one panel. fill_row is the
// single source of truth for how a (group, time, covariates) cell maps onto
// the regressors; both the design matrix and the counterfactual predictions
// are built from it.
struct DesignLayout {
  Design design;
  double t0 = 0.0;
  bool center_time = true;
  double reference_period = 0.0;  // event study only
  std::vector<double> time_points;
  std::vector<double> pre_times;
  std::vector<double> post_times;
  std::vector<Column> columns;
  // Panel covariate indices for the spec's covariate_names, in spec order.
  std::vector<int> covariate_indices;
  bool pooled = false;

  double centered(double t) const { return center_time ? t - t0 : t; }
  std::size_t n_columns() const { return columns.size(); }
  std::vector<std::string> column_names() const;

  // Writes the regressor row for a (group, time) cell. `covariates` holds the
  // values for covariate_indices, in order; pass nullptr when there are none.
  // When zero_treatment is set the treatment-effect columns (tau*, delta*)
  // are zeroed, which yields the untreated potential-outcome row.
  void fill_row(double* row, int group, double time, const double* covariates,
                bool zero_treatment = false) const;
};

DesignLayout make_layout(const PanelDataset& panel, const DesignSpec& spec);

// Builds the design matrix for spec.design after requirement validation.
// cluster_ids are filled with unit ids.
DesignMatrix build_design_matrix(const PanelDataset& panel, const DesignSpec& spec);

// Per-design builders; each overrides spec.design accordingly.
DesignMatrix build_fe_did(const PanelDataset& panel, const DesignSpec& spec);
DesignMatrix build_fe_did_trends(const PanelDataset& panel, const DesignSpec& spec);
DesignMatrix build_general_cits(const PanelDataset& panel, const DesignSpec& spec);
DesignMatrix build_linear_cits(const PanelDataset& panel, const DesignSpec& spec);
DesignMatrix build_event_study(const PanelDataset& panel, const DesignSpec& spec);

// The CoefficientMap key set for (design, time_points, t0, covariates).
std::vector<std::string> coefficient_keys(const PanelDataset& panel,
                                          const DesignSpec& spec);

}  // namespace citsdid
