#pragma once

#include <optional>
#include <string>
#include <vector>

#include "citsdid/design.hpp"
#include "citsdid/ols.hpp"
#include "citsdid/panel.hpp"

namespace citsdid {

struct FitDiagnostics {
  int n = 0;
  int rank = 0;
  int dof = 0;
  double r_squared = 0.0;
  std::vector<std::string> dropped_columns;
  std::vector<std::string> messages;  // warnings (relaxed minimums, empty cells)
};

// A fitted design: named coefficients, the treated group's counterfactual
// (model-implied untreated) series, and the ATT series. For EventStudy the
// att field holds the delta series over every non-reference time and the
// counterfactual/observed series stay empty.
struct EstimationResult {
  DesignSpec spec;
  CoefficientMap coefficients;
  std::vector<double> post_times;
  std::vector<EffectEstimate> att;            // aligned with post_times
  std::vector<EffectEstimate> named_effects;  // LinearCits: tau0, tau1
  std::vector<double> counterfactual;         // treated untreated mean per post time
  std::vector<double> observed_treated;       // weighted treated cell mean per post time
  FitDiagnostics diagnostics;
  OlsFit fit;  // full fit, for downstream contrasts
  // Contrast vectors defining each att entry (att[i].point = att_contrasts[i]'beta);
  // summary effects are built from these.
  std::vector<Eigen::VectorXd> att_contrasts;
};

// Validates, builds the design matrix, fits WLS with the requested SE type,
// and assembles coefficients, counterfactual and ATT series.
EstimationResult estimate(const PanelDataset& panel, const DesignSpec& spec);

// Treated group's model-implied untreated mean at each post time: the design
// row with treatment-effect columns zeroed, covariates evaluated at the
// treated group's post-cell means.
std::vector<double> counterfactual_series(const OlsFit& fit, const DesignSpec& spec,
                                          const PanelDataset& panel);

// Single-time version; throws ConfigError for a pre-period time.
double counterfactual_at(const OlsFit& fit, const DesignSpec& spec,
                         const PanelDataset& panel, double t);

// The fitted ATT series (one estimate per post time; for LinearCits computed
// as tau0 + tau1 * t' with delta-method SEs).
std::vector<EffectEstimate> att_series(const EstimationResult& result);

enum class AttSummaryMethod { MeanOverPost, AtMidpoint };

// mean_over_post: unweighted average of ATT(t) as a single contrast.
// at_midpoint: ATT at the median post time (lower median for even counts).
EffectEstimate summarize_att(const EstimationResult& result, AttSummaryMethod method);

// Aligned per-design ATT(t) table. A design that fails to estimate is
// recorded in errors and skipped; the others proceed.
struct ComparisonTable {
  std::vector<Design> designs;
  std::vector<double> post_times;
  std::vector<std::optional<EstimationResult>> results;  // aligned with designs
  std::vector<std::string> errors;                       // "" when the fit succeeded
  // Set when both GeneralCits and FeDidGroupTrends were estimated: largest
  // absolute ATT(t) gap between them, and whether it is below 1e-6.
  std::optional<double> max_trend_gap;
  std::optional<bool> trend_designs_agree;
};

ComparisonTable compare_designs(const PanelDataset& panel,
                                const std::vector<DesignSpec>& specs);

// Tolerance for the ComparisonTable agreement flag.
inline constexpr double kTrendAgreementTolerance = 1e-6;

}  // namespace citsdid
