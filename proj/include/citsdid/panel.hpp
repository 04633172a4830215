#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace citsdid {

// One row of a long-format two-group panel. Group codes are normalized at
// ingestion: 0 = comparison, 1 = treated.
struct Observation {
  std::string unit_id;
  int group = 0;
  double time = 0.0;
  double outcome = 0.0;
  std::vector<double> covariates;
  double weight = 1.0;
};

// Immutable after construction; estimations never mutate a panel, so sharing
// one dataset across concurrent fits is safe.
struct PanelDataset {
  std::vector<Observation> rows;
  std::vector<std::string> covariate_names;

  // Ingestion metadata: which raw group labels were mapped to 1 / 0.
  std::string treated_label;
  std::string comparison_label;

  // Ordered distinct time values present in the data.
  std::vector<double> time_points() const;
  // Distinct group codes present (sorted).
  std::vector<int> group_codes() const;
};

enum class Design { FeDid, FeDidGroupTrends, GeneralCits, LinearCits, EventStudy };
enum class SeType { Classical, Hc1, ClusterByUnit };

// Estimation configuration. center_time_at_t0 makes trend coefficients and
// the linear-CITS intercept effect interpretable at the first post period.
struct DesignSpec {
  Design design = Design::FeDid;
  double t0 = 0.0;
  bool center_time_at_t0 = true;
  // Covariates (by name) entering the model linearly and additively. Empty
  // means no covariate adjustment even if the panel carries covariates.
  std::vector<std::string> covariate_names;
  SeType se_type = SeType::Hc1;
  double ci_level = 0.95;
  // Event study only; defaults to the last pre-period time when unset.
  std::optional<double> reference_period;
  bool enforce_paper_minimums = true;
  // Replace the per-post-time treatment dummies with a single pooled tau
  // (FeDid, FeDidGroupTrends, GeneralCits only).
  bool pooled_treatment_effect = false;
};

struct Coefficient {
  std::string name;
  double estimate = 0.0;
  double se = 0.0;
};

// Named coefficients keyed by role (beta0_0, gamma[t], tau[t], ...). The key
// set is a deterministic function of (design, time_points, t0, covariates).
struct CoefficientMap {
  std::vector<Coefficient> items;  // in design-matrix column order

  const Coefficient* find(std::string_view name) const;
  std::vector<std::string> keys() const;
};

struct Violation {
  std::string message;
  std::optional<std::size_t> row;  // offending row index when applicable
};

// Reports every invariant violation; an empty result means the panel is valid.
std::vector<Violation> validate_panel(const PanelDataset& panel);

// Throws ValidationError listing all violations when the panel is invalid.
void require_valid_panel(const PanelDataset& panel);

struct PeriodSplit {
  std::vector<double> pre;   // t < t0
  std::vector<double> post;  // t >= t0
};

// Partition of the panel's time points at t0. Throws ConfigError when t0 is
// outside (min, max] of the observed times.
PeriodSplit split_periods(const PanelDataset& panel, double t0);
PeriodSplit split_periods(const std::vector<double>& time_points, double t0);

const char* design_name(Design design);
std::optional<Design> design_from_name(std::string_view name);
const char* se_type_name(SeType se);
std::optional<SeType> se_type_from_name(std::string_view name);

// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

}  // namespace citsdid
