#include "citsdid/panel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "citsdid/error.hpp"

namespace citsdid {

std::vector<double> PanelDataset::time_points() const {
  std::set<double> distinct;
  for (const auto& obs : rows) distinct.insert(obs.time);
  return {distinct.begin(), distinct.end()};
}

std::vector<int> PanelDataset::group_codes() const {
  std::set<int> distinct;
  for (const auto& obs : rows) distinct.insert(obs.group);
  return {distinct.begin(), distinct.end()};
}

const Coefficient* CoefficientMap::find(std::string_view name) const {
  for (const auto& item : items)
    if (item.name == name) return &item;
  return nullptr;
}

std::vector<std::string> CoefficientMap::keys() const {
  std::vector<std::string> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(item.name);
  return out;
}

std::vector<Violation> validate_panel(const PanelDataset& panel) {
  std::vector<Violation> violations;

  const auto groups = panel.group_codes();
  if (groups.size() != 2) {
    violations.push_back({"group count = " + std::to_string(groups.size()) +
                              " (exactly two groups {0=comparison, 1=treated} required)",
                          std::nullopt});
  } else if (groups[0] != 0 || groups[1] != 1) {
    violations.push_back({"group codes must be {0, 1}", std::nullopt});
  }

  const std::size_t n_cov = panel.covariate_names.size();
  for (std::size_t i = 0; i < panel.rows.size(); ++i) {
    const auto& obs = panel.rows[i];
    if (!std::isfinite(obs.outcome))
      violations.push_back({"non-finite outcome at row " + std::to_string(i), i});
    if (!std::isfinite(obs.time))
      violations.push_back({"non-finite time at row " + std::to_string(i), i});
    if (!(obs.weight > 0.0) || !std::isfinite(obs.weight))
      violations.push_back({"non-positive weight at row " + std::to_string(i), i});
    if (obs.covariates.size() != n_cov)
      violations.push_back({"covariate vector length " + std::to_string(obs.covariates.size()) +
                                " at row " + std::to_string(i) + " (expected " +
                                std::to_string(n_cov) + ")",
                            i});
    else
      for (double x : obs.covariates)
        if (!std::isfinite(x)) {
          violations.push_back({"non-finite covariate at row " + std::to_string(i), i});
          break;
        }
  }
  return violations;
}

void require_valid_panel(const PanelDataset& panel) {
  const auto violations = validate_panel(panel);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid panel:";
  for (const auto& v : violations) msg << "\n  - " << v.message;
  throw ValidationError(msg.str());
}

PeriodSplit split_periods(const std::vector<double>& time_points, double t0) {
  if (time_points.empty()) throw ConfigError("panel has no time points");
  if (!(t0 > time_points.front()) || !(t0 <= time_points.back()))
    throw ConfigError("t0 = " + format_double(t0) + " outside (" +
                      format_double(time_points.front()) + ", " +
                      format_double(time_points.back()) + "] of observed times");
  PeriodSplit split;
  for (double t : time_points)
    (t < t0 ? split.pre : split.post).push_back(t);
  return split;
}

PeriodSplit split_periods(const PanelDataset& panel, double t0) {
  return split_periods(panel.time_points(), t0);
}

const char* design_name(Design design) {
  switch (design) {
    case Design::FeDid: return "fe-did";
    case Design::FeDidGroupTrends: return "fe-did-trends";
    case Design::GeneralCits: return "general-cits";
    case Design::LinearCits: return "linear-cits";
    case Design::EventStudy: return "event-study";
  }
  return "unknown";
}

std::optional<Design> design_from_name(std::string_view name) {
  if (name == "fe-did" || name == "fe_did") return Design::FeDid;
  if (name == "fe-did-trends" || name == "fe_did_trends") return Design::FeDidGroupTrends;
  if (name == "general-cits" || name == "general_cits") return Design::GeneralCits;
  if (name == "linear-cits" || name == "linear_cits") return Design::LinearCits;
  if (name == "event-study" || name == "event_study") return Design::EventStudy;
  return std::nullopt;
}

const char* se_type_name(SeType se) {
  switch (se) {
    case SeType::Classical: return "classical";
    case SeType::Hc1: return "hc1";
    case SeType::ClusterByUnit: return "cluster";
  }
  return "unknown";
}

std::optional<SeType> se_type_from_name(std::string_view name) {
  if (name == "classical") return SeType::Classical;
  if (name == "hc1") return SeType::Hc1;
  if (name == "cluster" || name == "cluster_by_unit") return SeType::ClusterByUnit;
  return std::nullopt;
}

std::string format_double(double value) {
  char buffer[32];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

}  // namespace citsdid
