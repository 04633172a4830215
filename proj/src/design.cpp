#include "citsdid/design.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "citsdid/error.hpp"

namespace citsdid {

namespace {

std::string indexed(const char* base, double t) {
  return std::string(base) + "[" + format_double(t) + "]";
}

// Published minimums first; identification minimums are what the design
// matrix needs to be full rank.
const DesignRequirements kFeDid{1, 1, 1, 1};
const DesignRequirements kFeDidTrends{4, 1, 2, 1};
const DesignRequirements kGeneralCits{4, 1, 2, 1};
const DesignRequirements kLinearCits{4, 4, 2, 2};
const DesignRequirements kEventStudy{1, 1, 1, 1};

std::string requirement_phrase(Design design) {
  switch (design) {
    case Design::FeDid:
      return "requires only two observation points (one pre and one post)";
    case Design::FeDidGroupTrends:
    case Design::GeneralCits:
      return "requires at least five observation points (four pre and one post)";
    case Design::LinearCits:
      return "requires at least eight (four pre and four post)";
    case Design::EventStudy:
      return "requires at least two observation points (one pre and one post)";
  }
  return {};
}

}  // namespace

DesignRequirements requirements_for(Design design) {
  switch (design) {
    case Design::FeDid: return kFeDid;
    case Design::FeDidGroupTrends: return kFeDidTrends;
    case Design::GeneralCits: return kGeneralCits;
    case Design::LinearCits: return kLinearCits;
    case Design::EventStudy: return kEventStudy;
  }
  return kFeDid;
}

std::vector<std::string> validate_design_requirements(const PanelDataset& panel,
                                                      const DesignSpec& spec) {
  const auto split = split_periods(panel, spec.t0);
  const int n_pre = static_cast<int>(split.pre.size());
  const int n_post = static_cast<int>(split.post.size());
  const auto req = requirements_for(spec.design);

  const int need_pre = spec.enforce_paper_minimums ? req.min_pre : req.identification_min_pre;
  const int need_post = spec.enforce_paper_minimums ? req.min_post : req.identification_min_post;

  if (n_pre < need_pre || n_post < need_post) {
    std::ostringstream msg;
    msg << design_name(spec.design) << " " << requirement_phrase(spec.design) << "; got "
        << n_pre << " pre and " << n_post << " post time points";
    if (n_pre < need_pre) msg << " (" << (need_pre - n_pre) << " more pre needed)";
    if (n_post < need_post) msg << " (" << (need_post - n_post) << " more post needed)";
    throw ValidationError(msg.str());
  }

  std::vector<std::string> warnings;
  if (!spec.enforce_paper_minimums &&
      (n_pre < req.min_pre || n_post < req.min_post)) {
    std::ostringstream msg;
    msg << design_name(spec.design) << ": " << n_pre << " pre and " << n_post
        << " post time points is below the recommended minimum of " << req.min_pre
        << " pre and " << req.min_post
        << " post; the fit is identified but rests entirely on the functional form";
    warnings.push_back(msg.str());
  }

  if (spec.design == Design::EventStudy) {
    const double ref = spec.reference_period.value_or(split.pre.back());
    if (!(ref < spec.t0))
      throw ConfigError("event-study reference period " + format_double(ref) +
                        " must lie before t0 = " + format_double(spec.t0));
    const auto times = panel.time_points();
    if (std::find(times.begin(), times.end(), ref) == times.end())
      throw ConfigError("event-study reference period " + format_double(ref) +
                        " is not an observed time point");
  }
  return warnings;
}

std::vector<std::string> DesignLayout::column_names() const {
  std::vector<std::string> names;
  names.reserve(columns.size());
  for (const auto& column : columns) names.push_back(column.name);
  return names;
}

void DesignLayout::fill_row(double* row, int group, double time,
                            const double* covariates, bool zero_treatment) const {
  const double tc = centered(time);
  const double g = static_cast<double>(group);
  const double post = time >= t0 ? 1.0 : 0.0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto& column = columns[j];
    double value = 0.0;
    switch (column.role) {
      case ColumnRole::Intercept: value = 1.0; break;
      case ColumnRole::Time: value = tc; break;
      case ColumnRole::Group: value = g; break;
      case ColumnRole::GroupTime: value = g * tc; break;
      case ColumnRole::Post: value = post; break;
      case ColumnRole::PostTime: value = post * tc; break;
      case ColumnRole::CompPostShift: value = time == column.time ? 1.0 : 0.0; break;
      case ColumnRole::TimeEffect: value = time == column.time ? 1.0 : 0.0; break;
      case ColumnRole::TreatedPost:
        if (zero_treatment) break;
        value = pooled ? g * post : (time == column.time ? g : 0.0);
        break;
      case ColumnRole::TreatedPostIntercept:
        value = zero_treatment ? 0.0 : g * post;
        break;
      case ColumnRole::TreatedPostSlope:
        value = zero_treatment ? 0.0 : g * post * tc;
        break;
      case ColumnRole::GroupTimeEffect:
        value = (!zero_treatment && time == column.time) ? g : 0.0;
        break;
      case ColumnRole::Covariate:
        value = covariates ? covariates[column.covariate] : 0.0;
        break;
    }
    row[j] = value;
  }
}

DesignLayout make_layout(const PanelDataset& panel, const DesignSpec& spec) {
  DesignLayout layout;
  layout.design = spec.design;
  layout.t0 = spec.t0;
  layout.center_time = spec.center_time_at_t0;
  layout.pooled = spec.pooled_treatment_effect;
  layout.time_points = panel.time_points();

  const auto split = split_periods(layout.time_points, spec.t0);
  layout.pre_times = split.pre;
  layout.post_times = split.post;

  for (const auto& name : spec.covariate_names) {
    auto it = std::find(panel.covariate_names.begin(), panel.covariate_names.end(), name);
    if (it == panel.covariate_names.end())
      throw ConfigError("covariate '" + name + "' not present in the panel");
    layout.covariate_indices.push_back(
        static_cast<int>(it - panel.covariate_names.begin()));
  }

  auto add = [&layout](ColumnRole role, std::string name, double time = 0.0,
                       int covariate = -1) {
    layout.columns.push_back({role, time, covariate, std::move(name)});
  };
  auto add_treated_post = [&] {
    if (layout.pooled) {
      add(ColumnRole::TreatedPost, "tau");
    } else {
      for (double k : layout.post_times) add(ColumnRole::TreatedPost, indexed("tau", k), k);
    }
  };

  switch (spec.design) {
    case Design::FeDid:
    case Design::FeDidGroupTrends: {
      // The comparison post-shift parameter is collinear with unrestricted
      // time fixed effects, so it is absorbed into gamma_t; the first time
      // point is the gamma reference.
      add(ColumnRole::Intercept, "beta0_0");
      add(ColumnRole::Group, "beta0_1");
      for (std::size_t i = 1; i < layout.time_points.size(); ++i)
        add(ColumnRole::TimeEffect, indexed("gamma", layout.time_points[i]),
            layout.time_points[i]);
      add_treated_post();
      if (spec.design == Design::FeDidGroupTrends)
        add(ColumnRole::GroupTime, "beta1_1");
      break;
    }
    case Design::GeneralCits: {
      add(ColumnRole::Intercept, "beta0_0");
      add(ColumnRole::Time, "beta1_0");
      add(ColumnRole::Group, "beta0_1");
      add(ColumnRole::GroupTime, "beta1_1");
      for (double k : layout.post_times)
        add(ColumnRole::CompPostShift, indexed("betaCheck_k_0", k), k);
      add_treated_post();
      break;
    }
    case Design::LinearCits: {
      add(ColumnRole::Intercept, "beta0_0");
      add(ColumnRole::Time, "beta1_0");
      add(ColumnRole::Post, "betaCheck0_0");
      add(ColumnRole::PostTime, "betaCheck1_0");
      add(ColumnRole::Group, "beta0_1");
      add(ColumnRole::GroupTime, "beta1_1");
      add(ColumnRole::TreatedPostIntercept, "tau0");
      add(ColumnRole::TreatedPostSlope, "tau1");
      break;
    }
    case Design::EventStudy: {
      layout.reference_period = spec.reference_period.value_or(split.pre.back());
      add(ColumnRole::Intercept, "beta0_0");
      add(ColumnRole::Group, "beta0_1");
      for (std::size_t i = 1; i < layout.time_points.size(); ++i)
        add(ColumnRole::TimeEffect, indexed("gamma", layout.time_points[i]),
            layout.time_points[i]);
      for (double t : layout.time_points)
        if (t != layout.reference_period)
          add(ColumnRole::GroupTimeEffect, indexed("delta", t), t);
      break;
    }
  }

  for (std::size_t j = 0; j < spec.covariate_names.size(); ++j)
    add(ColumnRole::Covariate, "theta[" + spec.covariate_names[j] + "]", 0.0,
        static_cast<int>(j));

  return layout;
}

namespace {

DesignMatrix matrix_from_layout(const PanelDataset& panel, const DesignLayout& layout) {
  const std::size_t n = panel.rows.size();
  const std::size_t p = layout.n_columns();
  DesignMatrix matrix;
  matrix.values.resize(n, p);
  matrix.column_names = layout.column_names();
  matrix.cluster_ids.reserve(n);

  std::vector<double> covariates(layout.covariate_indices.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& obs = panel.rows[i];
    for (std::size_t j = 0; j < layout.covariate_indices.size(); ++j)
      covariates[j] = obs.covariates[layout.covariate_indices[j]];
    layout.fill_row(matrix.values.row(i).data(), obs.group, obs.time,
                    covariates.empty() ? nullptr : covariates.data());
    matrix.cluster_ids.push_back(obs.unit_id);
  }
  return matrix;
}

DesignMatrix build_for(const PanelDataset& panel, DesignSpec spec, Design design) {
  spec.design = design;
  validate_design_requirements(panel, spec);
  return matrix_from_layout(panel, make_layout(panel, spec));
}

}  // namespace

DesignMatrix build_design_matrix(const PanelDataset& panel, const DesignSpec& spec) {
  return build_for(panel, spec, spec.design);
}

DesignMatrix build_fe_did(const PanelDataset& panel, const DesignSpec& spec) {
  return build_for(panel, spec, Design::FeDid);
}

DesignMatrix build_fe_did_trends(const PanelDataset& panel, const DesignSpec& spec) {
  return build_for(panel, spec, Design::FeDidGroupTrends);
}

DesignMatrix build_general_cits(const PanelDataset& panel, const DesignSpec& spec) {
  return build_for(panel, spec, Design::GeneralCits);
}

DesignMatrix build_linear_cits(const PanelDataset& panel, const DesignSpec& spec) {
  return build_for(panel, spec, Design::LinearCits);
}

DesignMatrix build_event_study(const PanelDataset& panel, const DesignSpec& spec) {
  return build_for(panel, spec, Design::EventStudy);
}

std::vector<std::string> coefficient_keys(const PanelDataset& panel,
                                          const DesignSpec& spec) {
  return make_layout(panel, spec).column_names();
}

}  // namespace citsdid
