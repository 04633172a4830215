#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "citsdid/estimate.hpp"
#include "citsdid/panel.hpp"

namespace citsdid {

// Data-generating processes with known ground truth.
//
//   QuadraticFigure1  comparison mean (t/2)^2, treated mean (t/3)^2, and the
//                     intervention has no effect; both trends and their gap
//                     are non-linear, so every design's fit is stressed.
//   ParallelLinear    common slope 0.5, level 1.0, treated offset +2.0;
//                     additive effect in the post period.
//   DivergingLinear   group-specific slopes (0.3 vs 0.8) and levels (1 vs 3);
//                     additive effect in the post period.
//   LinearCitsTruth   the full linear-CITS expectation, centered at t0:
//                     comparison 2.0 + 0.4 t' + (1.0 - 0.2 t') I{post},
//                     treated adds 1.5 + 0.3 t' and (tau0 + tau1 t') I{post}.
enum class DgpKind { QuadraticFigure1, ParallelLinear, DivergingLinear, LinearCitsTruth };

struct TrueEffect {
  enum class Kind { None, Constant, PerTime, InterceptSlope };
  Kind kind = Kind::None;
  double value = 0.0;               // Constant
  std::vector<double> per_time;     // PerTime, aligned with post times
  double tau0 = 0.0;
  double tau1 = 0.0;                // InterceptSlope: tau0 + tau1 * (t - t0)
};

struct DgpSpec {
  DgpKind kind = DgpKind::ParallelLinear;
  std::vector<double> time_grid;  // strictly increasing; default {1..10}
  double t0 = 6.0;
  int units_per_group = 10;
  double noise_sd = 0.0;  // iid Gaussian per observation
  TrueEffect effect;      // ignored for QuadraticFigure1 (no effect by construction)
  std::uint64_t seed = 0;
};

// Deterministic given dgp.seed. Unit ids are "c0..","t0.." per group.
PanelDataset generate_panel(const DgpSpec& dgp);

// Ground-truth ATT at post time t; throws ConfigError for t < t0.
double true_att(const DgpSpec& dgp, double t);

struct DesignMcStats {
  Design design;
  std::vector<double> post_times;
  std::vector<double> mean_bias;       // mean(ATT_hat(t) - true_att(t))
  std::vector<double> rmse;
  std::vector<double> coverage;        // CI contains true_att(t)
  std::vector<double> rejection_rate;  // CI excludes 0
  int failures = 0;                    // reps where this design failed
};

struct McSummary {
  int reps = 0;
  std::uint64_t base_seed = 0;
  DgpSpec dgp;
  std::vector<DesignMcStats> designs;
};

// reps independent panels (rep i seeded with derive_seed(base_seed, i)), each
// estimated under every spec. A design failing on a rep is counted, not
// fatal. Aggregation is by rep index, so the summary is deterministic.
McSummary monte_carlo(const DgpSpec& dgp, const std::vector<DesignSpec>& specs,
                      int reps, std::uint64_t base_seed);

const char* dgp_kind_name(DgpKind kind);
std::optional<DgpKind> dgp_kind_from_name(std::string_view name);

}  // namespace citsdid
