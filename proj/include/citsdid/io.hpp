#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "citsdid/estimate.hpp"
#include "citsdid/panel.hpp"
#include "citsdid/simulate.hpp"

namespace citsdid {

// Maps input columns onto the panel model. The treated_label value of the
// group column becomes group 1; the single remaining label becomes group 0.
struct PanelSchema {
  std::string unit_column;
  std::string group_column;
  std::string time_column;
  std::string outcome_column;
  std::optional<std::string> weight_column;
  std::vector<std::string> covariate_columns;
  std::string treated_label;
  char delimiter = ',';
};

// Reads a delimiter-separated UTF-8 file with a header row. Throws IoError
// when the file cannot be opened, and ValidationError for schema problems
// (missing columns, unparseable numerics with their row number, more than two
// group labels).
PanelDataset read_panel(const std::string& path, const PanelSchema& schema);
PanelDataset parse_panel(std::istream& input, const PanelSchema& schema);

// Full result document: version, design echo, coefficient table, ATT series,
// counterfactual and observed series, diagnostics. Numbers round-trip at full
// precision.
nlohmann::json results_document(const EstimationResult& result);
nlohmann::json comparison_document(const ComparisonTable& table);
nlohmann::json mc_document(const McSummary& summary);

// Plot-data document mirroring the paper's two panels: (A) event-study
// coefficients against time with the reference pinned at zero, (B) per-design
// ATT(t) series with CIs. Either input may be omitted.
nlohmann::json plot_data(const EstimationResult* event_study,
                         const ComparisonTable* comparison);

// Flat ATT series table (time, point, se, ci_low, ci_high); the comparison
// variant prepends a design column.
std::string att_csv(const EstimationResult& result);
std::string att_csv(const ComparisonTable& table);

nlohmann::json read_json_file(const std::string& path);

// Writes atomically enough for our purposes: content is fully materialized
// before the file is opened, so validation failures never leave partial
// output. Throws IoError when the path is unwritable.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace citsdid
