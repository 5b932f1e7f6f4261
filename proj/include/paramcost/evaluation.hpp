#pragma once

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paramcost/core.hpp"
#include "paramcost/dataset.hpp"
#include "paramcost/model_tables.hpp"

namespace paramcost::evaluation {

/// 100 * (estimated - actual) / actual. DomainError if actual <= 0.
double signed_error_pct(EffortPm estimated, EffortPm actual);

/// |estimated - actual| / actual. DomainError if actual <= 0.
double mre(EffortPm estimated, EffortPm actual);

/// One effort estimator the evaluation can run over a corpus: a KLOC-driven
/// model family plus its parameterization.
///
/// Families: cocomo81-basic, cocomo81-intermediate, cocomo81-detailed,
/// cocomo2-early, cocomo2-post.
struct ModelConfiguration {
    std::string model;               // family id
    std::string label;               // parameterization tag: mode name or "nominal"
    std::optional<Mode> mode;        // cocomo81 families only
    double eaf = 1.0;                // intermediate/detailed/early/post
    std::optional<double> scale_sum; // cocomo2-post; table default when unset

    /// "cocomo81-basic/organic" -- identity used in reports.
    std::string display() const;
};

/// Runs one configuration. ValidationError for an unknown family id or a
/// cocomo81 family without a mode.
EffortPm estimate_effort(const ModelConfiguration& config, SizeKloc size,
                         const ModelTables& tables);

/// The 11 all-nominal configurations the published comparison tables use:
/// basic/intermediate/detailed x 3 modes, early design, post architecture.
std::vector<ModelConfiguration> standard_configurations();

/// Expands one selector token: "all", a family id (a cocomo81 family expands
/// to its three modes), or family-mode shorthand like
/// "cocomo81-basic-organic". ValidationError on unknown selectors.
std::vector<ModelConfiguration> expand_selector(const std::string& selector);

/// Comma-separated selectors, concatenated in order, duplicates removed.
std::vector<ModelConfiguration> parse_model_list(const std::string& list);

struct ErrorRow {
    int project_id = 0;
    std::string model;
    std::string label;
    double estimated_pm = 0.0;
    double actual_pm = 0.0;
    double signed_error_pct = 0.0;
    double mre = 0.0;
};

struct MmreEntry {
    std::string model;
    std::string label;
    double mmre = 0.0;
};

struct EvaluationReport {
    std::vector<ErrorRow> rows;   // ordered by project id, then configuration
    std::vector<MmreEntry> mmre;  // one per configuration, configuration order
};

/// Mean of |estimated - actual| / actual over the rows. ValidationError on
/// empty input.
double mmre(const std::vector<ErrorRow>& rows);

/// One ErrorRow per (project, configuration). Deterministic: rows ordered by
/// project id, then by configuration list order.
EvaluationReport evaluate(const dataset::Corpus& corpus,
                          const std::vector<ModelConfiguration>& configurations,
                          const ModelTables& tables);

inline constexpr std::string_view kReportCsvHeader =
    "project_id,model,parameterization,estimated_pm,actual_pm,signed_error_pct,mre";

std::string to_csv(const EvaluationReport& report);
/// Inverse of to_csv; aggregate MMRE entries are recomputed from the rows.
EvaluationReport parse_report_csv(std::istream& in);

std::string to_json(const EvaluationReport& report);

/// Aligned text mirroring the published layout: per configuration an
/// (effort, error%) column pair, whole-number cells, MMRE footer.
std::string to_text_table(const EvaluationReport& report);

/// Per-configuration (project_index, estimated_pm, actual_pm) series,
/// gnuplot-style: '#'-prefixed series headers, blank line between series.
std::string to_plot_data(const EvaluationReport& report);

struct CalibrationResult {
    PowerLawConstants constants;
    double log_residual_ss = 0.0; // sum of squared residuals in log space
    std::size_t n = 0;            // points used
};

/// Ordinary least squares on (ln size, ln effort): b = slope,
/// a = exp(intercept). ValidationError with fewer than 2 distinct sizes;
/// DomainError on a non-positive effort.
CalibrationResult calibrate_power_law(const std::vector<std::pair<SizeKloc, EffortPm>>& points);

/// (size, actual effort) pairs of a corpus, in corpus order.
std::vector<std::pair<SizeKloc, EffortPm>> calibration_points(const dataset::Corpus& corpus);

} // namespace paramcost::evaluation
