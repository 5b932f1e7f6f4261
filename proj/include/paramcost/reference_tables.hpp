#pragma once

#include <map>
#include <string>
#include <vector>

#include "paramcost/dataset.hpp"
#include "paramcost/evaluation.hpp"
#include "paramcost/model_tables.hpp"

namespace paramcost::reference_tables {

/// One printed (effort PM, error %) cell pair from the published comparison
/// study. Both values are whole numbers there.
struct PublishedCell {
    long long effort_pm;
    long long error_pct;
};

/// One model column of a published table: the configuration that produced it
/// and the printed cell per project id.
struct ColumnExpectation {
    evaluation::ModelConfiguration config;
    std::map<int, PublishedCell> cells;
};

struct PublishedTable {
    std::string id;    // stable machine id, e.g. "basic"
    std::string title; // human description
    std::vector<ColumnExpectation> columns;
};

/// The embedded expectation tables: basic (3 modes), intermediate nominal
/// (3 modes), detailed nominal (organic), early-design nominal, and
/// post-architecture nominal.
const std::vector<PublishedTable>& published_tables();

/// Comparison of one published cell pair against a recomputation.
///
/// Policy: printed efforts are whole numbers, so the computed effort is
/// table-rounded and must land within kTableEffortTolerancePm. The printed
/// error column was derived from the rounded effort, so the recomputed error
/// uses the rounded effort too and must land within
/// kTableErrorTolerancePoints.
struct CellComparison {
    std::string table_id;
    int project_id = 0;
    std::string column; // configuration display name

    long long printed_effort = 0;
    long long computed_effort = 0;
    bool effort_ok = false;

    long long printed_error = 0;
    double recomputed_error = 0.0;
    bool error_ok = false;

    bool pair_excluded = false;  // whole cell pair not comparable
    bool error_excluded = false; // only the printed error is not comparable
    std::string note;            // why something was excluded
};

struct TableComparison {
    std::string table_id;
    std::string title;
    std::vector<CellComparison> cells;
    int compared = 0; // individual value comparisons performed
    int failed = 0;
    int excluded = 0; // individual values skipped as print artifacts

    bool ok() const { return failed == 0; }
};

/// Recomputes every published table with the given constants and compares
/// cell by cell against the embedded expectations, over the embedded corpus.
std::vector<TableComparison> compare_all(const ModelTables& tables);

/// Same, restricted to the columns whose configuration appears in `configs`
/// (matched by model family and parameterization label). Tables with no
/// selected column are dropped.
std::vector<TableComparison> compare_selected(
    const ModelTables& tables, const std::vector<evaluation::ModelConfiguration>& configs);

/// Text report. Failures and exclusions are always listed; `list_all` adds
/// one line per compared cell.
std::string render(const std::vector<TableComparison>& comparisons, bool list_all);

bool all_ok(const std::vector<TableComparison>& comparisons);

} // namespace paramcost::reference_tables
