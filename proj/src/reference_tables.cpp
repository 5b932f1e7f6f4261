#include "paramcost/reference_tables.hpp"

#include <cmath>
#include <sstream>

#include "paramcost/errors.hpp"

namespace paramcost::reference_tables {

namespace {

struct ModeRow {
    int id;
    PublishedCell organic;
    PublishedCell semidetached;
    PublishedCell embedded;
};

struct SingleRow {
    int id;
    PublishedCell cell;
};

// Printed cells of the basic-model table, one (effort, error%) pair per mode.
constexpr ModeRow kBasicRows[] = {
    {1, {145, 208}, {239, 408}, {393, 736}},
    {2, {115, 74}, {186, 181}, {301, 356}},
    {3, {81, -77}, {95, 43}, {146, 121}},
    {4, {35, -77}, {53, -66}, {78, -50}},
    {5, {32, -85}, {48, -77}, {71, -67}},
    {6, {97, -86}, {155, -78}, {247, -85}},
    {7, {16, -97}, {23, -97}, {32, -95}},
    {8, {8, -98}, {8, -97}, {10, -96}},
    {9, {13, -98}, {19, -97}, {26, -97}},
    {10, {54, -87}, {83, -80}, {127, -70}},
    {11, {79, -76}, {125, -62}, {196, -41}},
    {12, {85, -75}, {135, -60}, {213, -38}},
    {13, {91, -69}, {145, -51}, {230, -23}},
    {14, {167, -63}, {277, -38}, {460, 1}},
    {15, {87, -39}, {139, -3}, {220, 53}},
    {16, {99, -38}, {159, -1}, {254, 57}},
    {17, {111, -37}, {180, 0}, {290, 62}},
    {18, {112, -79}, {181, -66}, {292, -46}},
    {19, {393, -29}, {690, 23}, {1222, 119}},
    {20, {42, -89}, {64, -84}, {95, -76}},
    {21, {30, -87}, {45, -81}, {66, -72}},
    {22, {33, -69}, {49, -48}, {73, -23}},
    {23, {38, -58}, {54, -37}, {80, -8}},
    {24, {35, 94}, {53, 194}, {78, 333}},
    {25, {33, -47}, {50, -20}, {73, 15}},
    {26, {37, -17}, {55, 22}, {82, 82}},
    {27, {38, 192}, {57, 338}, {85, 553}},
    {28, {34, 112}, {51, 218}, {76, 375}},
    {29, {34, 112}, {52, 225}, {76, 375}},
    {30, {33, -2}, {49, 44}, {72, 111}},
};

// Printed cells of the intermediate-model nominal table.
constexpr ModeRow kIntermediateRows[] = {
    {1, {194, 312}, {239, 408}, {305, 551}},
    {2, {153, 131}, {186, 181}, {234, 254}},
    {3, {82, 24}, {95, 43}, {114, 72}},
    {4, {47, -70}, {53, -66}, {60, -62}},
    {5, {43, -80}, {48, -77}, {55, -74}},
    {6, {129, -82}, {155, -78}, {192, -73}},
    {7, {21, -97}, {23, -97}, {25, -96}},
    {8, {8, -97}, {8, -97}, {8, -97}},
    {9, {18, -97}, {19, -97}, {20, -97}},
    {10, {72, -83}, {83, -80}, {98, -77}},
    {11, {105, -68}, {125, -62}, {152, -54}},
    {12, {113, -67}, {135, -60}, {165, -52}},
    {13, {121, -59}, {145, -51}, {179, -40}},
    {14, {223, -50}, {277, -38}, {358, -20}},
    {15, {116, -19}, {139, -3}, {171, 18}},
    {16, {132, -18}, {159, -1}, {198, 22}},
    {17, {149, -16}, {180, 0}, {225, 25}},
    {18, {149, -72}, {181, -66}, {227, -58}},
    {19, {524, -5}, {690, 23}, {951, 70}},
    {20, {56, -86}, {64, -84}, {74, -81}},
    {21, {40, -83}, {45, -81}, {51, -78}},
    {22, {44, -53}, {49, -48}, {56, -41}},
    {23, {48, -44}, {54, -37}, {62, -28}},
    {24, {47, 161}, {53, 194}, {60, 233}},
    {25, {45, -28}, {50, -20}, {57, -9}},
    {26, {49, 8}, {55, 22}, {64, 42}},
    {27, {51, 292}, {57, 338}, {66, 407}},
    {28, {46, 187}, {51, 218}, {59, 268}},
    {29, {46, 187}, {52, 225}, {59, 268}},
    {30, {44, 29}, {49, 44}, {56, 64}},
};

// Printed nominal (organic) cells of the detailed-model table. Its
// semidetached and embedded columns carry mode-specific phase-weight sums
// slightly above the organic 1.06 and are not reproduction targets.
constexpr SingleRow kDetailedOrganicRows[] = {
    {1, {206, 338}},  {2, {163, 146}},  {3, {87, 31}},    {4, {50, -68}},
    {5, {46, -78}},   {6, {137, -81}},  {7, {23, -97}},   {8, {8, -97}},
    {9, {19, -97}},   {10, {76, -82}},  {11, {112, -66}}, {12, {120, -65}},
    {13, {129, -57}}, {14, {236, -47}}, {15, {124, -13}}, {16, {140, -13}},
    {17, {158, -11}}, {18, {158, -70}}, {19, {558, 0}},   {20, {59, -85}},
    {21, {43, -82}},  {22, {47, -50}},  {23, {51, -41}},  {24, {50, 177}},
    {25, {47, -25}},  {26, {52, 15}},   {27, {54, 315}},  {28, {48, 200}},
    {29, {49, 206}},  {30, {46, 35}},
};

// Printed nominal cells of the early-design table.
constexpr SingleRow kEarlyRows[] = {
    {1, {122, 159}},  {2, {98, 48}},    {3, {53, -19}},   {4, {31, -80}},
    {5, {29, -86}},   {6, {83, -88}},   {7, {15, -98}},   {8, {6, -98}},
    {9, {12, -98}},   {10, {47, -89}},  {11, {68, -79}},  {12, {73, -78}},
    {13, {78, -74}},  {14, {139, -69}}, {15, {75, -47}},  {16, {85, -47}},
    {17, {95, -46}},  {18, {95, -82}},  {19, {315, -43}}, {20, {37, -90}},
    {21, {27, -88}},  {22, {30, -68}},  {23, {32, -63}},  {24, {31, 72}},
    {25, {30, -52}},  {26, {33, -26}},  {27, {34, 161}},  {28, {31, 93}},
    {29, {31, 93}},   {30, {29, -14}},
};

// Printed nominal-nominal cells of the post-architecture table.
constexpr SingleRow kPostRows[] = {
    {1, {229, 387}},  {2, {177, 168}},  {3, {89, 34}},    {4, {48, -69}},
    {5, {44, -79}},   {6, {147, -79}},  {7, {20, -97}},   {8, {7, -97}},
    {9, {17, -98}},   {10, {77, -82}},  {11, {117, -65}}, {12, {127, -63}},
    {13, {137, -54}}, {14, {266, -41}}, {15, {131, -8}},  {16, {151, -6}},
    {17, {171, -4}},  {18, {172, -68}}, {19, {679, 21}},  {20, {59, -85}},
    {21, {41, -82}},  {22, {45, -52}},  {23, {49, -43}},  {24, {48, 166}},
    {25, {46, -26}},  {26, {51, 13}},   {27, {53, 307}},  {28, {47, 193}},
    {29, {47, 193}},  {30, {45, 32}},
};

evaluation::ModelConfiguration moded_config(std::string model, Mode mode) {
    evaluation::ModelConfiguration c;
    c.model = std::move(model);
    c.label = std::string(to_string(mode));
    c.mode = mode;
    return c;
}

evaluation::ModelConfiguration nominal_config(std::string model) {
    evaluation::ModelConfiguration c;
    c.model = std::move(model);
    c.label = "nominal";
    return c;
}

PublishedTable mode_table(std::string id, std::string title, std::string model,
                          const ModeRow (&rows)[30]) {
    PublishedTable table{std::move(id), std::move(title), {}};
    for (Mode mode : kAllModes) {
        table.columns.push_back({moded_config(model, mode), {}});
    }
    for (const ModeRow& row : rows) {
        table.columns[0].cells[row.id] = row.organic;
        table.columns[1].cells[row.id] = row.semidetached;
        table.columns[2].cells[row.id] = row.embedded;
    }
    return table;
}

PublishedTable single_table(std::string id, std::string title,
                            evaluation::ModelConfiguration config, const SingleRow (&rows)[30]) {
    PublishedTable table{std::move(id), std::move(title), {}};
    table.columns.push_back({std::move(config), {}});
    for (const SingleRow& row : rows) {
        table.columns[0].cells[row.id] = row.cell;
    }
    return table;
}

// The one printed effort known to contradict its own size/constants pair:
// basic organic, project 3, prints 81 where 2.4 * 22^1.05 = 61.6. Both cells
// of the pair are skipped.
bool pair_is_print_artifact(const std::string& table_id, int project_id,
                            const std::string& column_label) {
    return table_id == "basic" && project_id == 3 && column_label == "organic";
}

} // namespace

const std::vector<PublishedTable>& published_tables() {
    static const std::vector<PublishedTable> tables = [] {
        std::vector<PublishedTable> out;
        out.push_back(mode_table("basic", "basic model, published effort/error per mode",
                                 "cocomo81-basic", kBasicRows));
        out.push_back(mode_table("intermediate-nominal",
                                 "intermediate model at nominal EAF, published effort/error per mode",
                                 "cocomo81-intermediate", kIntermediateRows));
        out.push_back(single_table("detailed-nominal-organic",
                                   "detailed model at nominal EAF, organic, default phase weights",
                                   moded_config("cocomo81-detailed", Mode::Organic),
                                   kDetailedOrganicRows));
        out.push_back(single_table("early-design-nominal",
                                   "early-design model at nominal EAF, published effort/error",
                                   nominal_config("cocomo2-early"), kEarlyRows));
        out.push_back(single_table("post-architecture-nominal",
                                   "post-architecture model, nominal EAF and default scale sum",
                                   nominal_config("cocomo2-post"), kPostRows));
        return out;
    }();
    return tables;
}

namespace {

TableComparison compare_table(const PublishedTable& table,
                              const std::vector<const ColumnExpectation*>& columns,
                              const dataset::Corpus& corpus, const ModelTables& tables) {
    TableComparison result;
    result.table_id = table.id;
    result.title = table.title;
    for (const ColumnExpectation* column : columns) {
        for (const auto& [project_id, cell] : column->cells) {
            const dataset::Project& project = corpus.by_id(project_id);
            const EffortPm estimated =
                evaluation::estimate_effort(column->config, project.size, tables);
            CellComparison c;
            c.table_id = table.id;
            c.project_id = project_id;
            c.column = column->config.display();
            c.printed_effort = cell.effort_pm;
            c.printed_error = cell.error_pct;
            c.computed_effort = table_round(estimated);

            if (pair_is_print_artifact(table.id, project_id, column->config.label)) {
                c.pair_excluded = true;
                c.note = "printed pair contradicts the row's size; skipped";
                result.excluded += 2;
                result.cells.push_back(std::move(c));
                continue;
            }

            c.effort_ok = std::llabs(c.computed_effort - c.printed_effort) <=
                          static_cast<long long>(kTableEffortTolerancePm);
            ++result.compared;
            if (!c.effort_ok) {
                ++result.failed;
            }

            // A printed error that disagrees with its own printed effort by
            // more than the tolerance is a print artifact; only the error
            // value is skipped then.
            const double actual = project.actual_effort.value;
            const double self_error =
                100.0 * (static_cast<double>(cell.effort_pm) - actual) / actual;
            if (std::abs(self_error - static_cast<double>(cell.error_pct)) >
                kTableErrorTolerancePoints) {
                c.error_excluded = true;
                c.note = "printed error contradicts the printed effort; skipped";
                ++result.excluded;
            } else {
                c.recomputed_error =
                    100.0 * (static_cast<double>(c.computed_effort) - actual) / actual;
                c.error_ok = std::abs(c.recomputed_error - static_cast<double>(cell.error_pct)) <=
                             kTableErrorTolerancePoints;
                ++result.compared;
                if (!c.error_ok) {
                    ++result.failed;
                }
            }
            result.cells.push_back(std::move(c));
        }
    }
    return result;
}

} // namespace

std::vector<TableComparison> compare_all(const ModelTables& tables) {
    std::vector<TableComparison> out;
    const dataset::Corpus corpus = dataset::embedded_corpus();
    for (const PublishedTable& table : published_tables()) {
        std::vector<const ColumnExpectation*> columns;
        for (const ColumnExpectation& column : table.columns) {
            columns.push_back(&column);
        }
        out.push_back(compare_table(table, columns, corpus, tables));
    }
    return out;
}

std::vector<TableComparison> compare_selected(
    const ModelTables& tables, const std::vector<evaluation::ModelConfiguration>& configs) {
    std::vector<TableComparison> out;
    const dataset::Corpus corpus = dataset::embedded_corpus();
    for (const PublishedTable& table : published_tables()) {
        std::vector<const ColumnExpectation*> columns;
        for (const ColumnExpectation& column : table.columns) {
            for (const evaluation::ModelConfiguration& config : configs) {
                if (config.model == column.config.model && config.label == column.config.label) {
                    columns.push_back(&column);
                    break;
                }
            }
        }
        if (!columns.empty()) {
            out.push_back(compare_table(table, columns, corpus, tables));
        }
    }
    return out;
}

std::string render(const std::vector<TableComparison>& comparisons, bool list_all) {
    std::ostringstream out;
    for (const TableComparison& table : comparisons) {
        out << table.table_id << ": " << table.title << '\n';
        out << "  " << table.compared << " values compared, " << table.failed << " failed, "
            << table.excluded << " skipped (tolerance: effort +/-"
            << static_cast<int>(kTableEffortTolerancePm) << " PM, error +/-"
            << static_cast<int>(kTableErrorTolerancePoints) << " points)\n";
        for (const CellComparison& cell : table.cells) {
            const bool failed = (!cell.pair_excluded && !cell.effort_ok) ||
                                (!cell.pair_excluded && !cell.error_excluded && !cell.error_ok);
            const bool skipped = cell.pair_excluded || cell.error_excluded;
            if (!list_all && !failed && !skipped) {
                continue;
            }
            out << "  " << (failed ? "FAIL" : (skipped ? "skip" : "  ok")) << " project "
                << cell.project_id << ", " << cell.column << ": ";
            if (cell.pair_excluded) {
                out << cell.note << '\n';
                continue;
            }
            out << "effort " << cell.computed_effort << " vs printed " << cell.printed_effort;
            if (cell.error_excluded) {
                out << "; " << cell.note;
            } else {
                out << "; error " << format_compact(cell.recomputed_error) << " vs printed "
                    << cell.printed_error;
            }
            out << '\n';
        }
    }
    out << (all_ok(comparisons) ? "result: PASS" : "result: FAIL") << '\n';
    return out.str();
}

bool all_ok(const std::vector<TableComparison>& comparisons) {
    for (const TableComparison& table : comparisons) {
        if (!table.ok()) {
            return false;
        }
    }
    return true;
}

} // namespace paramcost::reference_tables
