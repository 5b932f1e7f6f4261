#include <string>

#include "doctest.h"
#include "paramcost/reference_tables.hpp"

using namespace paramcost;
namespace rt = paramcost::reference_tables;
namespace ev = paramcost::evaluation;

TEST_CASE("the embedded expectation tables have the published shape") {
    const auto& tables = rt::published_tables();
    REQUIRE(tables.size() == 5);
    CHECK(tables[0].id == "basic");
    CHECK(tables[0].columns.size() == 3);
    CHECK(tables[1].id == "intermediate-nominal");
    CHECK(tables[1].columns.size() == 3);
    CHECK(tables[2].id == "detailed-nominal-organic");
    CHECK(tables[2].columns.size() == 1);
    CHECK(tables[3].id == "early-design-nominal");
    CHECK(tables[4].id == "post-architecture-nominal");
    for (const auto& table : tables) {
        for (const auto& column : table.columns) {
            CHECK(column.cells.size() == 30);
        }
    }
}

TEST_CASE("stock constants reproduce every published table") {
    const auto comparisons = rt::compare_all(ModelTables::defaults());
    REQUIRE(comparisons.size() == 5);
    CHECK(rt::all_ok(comparisons));

    // basic: one cell pair and two lone error cells are print artifacts
    CHECK(comparisons[0].table_id == "basic");
    CHECK(comparisons[0].compared == 176);
    CHECK(comparisons[0].failed == 0);
    CHECK(comparisons[0].excluded == 4);

    for (std::size_t i = 1; i < comparisons.size(); ++i) {
        CAPTURE(comparisons[i].table_id);
        CHECK(comparisons[i].failed == 0);
        CHECK(comparisons[i].excluded == 0);
    }
    CHECK(comparisons[1].compared == 180);
    CHECK(comparisons[2].compared == 60);
    CHECK(comparisons[3].compared == 60);
    CHECK(comparisons[4].compared == 60);
}

TEST_CASE("perturbed constants are caught, and only where they act") {
    KeyValueConfig cfg;
    cfg.set("cocomo81.basic.organic.a", "9.9");
    auto tables = ModelTables::defaults();
    tables.apply(cfg);

    const auto comparisons = rt::compare_all(tables);
    CHECK_FALSE(rt::all_ok(comparisons));
    for (const auto& comparison : comparisons) {
        if (comparison.table_id == "basic") {
            CHECK(comparison.failed > 0);
        } else {
            CAPTURE(comparison.table_id);
            CHECK(comparison.failed == 0);
        }
    }
}

TEST_CASE("comparison can be restricted to selected configurations") {
    const auto configs = ev::expand_selector("cocomo2-early");
    const auto comparisons = rt::compare_selected(ModelTables::defaults(), configs);
    REQUIRE(comparisons.size() == 1);
    CHECK(comparisons[0].table_id == "early-design-nominal");
    CHECK(comparisons[0].compared == 60);
}

TEST_CASE("exclusions carry explanatory notes") {
    const auto comparisons = rt::compare_all(ModelTables::defaults());
    int pair_excluded = 0;
    int error_excluded = 0;
    for (const auto& cell : comparisons[0].cells) {
        if (cell.pair_excluded) {
            ++pair_excluded;
            CHECK(cell.project_id == 3);
            CHECK_FALSE(cell.note.empty());
        }
        if (cell.error_excluded) {
            ++error_excluded;
            CHECK((cell.project_id == 22 || cell.project_id == 6));
            CHECK(cell.note.find("printed error contradicts the printed effort") !=
                  std::string::npos);
        }
    }
    CHECK(pair_excluded == 1);
    CHECK(error_excluded == 2);
}

TEST_CASE("the text report names the verdict") {
    const auto ok = rt::compare_all(ModelTables::defaults());
    const std::string report = rt::render(ok, false);
    CHECK(report.find("result: PASS") != std::string::npos);
    CHECK(report.find("basic") != std::string::npos);

    const std::string detailed_report = rt::render(ok, true);
    CHECK(detailed_report.size() > report.size());

    KeyValueConfig cfg;
    cfg.set("cocomo81.basic.organic.a", "9.9");
    auto tables = ModelTables::defaults();
    tables.apply(cfg);
    const std::string failing = rt::render(rt::compare_all(tables), false);
    CHECK(failing.find("result: FAIL") != std::string::npos);
    CHECK(failing.find("FAIL") != std::string::npos);
}
