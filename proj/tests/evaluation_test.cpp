#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "paramcost/errors.hpp"
#include "paramcost/evaluation.hpp"

using namespace paramcost;
namespace ev = paramcost::evaluation;

TEST_CASE("signed error and MRE agree up to sign and scale") {
    CHECK(ev::signed_error_pct(EffortPm(145.92501487903888), EffortPm(47)) ==
          doctest::Approx(210.47875506178485).epsilon(1e-12));
    CHECK(ev::signed_error_pct(EffortPm(47), EffortPm(47)) == 0.0);
    CHECK(ev::signed_error_pct(EffortPm(11), EffortPm(50)) ==
          doctest::Approx(-78.0).epsilon(1e-12));
    CHECK(ev::mre(EffortPm(11), EffortPm(50)) == doctest::Approx(0.78).epsilon(1e-12));

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(0.5, 900.0);
    for (int i = 0; i < 300; ++i) {
        const EffortPm est(dist(rng));
        const EffortPm act(dist(rng));
        CHECK(std::fabs(ev::signed_error_pct(est, act)) == 100.0 * ev::mre(est, act));
    }
    CHECK_THROWS_AS(ev::signed_error_pct(EffortPm(1), EffortPm(0)), DomainError);
    CHECK_THROWS_AS(ev::mre(EffortPm(1), EffortPm(0)), DomainError);
}

TEST_CASE("MMRE is the plain mean of the relative errors") {
    std::vector<ev::ErrorRow> rows(2);
    rows[0].mre = 0.5;
    rows[1].mre = 1.5;
    CHECK(ev::mmre(rows) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(ev::mmre({}), ValidationError);
}

TEST_CASE("basic organic MMRE over the embedded corpus is pinned") {
    const auto corpus = dataset::embedded_corpus();
    const auto configs = ev::expand_selector("cocomo81-basic-organic");
    REQUIRE(configs.size() == 1);
    const auto report = ev::evaluate(corpus, configs, ModelTables::defaults());
    REQUIRE(report.mmre.size() == 1);
    CHECK(report.mmre[0].mmre == doctest::Approx(0.774284712029432).epsilon(1e-12));
}

TEST_CASE("the standard configuration set has the published shape") {
    const auto configs = ev::standard_configurations();
    REQUIRE(configs.size() == 11);
    CHECK(configs[0].display() == "cocomo81-basic/organic");
    CHECK(configs[3].display() == "cocomo81-intermediate/organic");
    CHECK(configs[9].display() == "cocomo2-early/nominal");
    CHECK(configs[10].display() == "cocomo2-post/nominal");
}

TEST_CASE("selectors expand to configuration lists") {
    CHECK(ev::expand_selector("all").size() == 11);
    CHECK(ev::expand_selector("cocomo81-basic").size() == 3);
    CHECK(ev::expand_selector("cocomo2-early").size() == 1);
    const auto one = ev::expand_selector("cocomo81-detailed-embedded");
    REQUIRE(one.size() == 1);
    CHECK(one[0].display() == "cocomo81-detailed/embedded");
    CHECK_THROWS_AS(ev::expand_selector("cocomo81-banana"), ValidationError);
    CHECK_THROWS_AS(ev::expand_selector(""), ValidationError);
}

TEST_CASE("model lists are comma separated and deduplicated") {
    const auto configs = ev::parse_model_list("cocomo81-basic,cocomo81-basic-organic,cocomo2-post");
    REQUIRE(configs.size() == 4); // organic duplicate dropped
    CHECK(configs[0].display() == "cocomo81-basic/organic");
    CHECK(configs[3].display() == "cocomo2-post/nominal");
}

TEST_CASE("estimate dispatch covers every family and validates input") {
    const auto tables = ModelTables::defaults();
    ev::ModelConfiguration basic{"cocomo81-basic", "organic", Mode::Organic, 1.0, std::nullopt};
    CHECK(ev::estimate_effort(basic, SizeKloc(50), tables).value ==
          doctest::Approx(145.92501487903888).epsilon(1e-12));

    ev::ModelConfiguration post{"cocomo2-post", "nominal", std::nullopt, 1.0, std::nullopt};
    CHECK(ev::estimate_effort(post, SizeKloc(50), tables).value ==
          doctest::Approx(229.27446326044642).epsilon(1e-12));

    ev::ModelConfiguration post19{"cocomo2-post", "s19", std::nullopt, 1.0, 19.0};
    CHECK(ev::estimate_effort(post19, SizeKloc(50), tables).value ==
          doctest::Approx(2.55 * std::pow(50.0, 1.20)).epsilon(1e-12));

    ev::ModelConfiguration unknown{"slim", "nominal", std::nullopt, 1.0, std::nullopt};
    CHECK_THROWS_AS(ev::estimate_effort(unknown, SizeKloc(50), tables), ValidationError);

    ev::ModelConfiguration missing_mode{"cocomo81-basic", "x", std::nullopt, 1.0, std::nullopt};
    CHECK_THROWS_AS(ev::estimate_effort(missing_mode, SizeKloc(50), tables), ValidationError);
}

TEST_CASE("evaluation reports are ordered, complete, and deterministic") {
    const auto corpus = dataset::embedded_corpus();
    const auto configs = ev::expand_selector("cocomo81-basic");
    const auto report = ev::evaluate(corpus, configs, ModelTables::defaults());
    REQUIRE(report.rows.size() == 90);
    REQUIRE(report.mmre.size() == 3);

    // project-major, configuration-minor ordering
    CHECK(report.rows[0].project_id == 1);
    CHECK(report.rows[0].label == "organic");
    CHECK(report.rows[1].label == "semidetached");
    CHECK(report.rows[2].label == "embedded");
    CHECK(report.rows[3].project_id == 2);
    CHECK(report.rows[89].project_id == 30);

    const auto again = ev::evaluate(corpus, configs, ModelTables::defaults());
    CHECK(ev::to_csv(again) == ev::to_csv(report));
    CHECK(ev::to_json(again) == ev::to_json(report));
}

TEST_CASE("evaluating an empty configuration list yields an empty report") {
    const auto corpus = dataset::embedded_corpus();
    const auto report = ev::evaluate(corpus, {}, ModelTables::defaults());
    CHECK(report.rows.empty());
    CHECK(report.mmre.empty());
}

TEST_CASE("report CSV round-trips through the parser") {
    const auto corpus = dataset::embedded_corpus();
    const auto report = ev::evaluate(corpus, ev::expand_selector("all"), ModelTables::defaults());
    const std::string csv = ev::to_csv(report);
    CHECK(csv.rfind(std::string(ev::kReportCsvHeader) + "\n", 0) == 0);

    std::istringstream in(csv);
    const auto parsed = ev::parse_report_csv(in);
    REQUIRE(parsed.rows.size() == report.rows.size());
    CHECK(ev::to_csv(parsed) == csv);
    REQUIRE(parsed.mmre.size() == report.mmre.size());
    for (std::size_t i = 0; i < parsed.mmre.size(); ++i) {
        CHECK(parsed.mmre[i].model == report.mmre[i].model);
        CHECK(parsed.mmre[i].mmre == doctest::Approx(report.mmre[i].mmre).epsilon(1e-12));
    }
}

TEST_CASE("text table and plot data carry the expected structure") {
    const auto corpus = dataset::embedded_corpus();
    const auto report =
        ev::evaluate(corpus, ev::expand_selector("cocomo81-basic-organic"), ModelTables::defaults());

    const std::string table = ev::to_text_table(report);
    CHECK(table.find("cocomo81-basic/organic") != std::string::npos);
    CHECK(table.find("MMRE") != std::string::npos);
    CHECK(table.find("0.7743") != std::string::npos);

    const std::string plot = ev::to_plot_data(report);
    CHECK(plot.find("# series: cocomo81-basic/organic") != std::string::npos);
    CHECK(plot.find("# columns: project_index estimated_pm actual_pm") != std::string::npos);
}

TEST_CASE("calibration recovers exact power-law data") {
    std::vector<std::pair<SizeKloc, EffortPm>> points;
    for (double s : {2.0, 5.0, 11.0, 40.0, 90.0, 300.0}) {
        points.emplace_back(SizeKloc(s), EffortPm(3.0 * std::pow(s, 1.12)));
    }
    const auto fit = ev::calibrate_power_law(points);
    CHECK(fit.constants.a == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(fit.constants.b == doctest::Approx(1.12).epsilon(1e-9));
    CHECK(fit.log_residual_ss == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fit.n == 6);
}

TEST_CASE("two points always fit exactly") {
    std::vector<std::pair<SizeKloc, EffortPm>> points = {{SizeKloc(10), EffortPm(40)},
                                                         {SizeKloc(100), EffortPm(900)}};
    const auto fit = ev::calibrate_power_law(points);
    CHECK(fit.log_residual_ss == doctest::Approx(0.0).epsilon(1e-12));
    // the fitted curve passes through both points
    CHECK(fit.constants.a * std::pow(10.0, fit.constants.b) ==
          doctest::Approx(40.0).epsilon(1e-9));
    CHECK(fit.constants.a * std::pow(100.0, fit.constants.b) ==
          doctest::Approx(900.0).epsilon(1e-9));
}

TEST_CASE("the embedded-corpus fit is pinned and optimal in log space") {
    const auto corpus = dataset::embedded_corpus();
    const auto points = ev::calibration_points(corpus);
    REQUIRE(points.size() == 30);
    const auto fit = ev::calibrate_power_law(points);
    CHECK(fit.constants.a == doctest::Approx(75.92968570624647).epsilon(1e-9));
    CHECK(fit.constants.b == doctest::Approx(0.2145879299616506).epsilon(1e-9));
    CHECK(fit.log_residual_ss == doctest::Approx(44.960332825548406).epsilon(1e-9));

    // OLS optimality: small perturbations of (a, b) never reduce the
    // log-space residual.
    auto rss = [&](double a, double b) {
        double sum = 0.0;
        for (const auto& [size, effort] : points) {
            const double r = std::log(effort.value) - (std::log(a) + b * std::log(size.value));
            sum += r * r;
        }
        return sum;
    };
    const double base = rss(fit.constants.a, fit.constants.b);
    for (double da : {-1e-3, 0.0, 1e-3}) {
        for (double db : {-1e-3, 0.0, 1e-3}) {
            if (da == 0.0 && db == 0.0) continue;
            CHECK(rss(fit.constants.a * (1.0 + da), fit.constants.b + db) >= base);
        }
    }

    // and it beats every stock constant pair on the same criterion
    const auto defaults = cocomo81::ModeConstants::defaults();
    for (Mode mode : kAllModes) {
        const auto& basic = defaults.basic_for(mode);
        const auto& inter = defaults.intermediate_for(mode);
        CHECK(base < rss(basic.a, basic.b));
        CHECK(base < rss(inter.a, inter.b));
    }
}

TEST_CASE("calibration rejects degenerate inputs") {
    CHECK_THROWS_AS(ev::calibrate_power_law({}), ValidationError);
    CHECK_THROWS_AS(ev::calibrate_power_law({{SizeKloc(10), EffortPm(40)}}), ValidationError);
    // identical sizes: slope undefined
    std::vector<std::pair<SizeKloc, EffortPm>> same = {{SizeKloc(10), EffortPm(40)},
                                                       {SizeKloc(10), EffortPm(90)}};
    CHECK_THROWS_AS(ev::calibrate_power_law(same), ValidationError);
    std::vector<std::pair<SizeKloc, EffortPm>> zero = {{SizeKloc(10), EffortPm(0)},
                                                       {SizeKloc(20), EffortPm(90)}};
    CHECK_THROWS_AS(ev::calibrate_power_law(zero), DomainError);
}

TEST_CASE("calibration is unit-aware in size") {
    // scaling sizes by k rescales a by k^{-b} and leaves b unchanged
    std::vector<std::pair<SizeKloc, EffortPm>> base_points, scaled_points;
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> noise(0.9, 1.1);
    for (double s : {3.0, 8.0, 21.0, 55.0, 144.0}) {
        const double e = 2.8 * std::pow(s, 1.2) * noise(rng);
        base_points.emplace_back(SizeKloc(s), EffortPm(e));
        scaled_points.emplace_back(SizeKloc(1000.0 * s), EffortPm(e));
    }
    const auto fit = ev::calibrate_power_law(base_points);
    const auto scaled = ev::calibrate_power_law(scaled_points);
    CHECK(scaled.constants.b == doctest::Approx(fit.constants.b).epsilon(1e-9));
    CHECK(scaled.constants.a ==
          doctest::Approx(fit.constants.a * std::pow(1000.0, -fit.constants.b)).epsilon(1e-9));
    CHECK(scaled.log_residual_ss == doctest::Approx(fit.log_residual_ss).epsilon(1e-6));
}
