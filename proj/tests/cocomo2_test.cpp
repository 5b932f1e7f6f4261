#include <cmath>

#include "doctest.h"
#include "paramcost/cocomo2.hpp"
#include "paramcost/errors.hpp"

using namespace paramcost;
namespace c2 = paramcost::cocomo2;

TEST_CASE("new object points apply the reuse discount") {
    CHECK(c2::new_object_points({100, 20, 10}) == 80.0);
    CHECK(c2::new_object_points({100, 0, 10}) == 100.0);
    CHECK(c2::new_object_points({100, 100, 10}) == 0.0);
    CHECK_THROWS_AS(c2::ObjectPointInput(100, -1, 10), ValidationError);
    CHECK_THROWS_AS(c2::ObjectPointInput(100, 101, 10), ValidationError);
    CHECK_THROWS_AS(c2::ObjectPointInput(-5, 0, 10), ValidationError);
}

TEST_CASE("application-composition effort is NOP over productivity") {
    CHECK(c2::effort_app_composition({100, 20, 10}).value == 8.0);
    CHECK(c2::effort_app_composition({46, 0, 4.6}).value == doctest::Approx(10.0).epsilon(1e-12));
    CHECK_THROWS_AS(c2::ObjectPointInput(100, 20, 0.0), DomainError);
    CHECK_THROWS_AS(c2::ObjectPointInput(100, 20, -3.0), DomainError);
}

TEST_CASE("early-design effort is linear in size") {
    CHECK(c2::effort_early_design(SizeKloc(50), 1.0).value ==
          doctest::Approx(122.5).epsilon(1e-12));
    CHECK(c2::effort_early_design(SizeKloc(40), 1.0).value ==
          doctest::Approx(98.0).epsilon(1e-12));
    const double one = c2::effort_early_design(SizeKloc(17), 1.3).value;
    const double two = c2::effort_early_design(SizeKloc(34), 1.3).value;
    CHECK(two == doctest::Approx(2.0 * one).epsilon(1e-12));
    CHECK_THROWS_AS(c2::effort_early_design(SizeKloc(10), 0.0), DomainError);
}

TEST_CASE("the post-architecture exponent is affine in the scale-factor sum") {
    CHECK(c2::post_arch_exponent(c2::ScaleFactorProfile::uniform(0)) ==
          doctest::Approx(1.01).epsilon(1e-12));
    CHECK(c2::post_arch_exponent(c2::ScaleFactorProfile::defaults()) ==
          doctest::Approx(1.15).epsilon(1e-12));
    CHECK(c2::post_arch_exponent(c2::ScaleFactorProfile::uniform(19)) ==
          doctest::Approx(1.20).epsilon(1e-12));
    // slope check: one extra point of scale sum adds exactly 0.01
    const double b1 = c2::post_arch_exponent(c2::ScaleFactorProfile::uniform(7));
    const double b2 = c2::post_arch_exponent(c2::ScaleFactorProfile::uniform(8));
    CHECK(b2 - b1 == doctest::Approx(0.01).epsilon(1e-9));
    CHECK(c2::ScaleFactorProfile::defaults().sum() == doctest::Approx(14.0).epsilon(1e-12));
    CHECK_THROWS_AS(c2::ScaleFactorProfile({1, 2, 3, -1, 0}), DomainError);
}

TEST_CASE("post-architecture effort reproduces the stock constants") {
    const auto nominal = c2::ScaleFactorProfile::defaults();
    CHECK(c2::effort_post_architecture(SizeKloc(50), nominal, 1.0).value ==
          doctest::Approx(229.27446326044642).epsilon(1e-12));
    CHECK(c2::effort_post_architecture(SizeKloc(100), nominal, 1.0).value ==
          doctest::Approx(508.79189031706403).epsilon(1e-12));
    CHECK(c2::effort_post_architecture(SizeKloc(50), c2::ScaleFactorProfile::uniform(0), 1.0)
              .value == doctest::Approx(132.58667661047156).epsilon(1e-12));
}

TEST_CASE("post-architecture effort is linear in the adjustment factor") {
    const auto nominal = c2::ScaleFactorProfile::defaults();
    const double base = c2::effort_post_architecture(SizeKloc(50), nominal, 1.0).value;
    const double scaled = c2::effort_post_architecture(SizeKloc(50), nominal, 1.15).value;
    CHECK(scaled == doctest::Approx(1.15 * base).epsilon(1e-12));
}

TEST_CASE("driver tables have the expected shapes and sample entries") {
    const auto early = c2::early_design_driver_table();
    CHECK(early.driver_count() == 7);
    CHECK(early.has_driver("rcpx"));
    CHECK(early.has_driver("ruse"));
    CHECK(early.multiplier("pers", Rating::ExtraLow) == 2.12);
    CHECK(early.multiplier("rcpx", Rating::ExtraHigh) == 2.38);
    CHECK(early.multiplier("sced", Rating::VeryLow) == 1.43);

    const auto post = c2::post_architecture_driver_table();
    CHECK(post.driver_count() == 17);
    CHECK(post.multiplier("site", Rating::ExtraHigh) == 0.80);
    CHECK(post.multiplier("rely", Rating::VeryHigh) == 1.26);
}

TEST_CASE("early-design profile multiplies into the estimate") {
    const auto table = c2::early_design_driver_table();
    c2::EarlyDesignDrivers profile(table);
    profile.set("rcpx", Rating::High); // 1.30
    const double eaf = profile.effort_adjustment_factor();
    CHECK(eaf == 1.30);
    CHECK(c2::effort_early_design(SizeKloc(50), eaf).value ==
          doctest::Approx(122.5 * 1.30).epsilon(1e-12));
}

TEST_CASE("tables survive a dump/apply round trip") {
    const auto original = c2::Tables::defaults();
    KeyValueConfig dumped;
    original.dump_into(dumped);
    CHECK(dumped.get_double("cocomo2.early.a") == 2.45);
    CHECK(dumped.get_double("cocomo2.post.a") == 2.55);
    CHECK(dumped.get_double("cocomo2.scale.prec") == doctest::Approx(2.8).epsilon(1e-12));

    auto rebuilt = c2::Tables::defaults();
    rebuilt.apply(dumped);
    KeyValueConfig again;
    rebuilt.dump_into(again);
    CHECK(again.serialize() == dumped.serialize());
}

TEST_CASE("unknown keys under the prefix are rejected") {
    KeyValueConfig cfg;
    cfg.set("cocomo2.post.b", "1.2");
    auto tables = c2::Tables::defaults();
    CHECK_THROWS_AS(tables.apply(cfg), ConfigError);
}
