#pragma once

#include <array>
#include <string_view>

#include "paramcost/config.hpp"
#include "paramcost/core.hpp"
#include "paramcost/drivers.hpp"

namespace paramcost::cocomo2 {

/// Application-composition sizing input.
struct ObjectPointInput {
    double object_points;    // >= 0
    double reuse_percent;    // in [0, 100]
    double productivity_rate; // NOP per person-month, > 0

    ObjectPointInput(double object_points, double reuse_percent, double productivity_rate);
};

/// New object points after the reuse discount:
/// object_points * (100 - reuse%) / 100.
double new_object_points(const ObjectPointInput& input);

/// NOP / PROD.
EffortPm effort_app_composition(const ObjectPointInput& input);

/// Linear-model multiplier.
inline constexpr double kEarlyDesignA = 2.45;
/// Post-architecture multiplier.
inline constexpr double kPostArchA = 2.55;

struct Constants {
    double early_a = kEarlyDesignA;
    double post_a = kPostArchA;
};

/// The 7 early-design drivers (RCPX, RUSE, PDIF, PERS, PREX, FCIL, SCED).
DriverTable early_design_driver_table();
/// The 17 post-architecture drivers.
DriverTable post_architecture_driver_table();

using EarlyDesignDrivers = DriverProfile;
using PostArchDrivers = DriverProfile;

inline constexpr int kScaleFactorCount = 5;

std::array<std::string_view, kScaleFactorCount> scale_factor_ids(); // prec flex resl team pmat

/// Numeric weights of the five exponent scale factors. The sum feeds the
/// post-architecture exponent.
struct ScaleFactorProfile {
    std::array<double, kScaleFactorCount> weights;

    explicit ScaleFactorProfile(const std::array<double, kScaleFactorCount>& w); // DomainError

    /// Every factor set to sum/5.
    static ScaleFactorProfile uniform(double sum);
    /// Sum 14 (exponent 1.15), the value the published nominal column is
    /// consistent with.
    static ScaleFactorProfile defaults();

    double sum() const;
};

/// b = 1.01 + 0.01 * sum(w_i).
double post_arch_exponent(const ScaleFactorProfile& profile);

/// early_a * KLOC * EAF (linear in size).
EffortPm effort_early_design(SizeKloc size, double eaf, const Constants& constants);
EffortPm effort_early_design(SizeKloc size, double eaf);

/// post_a * size^b * EAF with b from the scale-factor profile.
EffortPm effort_post_architecture(SizeKloc size, const ScaleFactorProfile& profile, double eaf,
                                  const Constants& constants);
EffortPm effort_post_architecture(SizeKloc size, const ScaleFactorProfile& profile, double eaf);

struct Tables {
    Constants constants;
    DriverTable early;
    DriverTable post;
    ScaleFactorProfile default_scale;

    static Tables defaults();

    /// Consumes `cocomo2.*` keys; unknown keys under the prefix are a
    /// ConfigError.
    void apply(const KeyValueConfig& config);
    void dump_into(KeyValueConfig& config) const;
};

} // namespace paramcost::cocomo2
