#pragma once

#include <array>
#include <string_view>

#include "paramcost/config.hpp"
#include "paramcost/core.hpp"
#include "paramcost/drivers.hpp"

namespace paramcost::cocomo81 {

/// (a, b) pairs for the basic and intermediate variants, indexed by Mode.
/// Configuration data: overridable from a config file or replaceable by a
/// calibration run.
struct ModeConstants {
    std::array<PowerLawConstants, 3> basic;
    std::array<PowerLawConstants, 3> intermediate;

    static ModeConstants defaults();

    const PowerLawConstants& basic_for(Mode mode) const;
    const PowerLawConstants& intermediate_for(Mode mode) const;
};

/// The 15 intermediate-model cost drivers with the standard published
/// multiplier values. Not part of this project's acceptance surface beyond
/// the all-nominal product of 1.0; shipped as overridable defaults.
DriverTable standard_driver_table();

using CostDriverProfile = DriverProfile;

inline constexpr int kPhaseCount = 4;

/// Lifecycle phases of the detailed model, in order.
std::array<std::string_view, kPhaseCount> phase_ids();
std::array<std::string_view, kPhaseCount> phase_names();

/// Per-phase effort weights for the detailed model. The effective multiplier
/// is the sum of the weights.
struct PhaseWeights {
    std::array<double, kPhaseCount> weights;

    explicit PhaseWeights(const std::array<double, kPhaseCount>& w); // DomainError on negatives

    /// Default split sums to 1.06, the ratio the published detailed-model
    /// table carries over the intermediate one. The per-phase split of that
    /// total is approximate and exists to be overridden.
    static PhaseWeights defaults();

    double sum() const;
    bool all_zero() const;
};

struct DetailedEffort {
    EffortPm total;
    std::array<double, kPhaseCount> phase_pm;
    bool zero_weights = false; // all-zero weights: defined but degenerate
};

EffortPm effort_basic(SizeKloc size, Mode mode, const ModeConstants& constants);
EffortPm effort_basic(SizeKloc size, Mode mode);

/// Product of the 15 per-driver multipliers.
double effort_adjustment_factor(const CostDriverProfile& profile);

EffortPm effort_intermediate(SizeKloc size, Mode mode, double eaf, const ModeConstants& constants);
EffortPm effort_intermediate(SizeKloc size, Mode mode, double eaf);

DetailedEffort effort_detailed(SizeKloc size, Mode mode, double eaf, const PhaseWeights& weights,
                               const ModeConstants& constants);
DetailedEffort effort_detailed(SizeKloc size, Mode mode, double eaf, const PhaseWeights& weights);

/// All cocomo81 configuration data in one overridable bundle.
struct Tables {
    ModeConstants constants;
    DriverTable drivers;
    PhaseWeights phases;

    static Tables defaults();

    /// Consumes `cocomo81.*` keys. Unknown keys under the prefix are a
    /// ConfigError.
    void apply(const KeyValueConfig& config);
    void dump_into(KeyValueConfig& config) const;
};

} // namespace paramcost::cocomo81
