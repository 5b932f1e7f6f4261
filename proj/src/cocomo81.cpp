#include "paramcost/cocomo81.hpp"

#include <cmath>

namespace paramcost::cocomo81 {

namespace {

constexpr auto none = std::nullopt;

std::array<std::optional<double>, kRatingCount> multipliers(std::optional<double> xl,
                                                            std::optional<double> vl,
                                                            std::optional<double> lo,
                                                            std::optional<double> no,
                                                            std::optional<double> hi,
                                                            std::optional<double> vh,
                                                            std::optional<double> xh) {
    return {xl, vl, lo, no, hi, vh, xh};
}

void require_positive_eaf(double eaf) {
    if (!std::isfinite(eaf) || eaf <= 0.0) {
        throw DomainError("effort adjustment factor must be positive and finite");
    }
}

} // namespace

ModeConstants ModeConstants::defaults() {
    return ModeConstants{
        // organic, semidetached, embedded
        {PowerLawConstants(2.4, 1.05), PowerLawConstants(3.0, 1.12), PowerLawConstants(3.6, 1.20)},
        {PowerLawConstants(3.2, 1.05), PowerLawConstants(3.0, 1.12), PowerLawConstants(2.8, 1.20)},
    };
}

const PowerLawConstants& ModeConstants::basic_for(Mode mode) const {
    return basic[static_cast<std::size_t>(mode)];
}

const PowerLawConstants& ModeConstants::intermediate_for(Mode mode) const {
    return intermediate[static_cast<std::size_t>(mode)];
}

DriverTable standard_driver_table() {
    // Standard 1981 intermediate-model multipliers.
    std::vector<DriverRow> rows = {
        {"rely", "required software reliability", Trend::Increasing,
         multipliers(none, 0.75, 0.88, 1.00, 1.15, 1.40, none)},
        {"data", "database size", Trend::Increasing,
         multipliers(none, none, 0.94, 1.00, 1.08, 1.16, none)},
        {"cplx", "product complexity", Trend::Increasing,
         multipliers(none, 0.70, 0.85, 1.00, 1.15, 1.30, 1.65)},
        {"time", "execution time constraint", Trend::Increasing,
         multipliers(none, none, none, 1.00, 1.11, 1.30, 1.66)},
        {"stor", "main storage constraint", Trend::Increasing,
         multipliers(none, none, none, 1.00, 1.06, 1.21, 1.56)},
        {"virt", "virtual machine volatility", Trend::Increasing,
         multipliers(none, none, 0.87, 1.00, 1.15, 1.30, none)},
        {"turn", "computer turnaround time", Trend::Increasing,
         multipliers(none, none, 0.87, 1.00, 1.07, 1.15, none)},
        {"acap", "analyst capability", Trend::Decreasing,
         multipliers(none, 1.46, 1.19, 1.00, 0.86, 0.71, none)},
        {"aexp", "applications experience", Trend::Decreasing,
         multipliers(none, 1.29, 1.13, 1.00, 0.91, 0.82, none)},
        {"pcap", "programmer capability", Trend::Decreasing,
         multipliers(none, 1.42, 1.17, 1.00, 0.86, 0.70, none)},
        {"vexp", "virtual machine experience", Trend::Decreasing,
         multipliers(none, 1.21, 1.10, 1.00, 0.90, none, none)},
        {"lexp", "programming language experience", Trend::Decreasing,
         multipliers(none, 1.14, 1.07, 1.00, 0.95, none, none)},
        {"modp", "modern programming practices", Trend::Decreasing,
         multipliers(none, 1.24, 1.10, 1.00, 0.91, 0.82, none)},
        {"tool", "use of software tools", Trend::Decreasing,
         multipliers(none, 1.24, 1.10, 1.00, 0.91, 0.83, none)},
        // Schedule compression and stretch both cost effort; not monotone.
        {"sced", "required development schedule", Trend::Mixed,
         multipliers(none, 1.23, 1.08, 1.00, 1.04, 1.10, none)},
    };
    return DriverTable("cocomo81", std::move(rows));
}

std::array<std::string_view, kPhaseCount> phase_ids() {
    return {"requirements_and_product_design", "detailed_design", "code_and_unit_test",
            "integration_and_test"};
}

std::array<std::string_view, kPhaseCount> phase_names() {
    return {"requirements planning and product design", "detailed design", "code and unit test",
            "integration and testing"};
}

PhaseWeights::PhaseWeights(const std::array<double, kPhaseCount>& w) : weights(w) {
    for (double v : weights) {
        if (!std::isfinite(v) || v < 0.0) {
            throw DomainError("phase weights must be non-negative and finite");
        }
    }
}

PhaseWeights PhaseWeights::defaults() {
    // Approximate split; only the 1.06 sum is fitted to the published table.
    return PhaseWeights({0.18, 0.26, 0.40, 0.22});
}

double PhaseWeights::sum() const {
    double s = 0.0;
    for (double v : weights) s += v;
    return s;
}

bool PhaseWeights::all_zero() const {
    for (double v : weights) {
        if (v != 0.0) return false;
    }
    return true;
}

EffortPm effort_basic(SizeKloc size, Mode mode, const ModeConstants& constants) {
    return power_law_effort(size, constants.basic_for(mode));
}

EffortPm effort_basic(SizeKloc size, Mode mode) {
    return effort_basic(size, mode, ModeConstants::defaults());
}

double effort_adjustment_factor(const CostDriverProfile& profile) {
    return profile.effort_adjustment_factor();
}

EffortPm effort_intermediate(SizeKloc size, Mode mode, double eaf,
                             const ModeConstants& constants) {
    require_positive_eaf(eaf);
    return EffortPm(power_law_effort(size, constants.intermediate_for(mode)).value * eaf);
}

EffortPm effort_intermediate(SizeKloc size, Mode mode, double eaf) {
    return effort_intermediate(size, mode, eaf, ModeConstants::defaults());
}

DetailedEffort effort_detailed(SizeKloc size, Mode mode, double eaf, const PhaseWeights& weights,
                               const ModeConstants& constants) {
    EffortPm nominal = effort_intermediate(size, mode, eaf, constants);
    DetailedEffort result;
    result.zero_weights = weights.all_zero();
    for (int i = 0; i < kPhaseCount; ++i) {
        result.phase_pm[static_cast<std::size_t>(i)] =
            nominal.value * weights.weights[static_cast<std::size_t>(i)];
    }
    result.total = EffortPm(nominal.value * weights.sum());
    return result;
}

DetailedEffort effort_detailed(SizeKloc size, Mode mode, double eaf, const PhaseWeights& weights) {
    return effort_detailed(size, mode, eaf, weights, ModeConstants::defaults());
}

Tables Tables::defaults() {
    return Tables{ModeConstants::defaults(), standard_driver_table(), PhaseWeights::defaults()};
}

void Tables::apply(const KeyValueConfig& config) {
    auto apply_one = [this](const std::string& key, double number) {
        std::string rest = key.substr(9);
        if (rest.rfind("basic.", 0) == 0 || rest.rfind("intermediate.", 0) == 0) {
            bool is_basic = rest.rfind("basic.", 0) == 0;
            std::string tail = rest.substr(is_basic ? 6 : 13);
            auto dot = tail.find('.');
            if (dot == std::string::npos) {
                throw ConfigError("unknown cocomo81 constants key: " + key);
            }
            Mode mode = parse_mode(tail.substr(0, dot));
            std::string which = tail.substr(dot + 1);
            auto& pair = is_basic ? constants.basic[static_cast<std::size_t>(mode)]
                                  : constants.intermediate[static_cast<std::size_t>(mode)];
            if (which == "a") {
                pair = PowerLawConstants(number, pair.b);
            } else if (which == "b") {
                pair = PowerLawConstants(pair.a, number);
            } else {
                throw ConfigError("unknown cocomo81 constants key: " + key);
            }
        } else if (rest.rfind("driver.", 0) == 0) {
            std::string tail = rest.substr(7);
            auto dot = tail.find('.');
            if (dot == std::string::npos) {
                throw ConfigError("unknown cocomo81 driver key: " + key);
            }
            drivers.set_multiplier(tail.substr(0, dot), parse_rating(tail.substr(dot + 1)),
                                   number);
        } else if (rest.rfind("phase.", 0) == 0) {
            std::string phase = rest.substr(6);
            auto ids = phase_ids();
            bool found = false;
            auto w = phases.weights;
            for (int i = 0; i < kPhaseCount; ++i) {
                if (ids[static_cast<std::size_t>(i)] == phase) {
                    w[static_cast<std::size_t>(i)] = number;
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw ConfigError("unknown cocomo81 phase in key: " + key);
            }
            phases = PhaseWeights(w);
        } else {
            throw ConfigError("unknown cocomo81 config key: " + key);
        }
    };
    for (const auto& [key, value] : config.entries()) {
        if (key.rfind("cocomo81.", 0) != 0) continue;
        try {
            apply_one(key, *config.get_double(key));
        } catch (const ConfigError&) {
            throw;
        } catch (const Error& e) {
            // unknown mode/rating/driver names or bad values inside a key are
            // config problems, not caller bugs
            throw ConfigError("config key '" + key + "': " + e.what());
        }
    }
}

void Tables::dump_into(KeyValueConfig& config) const {
    for (Mode mode : kAllModes) {
        std::string m(to_string(mode));
        config.set_double("cocomo81.basic." + m + ".a", constants.basic_for(mode).a);
        config.set_double("cocomo81.basic." + m + ".b", constants.basic_for(mode).b);
        config.set_double("cocomo81.intermediate." + m + ".a", constants.intermediate_for(mode).a);
        config.set_double("cocomo81.intermediate." + m + ".b", constants.intermediate_for(mode).b);
    }
    for (const auto& row : drivers.rows()) {
        for (int r = 0; r < kRatingCount; ++r) {
            const auto& cell = row.multiplier[static_cast<std::size_t>(r)];
            if (cell) {
                config.set_double("cocomo81.driver." + row.id + "." +
                                      std::string(to_string(static_cast<Rating>(r))),
                                  *cell);
            }
        }
    }
    auto ids = phase_ids();
    for (int i = 0; i < kPhaseCount; ++i) {
        config.set_double("cocomo81.phase." + std::string(ids[static_cast<std::size_t>(i)]),
                          phases.weights[static_cast<std::size_t>(i)]);
    }
}

} // namespace paramcost::cocomo81
