#include "paramcost/cocomo2.hpp"

#include <cmath>

namespace paramcost::cocomo2 {

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

ObjectPointInput::ObjectPointInput(double object_points_, double reuse_percent_,
                                   double productivity_rate_)
    : object_points(object_points_), reuse_percent(reuse_percent_),
      productivity_rate(productivity_rate_) {
    if (!std::isfinite(object_points) || object_points < 0.0) {
        throw ValidationError("object points must be non-negative and finite");
    }
    if (!std::isfinite(reuse_percent) || reuse_percent < 0.0 || reuse_percent > 100.0) {
        throw ValidationError("reuse percent must lie in [0, 100], got " +
                              std::to_string(reuse_percent));
    }
    if (!std::isfinite(productivity_rate) || productivity_rate <= 0.0) {
        throw DomainError("productivity rate must be positive and finite");
    }
}

double new_object_points(const ObjectPointInput& input) {
    return input.object_points * (100.0 - input.reuse_percent) / 100.0;
}

EffortPm effort_app_composition(const ObjectPointInput& input) {
    return EffortPm(new_object_points(input) / input.productivity_rate);
}

DriverTable early_design_driver_table() {
    // Standard early-design multipliers; shipped as overridable defaults.
    std::vector<DriverRow> rows = {
        {"rcpx", "product reliability and complexity", Trend::Increasing,
         multipliers(0.73, 0.81, 0.98, 1.00, 1.30, 1.74, 2.38)},
        {"ruse", "developed for reusability", Trend::Increasing,
         multipliers(none, none, 0.95, 1.00, 1.07, 1.15, 1.24)},
        {"pdif", "platform difficulty", Trend::Increasing,
         multipliers(none, none, 0.87, 1.00, 1.29, 1.81, 2.61)},
        {"pers", "personnel capability", Trend::Decreasing,
         multipliers(2.12, 1.62, 1.26, 1.00, 0.83, 0.63, 0.50)},
        {"prex", "personnel experience", Trend::Decreasing,
         multipliers(1.59, 1.33, 1.12, 1.00, 0.87, 0.74, 0.62)},
        {"fcil", "facilities", Trend::Decreasing,
         multipliers(1.43, 1.30, 1.10, 1.00, 0.87, 0.73, 0.62)},
        {"sced", "required development schedule", Trend::Decreasing,
         multipliers(none, 1.43, 1.14, 1.00, 1.00, 1.00, none)},
    };
    return DriverTable("cocomo2-early", std::move(rows));
}

DriverTable post_architecture_driver_table() {
    std::vector<DriverRow> rows = {
        {"rely", "required software reliability", Trend::Increasing,
         multipliers(none, 0.82, 0.92, 1.00, 1.10, 1.26, none)},
        {"data", "database size", Trend::Increasing,
         multipliers(none, none, 0.90, 1.00, 1.14, 1.28, none)},
        {"cplx", "product complexity", Trend::Increasing,
         multipliers(none, 0.73, 0.87, 1.00, 1.17, 1.34, 1.74)},
        {"ruse", "developed for reusability", Trend::Increasing,
         multipliers(none, none, 0.95, 1.00, 1.07, 1.15, 1.24)},
        {"docu", "documentation match to life-cycle needs", Trend::Increasing,
         multipliers(none, 0.81, 0.91, 1.00, 1.11, 1.23, none)},
        {"time", "execution time constraint", Trend::Increasing,
         multipliers(none, none, none, 1.00, 1.11, 1.29, 1.63)},
        {"stor", "main storage constraint", Trend::Increasing,
         multipliers(none, none, none, 1.00, 1.05, 1.17, 1.46)},
        {"pvol", "platform volatility", Trend::Increasing,
         multipliers(none, none, 0.87, 1.00, 1.15, 1.30, none)},
        {"acap", "analyst capability", Trend::Decreasing,
         multipliers(none, 1.42, 1.19, 1.00, 0.85, 0.71, none)},
        {"pcap", "programmer capability", Trend::Decreasing,
         multipliers(none, 1.34, 1.15, 1.00, 0.88, 0.76, none)},
        {"pcon", "personnel continuity", Trend::Decreasing,
         multipliers(none, 1.29, 1.12, 1.00, 0.90, 0.81, none)},
        {"apex", "applications experience", Trend::Decreasing,
         multipliers(none, 1.22, 1.10, 1.00, 0.88, 0.81, none)},
        {"plex", "platform experience", Trend::Decreasing,
         multipliers(none, 1.19, 1.09, 1.00, 0.91, 0.85, none)},
        {"ltex", "language and tool experience", Trend::Decreasing,
         multipliers(none, 1.20, 1.09, 1.00, 0.91, 0.84, none)},
        {"tool", "use of software tools", Trend::Decreasing,
         multipliers(none, 1.17, 1.09, 1.00, 0.90, 0.78, none)},
        {"site", "multisite development", Trend::Decreasing,
         multipliers(none, 1.22, 1.09, 1.00, 0.93, 0.86, 0.80)},
        {"sced", "required development schedule", Trend::Decreasing,
         multipliers(none, 1.43, 1.14, 1.00, 1.00, 1.00, none)},
    };
    return DriverTable("cocomo2-post", std::move(rows));
}

std::array<std::string_view, kScaleFactorCount> scale_factor_ids() {
    return {"prec", "flex", "resl", "team", "pmat"};
}

ScaleFactorProfile::ScaleFactorProfile(const std::array<double, kScaleFactorCount>& w)
    : weights(w) {
    for (double v : weights) {
        if (!std::isfinite(v) || v < 0.0) {
            throw DomainError("scale factor weights must be non-negative and finite");
        }
    }
}

ScaleFactorProfile ScaleFactorProfile::uniform(double sum) {
    if (!std::isfinite(sum) || sum < 0.0) {
        throw DomainError("scale factor sum must be non-negative and finite");
    }
    std::array<double, kScaleFactorCount> w{};
    w.fill(sum / kScaleFactorCount);
    return ScaleFactorProfile(w);
}

ScaleFactorProfile ScaleFactorProfile::defaults() {
    return uniform(14.0);
}

double ScaleFactorProfile::sum() const {
    double s = 0.0;
    for (double v : weights) s += v;
    return s;
}

double post_arch_exponent(const ScaleFactorProfile& profile) {
    return 1.01 + 0.01 * profile.sum();
}

EffortPm effort_early_design(SizeKloc size, double eaf, const Constants& constants) {
    require_positive_eaf(eaf);
    return EffortPm(constants.early_a * size.value * eaf);
}

EffortPm effort_early_design(SizeKloc size, double eaf) {
    return effort_early_design(size, eaf, Constants{});
}

EffortPm effort_post_architecture(SizeKloc size, const ScaleFactorProfile& profile, double eaf,
                                  const Constants& constants) {
    require_positive_eaf(eaf);
    double b = post_arch_exponent(profile);
    return EffortPm(constants.post_a * std::pow(size.value, b) * eaf);
}

EffortPm effort_post_architecture(SizeKloc size, const ScaleFactorProfile& profile, double eaf) {
    return effort_post_architecture(size, profile, eaf, Constants{});
}

Tables Tables::defaults() {
    return Tables{Constants{}, early_design_driver_table(), post_architecture_driver_table(),
                  ScaleFactorProfile::defaults()};
}

void Tables::apply(const KeyValueConfig& config) {
    auto apply_one = [this](const std::string& key, double number) {
        std::string rest = key.substr(8);
        if (rest == "early.a") {
            if (number <= 0.0) throw ConfigError("cocomo2.early.a must be positive");
            constants.early_a = number;
        } else if (rest == "post.a") {
            if (number <= 0.0) throw ConfigError("cocomo2.post.a must be positive");
            constants.post_a = number;
        } else if (rest.rfind("early.driver.", 0) == 0 || rest.rfind("post.driver.", 0) == 0) {
            bool is_early = rest.rfind("early.", 0) == 0;
            std::string tail = rest.substr(is_early ? 13 : 12);
            auto dot = tail.find('.');
            if (dot == std::string::npos) {
                throw ConfigError("unknown cocomo2 driver key: " + key);
            }
            DriverTable& table = is_early ? early : post;
            table.set_multiplier(tail.substr(0, dot), parse_rating(tail.substr(dot + 1)), number);
        } else if (rest.rfind("scale.", 0) == 0) {
            std::string factor = rest.substr(6);
            auto ids = scale_factor_ids();
            bool found = false;
            auto w = default_scale.weights;
            for (int i = 0; i < kScaleFactorCount; ++i) {
                if (ids[static_cast<std::size_t>(i)] == factor) {
                    w[static_cast<std::size_t>(i)] = number;
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw ConfigError("unknown cocomo2 scale factor in key: " + key);
            }
            default_scale = ScaleFactorProfile(w);
        } else {
            throw ConfigError("unknown cocomo2 config key: " + key);
        }
    };
    for (const auto& [key, value] : config.entries()) {
        if (key.rfind("cocomo2.", 0) != 0) continue;
        try {
            apply_one(key, *config.get_double(key));
        } catch (const ConfigError&) {
            throw;
        } catch (const Error& e) {
            throw ConfigError("config key '" + key + "': " + e.what());
        }
    }
}

void Tables::dump_into(KeyValueConfig& config) const {
    config.set_double("cocomo2.early.a", constants.early_a);
    config.set_double("cocomo2.post.a", constants.post_a);
    auto dump_table = [&config](const DriverTable& table, const std::string& prefix) {
        for (const auto& row : table.rows()) {
            for (int r = 0; r < kRatingCount; ++r) {
                const auto& cell = row.multiplier[static_cast<std::size_t>(r)];
                if (cell) {
                    config.set_double(prefix + row.id + "." +
                                          std::string(to_string(static_cast<Rating>(r))),
                                      *cell);
                }
            }
        }
    };
    dump_table(early, "cocomo2.early.driver.");
    dump_table(post, "cocomo2.post.driver.");
    auto ids = scale_factor_ids();
    for (int i = 0; i < kScaleFactorCount; ++i) {
        config.set_double("cocomo2.scale." + std::string(ids[static_cast<std::size_t>(i)]),
                          default_scale.weights[static_cast<std::size_t>(i)]);
    }
}

} // namespace paramcost::cocomo2
