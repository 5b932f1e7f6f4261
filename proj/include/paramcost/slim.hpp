#pragma once

#include <string>
#include <vector>

#include "paramcost/core.hpp"

namespace paramcost::slim {

/// Effort in person-years, the native unit of the software equation.
/// Converted to person-months only at the reporting boundary.
struct EffortPy {
    double value = 0.0;

    EffortPy() = default;
    explicit EffortPy(double v);

    EffortPm to_person_months() const; // exactly x12
};

// Typical manpower-buildup range: ~8 for entirely new software with many
// interfaces up to ~27 for rebuilt software. Descriptive, so values outside
// it produce advisories rather than errors.
inline constexpr double kBuildupTypicalLow = 8.0;
inline constexpr double kBuildupTypicalHigh = 27.0;

// The model is usually applied to large projects; below this LOC threshold
// an advisory is attached.
inline constexpr double kLargeProjectLoc = 70000.0;

/// Software equation solved for effort: (S / (E * td^{4/3}))^3.
EffortPy effort_from_software_equation(double size_loc, double environment, double td_years);

/// Manpower-buildup relation: D0 * td^3.
EffortPy effort_from_buildup(double buildup, double td_years);

/// Combined power form: D0^{4/7} * E^{-9/7} * S^{9/7}.
EffortPy effort_power_form(double buildup, double environment, double size_loc);

/// Delivery time power form: D0^{-1/7} * E^{-3/7} * S^{3/7}, in years.
double td_power_form(double buildup, double environment, double size_loc);

/// Software equation solved for the environment factor given observed size,
/// effort and delivery time: E = S / (effort^{1/3} * td^{4/3}).
double environment_from_history(double size_loc, EffortPy effort, double td_years);

/// Soft warnings for parameters outside the ranges the model is described
/// for. Never fails.
std::vector<std::string> advisories(double buildup, double size_loc);

} // namespace paramcost::slim
