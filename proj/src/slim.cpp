#include "paramcost/slim.hpp"

#include <cmath>

namespace paramcost::slim {

namespace {

void require_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw DomainError(std::string(what) + " must be positive and finite");
    }
}

} // namespace

EffortPy::EffortPy(double v) : value(v) {
    if (!std::isfinite(v) || v < 0.0) {
        throw DomainError("effort must be a non-negative, finite person-year value");
    }
}

EffortPm EffortPy::to_person_months() const {
    return EffortPm(value * 12.0);
}

EffortPy effort_from_software_equation(double size_loc, double environment, double td_years) {
    require_positive(size_loc, "size (LOC)");
    require_positive(environment, "environment factor");
    require_positive(td_years, "delivery time");
    double cbrt_effort = size_loc / (environment * std::pow(td_years, 4.0 / 3.0));
    return EffortPy(cbrt_effort * cbrt_effort * cbrt_effort);
}

EffortPy effort_from_buildup(double buildup, double td_years) {
    require_positive(buildup, "manpower buildup");
    require_positive(td_years, "delivery time");
    return EffortPy(buildup * td_years * td_years * td_years);
}

EffortPy effort_power_form(double buildup, double environment, double size_loc) {
    require_positive(buildup, "manpower buildup");
    require_positive(environment, "environment factor");
    require_positive(size_loc, "size (LOC)");
    return EffortPy(std::pow(buildup, 4.0 / 7.0) * std::pow(environment, -9.0 / 7.0) *
                    std::pow(size_loc, 9.0 / 7.0));
}

double td_power_form(double buildup, double environment, double size_loc) {
    require_positive(buildup, "manpower buildup");
    require_positive(environment, "environment factor");
    require_positive(size_loc, "size (LOC)");
    return std::pow(buildup, -1.0 / 7.0) * std::pow(environment, -3.0 / 7.0) *
           std::pow(size_loc, 3.0 / 7.0);
}

double environment_from_history(double size_loc, EffortPy effort, double td_years) {
    require_positive(size_loc, "size (LOC)");
    require_positive(effort.value, "effort");
    require_positive(td_years, "delivery time");
    return size_loc / (std::cbrt(effort.value) * std::pow(td_years, 4.0 / 3.0));
}

std::vector<std::string> advisories(double buildup, double size_loc) {
    std::vector<std::string> notes;
    if (buildup < kBuildupTypicalLow || buildup > kBuildupTypicalHigh) {
        notes.push_back("manpower buildup " + format_compact(buildup) +
                        " lies outside the typical range [8, 27]");
    }
    if (size_loc < kLargeProjectLoc) {
        notes.push_back("the model is normally applied to projects above 70 KLOC; size is " +
                        format_compact(size_loc) + " LOC");
    }
    return notes;
}

} // namespace paramcost::slim
