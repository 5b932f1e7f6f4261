#include "paramcost/core.hpp"

#include <charconv>
#include <cmath>

namespace paramcost {

SizeKloc::SizeKloc(double v) : value(v) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw DomainError("size must be a positive, finite KLOC value, got " +
                          std::to_string(v));
    }
}

EffortPm::EffortPm(double v) : value(v) {
    if (!std::isfinite(v) || v < 0.0) {
        throw DomainError("effort must be a non-negative, finite person-month value, got " +
                          std::to_string(v));
    }
}

std::string_view to_string(Mode mode) {
    switch (mode) {
    case Mode::Organic: return "organic";
    case Mode::Semidetached: return "semidetached";
    case Mode::Embedded: return "embedded";
    }
    throw ValidationError("invalid mode value");
}

Mode parse_mode(std::string_view name) {
    if (name == "organic") return Mode::Organic;
    if (name == "semidetached") return Mode::Semidetached;
    if (name == "embedded") return Mode::Embedded;
    throw ValidationError("unknown mode '" + std::string(name) +
                          "' (expected organic, semidetached or embedded)");
}

PowerLawConstants::PowerLawConstants(double a_, double b_) : a(a_), b(b_) {
    if (!std::isfinite(a) || a <= 0.0) {
        throw DomainError("power-law multiplier a must be positive and finite");
    }
    if (!std::isfinite(b) || b <= 0.0) {
        throw DomainError("power-law exponent b must be positive and finite");
    }
}

EffortPm power_law_effort(SizeKloc size, const PowerLawConstants& constants) {
    return EffortPm(constants.a * std::pow(size.value, constants.b));
}

std::int64_t table_round(EffortPm effort) {
    return static_cast<std::int64_t>(std::trunc(effort.value));
}

std::string format_compact(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        throw Error("number formatting failed");
    }
    return std::string(buf, ptr);
}

} // namespace paramcost
