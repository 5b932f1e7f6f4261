#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "paramcost/errors.hpp"

namespace paramcost {

/// Project size in thousands of delivered lines of code. Strictly positive.
struct SizeKloc {
    double value;

    explicit SizeKloc(double v);
};

/// Effort in person-months. Non-negative, finite.
struct EffortPm {
    double value = 0.0;

    EffortPm() = default;
    explicit EffortPm(double v);
};

/// COCOMO81 development mode. Selects the (a, b) constant pair.
enum class Mode { Organic, Semidetached, Embedded };

inline constexpr std::array<Mode, 3> kAllModes = {Mode::Organic, Mode::Semidetached,
                                                  Mode::Embedded};

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view name); // ValidationError on unknown name

/// Multiplier and exponent of an effort power law: effort = a * size^b.
struct PowerLawConstants {
    double a;
    double b;

    PowerLawConstants(double a, double b);
};

/// effort = a * size^b, full floating precision. Rounding is a reporting
/// concern, never done here.
EffortPm power_law_effort(SizeKloc size, const PowerLawConstants& constants);

/// Integer person-months used when comparing against published tables that
/// print whole numbers. Policy: truncation toward zero.
std::int64_t table_round(EffortPm effort);

// Tolerances for comparing computed values against published table cells.
// The tables truncate inconsistently (an occasional cell is rounded up), so
// reproduction is checked within a slack band rather than exactly.
inline constexpr double kTableEffortTolerancePm = 2.0;
inline constexpr double kTableErrorTolerancePoints = 3.0;

/// Shortest decimal string that parses back to exactly the same double.
/// Canonical number form for CSV/config output.
std::string format_compact(double v);

} // namespace paramcost
