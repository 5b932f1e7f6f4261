#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paramcost/errors.hpp"

namespace paramcost {

// Ordinal rating scale shared by the COCOMO driver tables. COCOMO81 uses
// very_low..extra_high; the COCOMO II early-design scale adds extra_low for
// the personnel drivers.
enum class Rating {
    ExtraLow,
    VeryLow,
    Low,
    Nominal,
    High,
    VeryHigh,
    ExtraHigh,
};

inline constexpr int kRatingCount = 7;

std::string_view to_string(Rating rating);
Rating parse_rating(std::string_view name); // ValidationError on unknown name

/// Direction a driver's multiplier moves as its rating is raised. `Mixed`
/// marks drivers whose published values are not monotone (COCOMO81 SCED).
enum class Trend { Increasing, Decreasing, Mixed };

struct DriverRow {
    std::string id;   // short symbol, e.g. "rely"
    std::string name; // human-readable label
    Trend trend;
    std::array<std::optional<double>, kRatingCount> multiplier;

    bool defined(Rating rating) const;
};

/// A named set of cost drivers with per-rating effort multipliers. Ratings a
/// driver does not define stay empty; looking one up is a validation error.
class DriverTable {
public:
    DriverTable(std::string table_id, std::vector<DriverRow> rows);

    const std::string& table_id() const { return table_id_; }
    std::size_t driver_count() const { return rows_.size(); }
    const std::vector<DriverRow>& rows() const { return rows_; }

    bool has_driver(std::string_view driver) const;
    const DriverRow& row(std::string_view driver) const; // ValidationError

    /// ValidationError naming the driver when the rating has no entry.
    double multiplier(std::string_view driver, Rating rating) const;

    /// Config override: replaces or adds the entry for an existing driver.
    /// The driver set itself is fixed. ValidationError on unknown driver or
    /// non-positive multiplier.
    void set_multiplier(std::string_view driver, Rating rating, double value);

private:
    std::string table_id_;
    std::vector<DriverRow> rows_;
};

/// Ratings for every driver of one table, nominal unless overridden. Keeps a
/// reference to its table; the table must outlive the profile.
class DriverProfile {
public:
    explicit DriverProfile(const DriverTable& table);

    const DriverTable& table() const { return *table_; }

    /// ValidationError on unknown driver or a rating the table's driver does
    /// not define.
    void set(std::string_view driver, Rating rating);

    Rating rating(std::string_view driver) const; // ValidationError on unknown driver

    /// Product of the per-driver multipliers; 1.0 for an all-nominal profile.
    double effort_adjustment_factor() const;

private:
    const DriverTable* table_;
    std::vector<Rating> ratings_; // parallel to table_->rows()
};

} // namespace paramcost
