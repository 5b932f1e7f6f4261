#include "paramcost/drivers.hpp"

#include <cmath>

namespace paramcost {

std::string_view to_string(Rating rating) {
    switch (rating) {
    case Rating::ExtraLow: return "extra_low";
    case Rating::VeryLow: return "very_low";
    case Rating::Low: return "low";
    case Rating::Nominal: return "nominal";
    case Rating::High: return "high";
    case Rating::VeryHigh: return "very_high";
    case Rating::ExtraHigh: return "extra_high";
    }
    throw ValidationError("invalid rating value");
}

Rating parse_rating(std::string_view name) {
    if (name == "extra_low") return Rating::ExtraLow;
    if (name == "very_low") return Rating::VeryLow;
    if (name == "low") return Rating::Low;
    if (name == "nominal") return Rating::Nominal;
    if (name == "high") return Rating::High;
    if (name == "very_high") return Rating::VeryHigh;
    if (name == "extra_high") return Rating::ExtraHigh;
    throw ValidationError("unknown rating '" + std::string(name) +
                          "' (expected extra_low, very_low, low, nominal, high, very_high or "
                          "extra_high)");
}

bool DriverRow::defined(Rating rating) const {
    return multiplier[static_cast<std::size_t>(rating)].has_value();
}

DriverTable::DriverTable(std::string table_id, std::vector<DriverRow> rows)
    : table_id_(std::move(table_id)), rows_(std::move(rows)) {
    for (const auto& row : rows_) {
        if (!row.defined(Rating::Nominal) ||
            *row.multiplier[static_cast<std::size_t>(Rating::Nominal)] != 1.0) {
            throw ValidationError("driver table '" + table_id_ + "': driver '" + row.id +
                                  "' must define a nominal multiplier of 1.0");
        }
    }
}

bool DriverTable::has_driver(std::string_view driver) const {
    for (const auto& row : rows_) {
        if (row.id == driver) return true;
    }
    return false;
}

const DriverRow& DriverTable::row(std::string_view driver) const {
    for (const auto& row : rows_) {
        if (row.id == driver) return row;
    }
    throw ValidationError("table '" + table_id_ + "' has no cost driver '" +
                          std::string(driver) + "'");
}

double DriverTable::multiplier(std::string_view driver, Rating rating) const {
    const DriverRow& r = row(driver);
    const auto& cell = r.multiplier[static_cast<std::size_t>(rating)];
    if (!cell) {
        throw ValidationError("driver '" + r.id + "' in table '" + table_id_ +
                              "' defines no multiplier for rating '" +
                              std::string(to_string(rating)) + "'");
    }
    return *cell;
}

void DriverTable::set_multiplier(std::string_view driver, Rating rating, double value) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw ValidationError("multiplier for driver '" + std::string(driver) +
                              "' must be positive and finite");
    }
    for (auto& row : rows_) {
        if (row.id == driver) {
            row.multiplier[static_cast<std::size_t>(rating)] = value;
            return;
        }
    }
    throw ValidationError("table '" + table_id_ + "' has no cost driver '" +
                          std::string(driver) + "'");
}

DriverProfile::DriverProfile(const DriverTable& table)
    : table_(&table), ratings_(table.driver_count(), Rating::Nominal) {}

void DriverProfile::set(std::string_view driver, Rating rating) {
    const auto& rows = table_->rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].id == driver) {
            if (!rows[i].defined(rating)) {
                throw ValidationError("driver '" + rows[i].id + "' in table '" +
                                      table_->table_id() + "' defines no multiplier for rating '" +
                                      std::string(to_string(rating)) + "'");
            }
            ratings_[i] = rating;
            return;
        }
    }
    throw ValidationError("table '" + table_->table_id() + "' has no cost driver '" +
                          std::string(driver) + "'");
}

Rating DriverProfile::rating(std::string_view driver) const {
    const auto& rows = table_->rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].id == driver) return ratings_[i];
    }
    throw ValidationError("table '" + table_->table_id() + "' has no cost driver '" +
                          std::string(driver) + "'");
}

double DriverProfile::effort_adjustment_factor() const {
    const auto& rows = table_->rows();
    double product = 1.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        product *= table_->multiplier(rows[i].id, ratings_[i]);
    }
    return product;
}

} // namespace paramcost
