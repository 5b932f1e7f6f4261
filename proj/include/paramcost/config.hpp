#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "paramcost/errors.hpp"

namespace paramcost {

// Plain-text key/value configuration, the shared override format for every
// embedded table (mode constants, driver multipliers, phase weights, FPA
// weights, language factors).
//
//   # comment
//   cocomo81.basic.organic.a = 2.4
//   cocomo81.driver.rely.very_low = 0.75
//
// One `key = value` pair per line, `#` starts a full-line comment, blank
// lines ignored. A key repeated later in the file wins.
class KeyValueConfig {
public:
    KeyValueConfig() = default;

    static KeyValueConfig parse(std::istream& in);          // ValidationError, line-numbered
    static KeyValueConfig parse_file(const std::string& path); // IoError if unreadable

    bool contains(std::string_view key) const;
    std::optional<std::string> get(std::string_view key) const;
    std::optional<double> get_double(std::string_view key) const; // ValidationError if not numeric

    void set(std::string_view key, std::string_view value);
    void set_double(std::string_view key, double value);

    /// Canonical text form: keys sorted, `key = value`, one per line.
    std::string serialize() const;

    const std::map<std::string, std::string>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

private:
    std::map<std::string, std::string> entries_;
};

} // namespace paramcost
