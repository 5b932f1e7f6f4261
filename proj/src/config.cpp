#include "paramcost/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "paramcost/core.hpp"

namespace paramcost {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool valid_key(std::string_view key) {
    if (key.empty()) return false;
    for (char c : key) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-')) {
            return false;
        }
    }
    return true;
}

} // namespace

KeyValueConfig KeyValueConfig::parse(std::istream& in) {
    KeyValueConfig cfg;
    std::string line;
    int line_no = 0;
    std::string problems;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        auto eq = sv.find('=');
        if (eq == std::string_view::npos) {
            problems += "line " + std::to_string(line_no) + ": expected 'key = value'\n";
            continue;
        }
        std::string_view key = trim(sv.substr(0, eq));
        std::string_view value = trim(sv.substr(eq + 1));
        if (!valid_key(key)) {
            problems += "line " + std::to_string(line_no) + ": invalid key '" +
                        std::string(key) + "'\n";
            continue;
        }
        if (value.empty()) {
            problems += "line " + std::to_string(line_no) + ": empty value for '" +
                        std::string(key) + "'\n";
            continue;
        }
        cfg.entries_[std::string(key)] = std::string(value);
    }
    if (!problems.empty()) {
        throw ValidationError("config parse failed:\n" + problems);
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file: " + path);
    }
    return parse(in);
}

bool KeyValueConfig::contains(std::string_view key) const {
    return entries_.find(std::string(key)) != entries_.end();
}

std::optional<std::string> KeyValueConfig::get(std::string_view key) const {
    auto it = entries_.find(std::string(key));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::optional<double> KeyValueConfig::get_double(std::string_view key) const {
    auto raw = get(key);
    if (!raw) return std::nullopt;
    const char* first = raw->data();
    const char* last = raw->data() + raw->size();
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last || !std::isfinite(out)) {
        throw ValidationError("config key '" + std::string(key) + "' is not a finite number: '" +
                              *raw + "'");
    }
    return out;
}

void KeyValueConfig::set(std::string_view key, std::string_view value) {
    entries_[std::string(key)] = std::string(value);
}

void KeyValueConfig::set_double(std::string_view key, double value) {
    set(key, format_compact(value));
}

std::string KeyValueConfig::serialize() const {
    std::ostringstream out;
    for (const auto& [key, value] : entries_) {
        out << key << " = " << value << "\n";
    }
    return out.str();
}

} // namespace paramcost
