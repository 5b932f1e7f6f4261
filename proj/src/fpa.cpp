#include "paramcost/fpa.hpp"

#include <algorithm>
#include <cmath>

namespace paramcost::fpa {

std::string_view to_string(FunctionType type) {
    switch (type) {
    case FunctionType::Inputs: return "inputs";
    case FunctionType::Outputs: return "outputs";
    case FunctionType::Inquiries: return "inquiries";
    case FunctionType::MasterFiles: return "master_files";
    case FunctionType::Interfaces: return "interfaces";
    }
    throw ValidationError("invalid function type value");
}

std::string_view to_string(Complexity complexity) {
    switch (complexity) {
    case Complexity::Simple: return "simple";
    case Complexity::Average: return "average";
    case Complexity::Complex: return "complex";
    }
    throw ValidationError("invalid complexity value");
}

FunctionType parse_function_type(std::string_view name) {
    if (name == "inputs") return FunctionType::Inputs;
    if (name == "outputs") return FunctionType::Outputs;
    if (name == "inquiries") return FunctionType::Inquiries;
    if (name == "master_files") return FunctionType::MasterFiles;
    if (name == "interfaces") return FunctionType::Interfaces;
    throw ValidationError("unknown function type '" + std::string(name) +
                          "' (expected inputs, outputs, inquiries, master_files or interfaces)");
}

Complexity parse_complexity(std::string_view name) {
    if (name == "simple") return Complexity::Simple;
    if (name == "average") return Complexity::Average;
    if (name == "complex") return Complexity::Complex;
    throw ValidationError("unknown complexity '" + std::string(name) +
                          "' (expected simple, average or complex)");
}

long FunctionPointCounts::get(FunctionType type, Complexity complexity) const {
    return counts[static_cast<std::size_t>(type)][static_cast<std::size_t>(complexity)];
}

void FunctionPointCounts::set(FunctionType type, Complexity complexity, long count) {
    if (count < 0) {
        throw ValidationError("function point counts must be non-negative");
    }
    counts[static_cast<std::size_t>(type)][static_cast<std::size_t>(complexity)] = count;
}

WeightTable WeightTable::standard() {
    WeightTable t;
    const double values[kFunctionTypeCount][kComplexityCount] = {
        {3, 4, 6},   // inputs
        {4, 5, 7},   // outputs
        {3, 4, 6},   // inquiries
        {7, 10, 15}, // master files
        {5, 7, 10},  // interfaces
    };
    for (int f = 0; f < kFunctionTypeCount; ++f) {
        for (int c = 0; c < kComplexityCount; ++c) {
            t.cells_[static_cast<std::size_t>(f)][static_cast<std::size_t>(c)] = values[f][c];
        }
    }
    return t;
}

WeightTable WeightTable::empty() {
    return WeightTable{};
}

double WeightTable::weight(FunctionType type, Complexity complexity) const {
    const auto& cell =
        cells_[static_cast<std::size_t>(type)][static_cast<std::size_t>(complexity)];
    if (!cell) {
        throw ConfigError("weight table has no entry for (" + std::string(to_string(type)) +
                          ", " + std::string(to_string(complexity)) + ")");
    }
    return *cell;
}

void WeightTable::set(FunctionType type, Complexity complexity, double weight) {
    if (!std::isfinite(weight) || weight < 0.0) {
        throw ValidationError("function point weights must be non-negative and finite");
    }
    cells_[static_cast<std::size_t>(type)][static_cast<std::size_t>(complexity)] = weight;
}

std::array<std::string_view, kAdjustmentFactorCount> adjustment_factor_names() {
    return {
        "data communications",
        "distributed data processing",
        "performance",
        "heavily used configuration",
        "transaction rate",
        "online data entry",
        "end-user efficiency",
        "online update",
        "complex processing",
        "reusability",
        "installation ease",
        "operational ease",
        "multiple sites",
        "facilitate change",
    };
}

ComplexityAdjustment::ComplexityAdjustment(const std::array<int, kAdjustmentFactorCount>& v)
    : values(v) {
    for (int x : values) {
        if (x < 0 || x > 5) {
            throw ValidationError("complexity adjustment factors must lie in [0, 5], got " +
                                  std::to_string(x));
        }
    }
}

ComplexityAdjustment ComplexityAdjustment::with_total(int total) {
    if (total < 0 || total > 5 * kAdjustmentFactorCount) {
        throw ValidationError("total complexity adjustment must lie in [0, 70], got " +
                              std::to_string(total));
    }
    std::array<int, kAdjustmentFactorCount> v{};
    int remaining = total;
    for (int i = 0; i < kAdjustmentFactorCount && remaining > 0; ++i) {
        v[static_cast<std::size_t>(i)] = std::min(5, remaining);
        remaining -= v[static_cast<std::size_t>(i)];
    }
    return ComplexityAdjustment(v);
}

int ComplexityAdjustment::total() const {
    int s = 0;
    for (int x : values) s += x;
    return s;
}

double unadjusted_fp(const FunctionPointCounts& counts, const WeightTable& weights) {
    double total = 0.0;
    for (int f = 0; f < kFunctionTypeCount; ++f) {
        for (int c = 0; c < kComplexityCount; ++c) {
            auto type = static_cast<FunctionType>(f);
            auto complexity = static_cast<Complexity>(c);
            long n = counts.get(type, complexity);
            if (n != 0) {
                total += static_cast<double>(n) * weights.weight(type, complexity);
            }
        }
    }
    return total;
}

double adjusted_fp(double ufp, const ComplexityAdjustment& adjustment) {
    if (!std::isfinite(ufp) || ufp < 0.0) {
        throw DomainError("unadjusted function points must be non-negative and finite");
    }
    return ufp * (0.65 + 0.01 * adjustment.total());
}

LanguageFactor::LanguageFactor(std::string language_, double sloc_per_fp_)
    : language(std::move(language_)), sloc_per_fp(sloc_per_fp_) {
    if (language.empty()) {
        throw ValidationError("language factor needs a non-empty language name");
    }
    if (!std::isfinite(sloc_per_fp) || sloc_per_fp <= 0.0) {
        throw DomainError("SLOC per function point must be positive and finite");
    }
}

LanguageFactorTable LanguageFactorTable::standard() {
    LanguageFactorTable t;
    // Classic published gearing approximations.
    t.set("assembler", 320);
    t.set("c", 128);
    t.set("cobol", 106);
    t.set("fortran", 107);
    t.set("pascal", 91);
    t.set("ada", 71);
    t.set("cpp", 53);
    t.set("java", 53);
    t.set("visual_basic", 32);
    t.set("sql", 13);
    return t;
}

std::optional<LanguageFactor> LanguageFactorTable::find(std::string_view language) const {
    for (const auto& entry : entries_) {
        if (entry.language == language) return entry;
    }
    return std::nullopt;
}

LanguageFactor LanguageFactorTable::require(std::string_view language) const {
    auto entry = find(language);
    if (!entry) {
        throw ConfigError("no language factor for '" + std::string(language) +
                          "'; add fpa.language." + std::string(language) + " to the config");
    }
    return *entry;
}

void LanguageFactorTable::set(std::string_view language, double sloc_per_fp) {
    for (auto& entry : entries_) {
        if (entry.language == language) {
            entry = LanguageFactor(std::string(language), sloc_per_fp);
            return;
        }
    }
    entries_.emplace_back(std::string(language), sloc_per_fp);
}

double sloc_from_fp(double fp, const LanguageFactor& factor) {
    if (!std::isfinite(fp) || fp < 0.0) {
        throw DomainError("function points must be non-negative and finite");
    }
    return fp * factor.sloc_per_fp;
}

Tables Tables::defaults() {
    return Tables{WeightTable::standard(), LanguageFactorTable::standard()};
}

void Tables::apply(const KeyValueConfig& config) {
    auto apply_one = [this](const std::string& key, double number) {
        std::string rest = key.substr(4);
        if (rest.rfind("weight.", 0) == 0) {
            std::string tail = rest.substr(7);
            auto dot = tail.find('.');
            if (dot == std::string::npos) {
                throw ConfigError("unknown fpa weight key: " + key);
            }
            weights.set(parse_function_type(tail.substr(0, dot)),
                        parse_complexity(tail.substr(dot + 1)), number);
        } else if (rest.rfind("language.", 0) == 0) {
            languages.set(rest.substr(9), number);
        } else {
            throw ConfigError("unknown fpa config key: " + key);
        }
    };
    for (const auto& [key, value] : config.entries()) {
        if (key.rfind("fpa.", 0) != 0) continue;
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
    for (int f = 0; f < kFunctionTypeCount; ++f) {
        for (int c = 0; c < kComplexityCount; ++c) {
            auto type = static_cast<FunctionType>(f);
            auto complexity = static_cast<Complexity>(c);
            config.set_double("fpa.weight." + std::string(to_string(type)) + "." +
                                  std::string(to_string(complexity)),
                              weights.weight(type, complexity));
        }
    }
    for (const auto& entry : languages.entries()) {
        config.set_double("fpa.language." + entry.language, entry.sloc_per_fp);
    }
}

} // namespace paramcost::fpa
