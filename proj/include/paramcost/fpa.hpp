#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paramcost/config.hpp"
#include "paramcost/core.hpp"

namespace paramcost::fpa {

enum class FunctionType { Inputs, Outputs, Inquiries, MasterFiles, Interfaces };
enum class Complexity { Simple, Average, Complex };

inline constexpr int kFunctionTypeCount = 5;
inline constexpr int kComplexityCount = 3;

std::string_view to_string(FunctionType type);
std::string_view to_string(Complexity complexity);
FunctionType parse_function_type(std::string_view name); // ValidationError
Complexity parse_complexity(std::string_view name);      // ValidationError

/// Tallies of the five function types at three complexity levels.
struct FunctionPointCounts {
    std::array<std::array<long, kComplexityCount>, kFunctionTypeCount> counts{};

    long get(FunctionType type, Complexity complexity) const;
    void set(FunctionType type, Complexity complexity, long count); // ValidationError if negative
};

/// Per-(type, complexity) weights. Cells may be missing in a hand-built
/// table; using one is a ConfigError.
class WeightTable {
public:
    /// Classic published weights: inputs 3/4/6, outputs 4/5/7, inquiries
    /// 3/4/6, master files 7/10/15, interfaces 5/7/10. Overridable defaults.
    static WeightTable standard();
    static WeightTable empty();

    double weight(FunctionType type, Complexity complexity) const; // ConfigError if missing
    void set(FunctionType type, Complexity complexity, double weight);

private:
    std::array<std::array<std::optional<double>, kComplexityCount>, kFunctionTypeCount> cells_{};
};

inline constexpr int kAdjustmentFactorCount = 14;

/// Names of the 14 general system characteristics; kept as optional labels,
/// factors are addressed by index.
std::array<std::string_view, kAdjustmentFactorCount> adjustment_factor_names();

/// The 14 complexity-adjustment factors, each rated 0 (not important) to 5
/// (absolutely essential).
struct ComplexityAdjustment {
    std::array<int, kAdjustmentFactorCount> values{};

    ComplexityAdjustment() = default;
    explicit ComplexityAdjustment(const std::array<int, kAdjustmentFactorCount>& v); // Validation

    /// Factor vector with the given total, filled greedily (handy for CLI
    /// input of just the total). total must lie in [0, 70].
    static ComplexityAdjustment with_total(int total);

    int total() const; // in [0, 70]
};

/// Sum of count * weight over all 15 cells.
double unadjusted_fp(const FunctionPointCounts& counts, const WeightTable& weights);

/// ufp * (0.65 + 0.01 * total adjustment). Multiplier spans [0.65, 1.35].
double adjusted_fp(double ufp, const ComplexityAdjustment& adjustment);

struct LanguageFactor {
    std::string language;
    double sloc_per_fp; // > 0

    LanguageFactor(std::string language, double sloc_per_fp);
};

/// Named SLOC-per-FP entries. Ships a small set of classic published
/// approximations; users supply their own for other languages.
class LanguageFactorTable {
public:
    static LanguageFactorTable standard();

    std::optional<LanguageFactor> find(std::string_view language) const;
    LanguageFactor require(std::string_view language) const; // ConfigError if absent
    void set(std::string_view language, double sloc_per_fp);
    const std::vector<LanguageFactor>& entries() const { return entries_; }

private:
    std::vector<LanguageFactor> entries_;
};

/// fp * sloc_per_fp.
double sloc_from_fp(double fp, const LanguageFactor& factor);

struct Tables {
    WeightTable weights;
    LanguageFactorTable languages;

    static Tables defaults();

    /// Consumes `fpa.*` keys; unknown keys under the prefix are a ConfigError.
    void apply(const KeyValueConfig& config);
    void dump_into(KeyValueConfig& config) const;
};

} // namespace paramcost::fpa
