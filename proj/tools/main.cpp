#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "paramcost/cocomo2.hpp"
#include "paramcost/cocomo81.hpp"
#include "paramcost/dataset.hpp"
#include "paramcost/delphi.hpp"
#include "paramcost/errors.hpp"
#include "paramcost/evaluation.hpp"
#include "paramcost/fpa.hpp"
#include "paramcost/model_tables.hpp"
#include "paramcost/reference_tables.hpp"
#include "paramcost/slim.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using paramcost::ConfigError;
using paramcost::EffortPm;
using paramcost::Error;
using paramcost::IoError;
using paramcost::KeyValueConfig;
using paramcost::ModelTables;
using paramcost::SizeKloc;
using paramcost::ValidationError;
using json = nlohmann::ordered_json;

struct GlobalOptions {
    std::string config_path;
    bool meta = false;
};

ModelTables load_tables(const GlobalOptions& global) {
    ModelTables tables = ModelTables::defaults();
    if (!global.config_path.empty()) {
        tables.apply(KeyValueConfig::parse_file(global.config_path));
    }
    return tables;
}

// Comma-separated doubles, e.g. "4,5,6.5".
std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(token, &pos);
            while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) {
                ++pos;
            }
            if (pos != token.size()) {
                throw std::invalid_argument(token);
            }
            out.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError(std::string(what) + ": '" + token + "' is not a number");
        }
    }
    if (out.empty()) {
        throw ValidationError(std::string(what) + ": no values given");
    }
    return out;
}

std::pair<std::string, std::string> split_assignment(const std::string& text, const char* flag) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
        throw ValidationError(std::string(flag) + " expects name=value, got '" + text + "'");
    }
    return {text.substr(0, eq), text.substr(eq + 1)};
}

double to_double(const std::string& text, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw ValidationError(std::string(what) + ": '" + text + "' is not a number");
    }
}

std::string scalar_to_text(const json& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_float()) {
        return paramcost::format_compact(v.get<double>());
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    return v.dump();
}

// `key: value` lines; array values repeat the key per element.
std::string render_kv(const json& doc) {
    std::string out;
    for (const auto& [key, value] : doc.items()) {
        if (value.is_array()) {
            for (const auto& element : value) {
                out += key + ": " + scalar_to_text(element) + "\n";
            }
        } else if (value.is_object()) {
            for (const auto& [sub, sub_value] : value.items()) {
                out += key + "." + sub + ": " + scalar_to_text(sub_value) + "\n";
            }
        } else {
            out += key + ": " + scalar_to_text(value) + "\n";
        }
    }
    return out;
}

std::string meta_comment_lines() {
    char stamp[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return std::string("# paramcost ") + kVersion + "\n# generated: " + stamp + "\n";
}

json meta_object() {
    char stamp[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    json meta;
    meta["tool"] = std::string("paramcost ") + kVersion;
    meta["generated"] = stamp;
    return meta;
}

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw IoError("cannot open output file '" + out_path + "'");
    }
    out << payload;
    if (!out) {
        throw IoError("failed writing to '" + out_path + "'");
    }
}

// ---------------------------------------------------------------- estimate

struct EstimateOptions {
    std::string model;
    std::string format = "table";
    std::string mode;
    double size = 0.0;
    bool size_set = false;
    double eaf = 1.0;
    bool eaf_set = false;
    std::vector<std::string> drivers;
    double scale_sum = 0.0;
    bool scale_sum_set = false;
    std::vector<std::string> scales;

    double object_points = 0.0;
    bool object_points_set = false;
    double reuse = 0.0;
    double productivity = 0.0;
    bool productivity_set = false;

    double size_loc = 0.0;
    bool size_loc_set = false;
    double environment = 0.0;
    bool environment_set = false;
    double buildup = 0.0;
    bool buildup_set = false;
    double td = 0.0;
    bool td_set = false;
    double effort_py = 0.0;
    bool effort_py_set = false;
    bool solve_environment = false;

    std::string inputs = "0,0,0";
    std::string outputs = "0,0,0";
    std::string inquiries = "0,0,0";
    std::string master_files = "0,0,0";
    std::string interfaces = "0,0,0";
    int adjustment_total = -1;
    std::string adjustments;
    std::string language;

    std::string estimates;
    std::string rounds_path;
};

double eaf_from_flags(const EstimateOptions& opts, const paramcost::DriverTable& table) {
    if (opts.eaf_set && !opts.drivers.empty()) {
        throw ValidationError("--eaf and --driver are mutually exclusive");
    }
    if (!opts.drivers.empty()) {
        paramcost::DriverProfile profile(table);
        for (const std::string& entry : opts.drivers) {
            const auto [id, rating] = split_assignment(entry, "--driver");
            profile.set(id, paramcost::parse_rating(rating));
        }
        return profile.effort_adjustment_factor();
    }
    return opts.eaf;
}

SizeKloc require_size(const EstimateOptions& opts) {
    if (!opts.size_set) {
        throw ValidationError("model '" + opts.model + "' requires --size (KLOC)");
    }
    return SizeKloc(opts.size);
}

paramcost::Mode require_mode(const EstimateOptions& opts) {
    if (opts.mode.empty()) {
        throw ValidationError("model '" + opts.model +
                              "' requires --mode (organic, semidetached, embedded)");
    }
    return paramcost::parse_mode(opts.mode);
}

void reject_adjustment_flags(const EstimateOptions& opts) {
    if (opts.eaf_set || !opts.drivers.empty()) {
        throw ValidationError("model '" + opts.model + "' takes no effort adjustment flags");
    }
}

void add_effort(json& doc, EffortPm effort) {
    doc["effort_pm"] = effort.value;
    doc["effort_pm_rounded"] = paramcost::table_round(effort);
}

json estimate_cocomo(const EstimateOptions& opts, const ModelTables& tables) {
    json doc;
    doc["model"] = opts.model;
    const SizeKloc size = require_size(opts);

    if (opts.model == "cocomo81-basic") {
        reject_adjustment_flags(opts);
        const paramcost::Mode mode = require_mode(opts);
        doc["mode"] = std::string(paramcost::to_string(mode));
        doc["size_kloc"] = size.value;
        add_effort(doc, paramcost::cocomo81::effort_basic(size, mode, tables.c81.constants));
        return doc;
    }
    if (opts.model == "cocomo81-intermediate" || opts.model == "cocomo81-detailed") {
        const paramcost::Mode mode = require_mode(opts);
        const double eaf = eaf_from_flags(opts, tables.c81.drivers);
        doc["mode"] = std::string(paramcost::to_string(mode));
        doc["size_kloc"] = size.value;
        doc["eaf"] = eaf;
        if (opts.model == "cocomo81-intermediate") {
            add_effort(doc, paramcost::cocomo81::effort_intermediate(size, mode, eaf,
                                                                     tables.c81.constants));
            return doc;
        }
        const auto detailed = paramcost::cocomo81::effort_detailed(
            size, mode, eaf, tables.c81.phases, tables.c81.constants);
        doc["phase_weight_sum"] = tables.c81.phases.sum();
        add_effort(doc, detailed.total);
        json phases;
        const auto ids = paramcost::cocomo81::phase_ids();
        for (int i = 0; i < paramcost::cocomo81::kPhaseCount; ++i) {
            phases[std::string(ids[i]) + "_pm"] = detailed.phase_pm[i];
        }
        doc["phase"] = std::move(phases);
        if (detailed.zero_weights) {
            doc["notes"] = json::array({"all phase weights are zero; total effort is zero"});
        }
        return doc;
    }
    if (opts.model == "cocomo2-early") {
        const double eaf = eaf_from_flags(opts, tables.c2.early);
        doc["size_kloc"] = size.value;
        doc["eaf"] = eaf;
        add_effort(doc, paramcost::cocomo2::effort_early_design(size, eaf, tables.c2.constants));
        return doc;
    }
    if (opts.model == "cocomo2-post") {
        const double eaf = eaf_from_flags(opts, tables.c2.post);
        if (opts.scale_sum_set && !opts.scales.empty()) {
            throw ValidationError("--scale-sum and --scale are mutually exclusive");
        }
        paramcost::cocomo2::ScaleFactorProfile profile = tables.c2.default_scale;
        if (opts.scale_sum_set) {
            profile = paramcost::cocomo2::ScaleFactorProfile::uniform(opts.scale_sum);
        } else if (!opts.scales.empty()) {
            const auto ids = paramcost::cocomo2::scale_factor_ids();
            for (const std::string& entry : opts.scales) {
                const auto [id, value] = split_assignment(entry, "--scale");
                bool found = false;
                for (int i = 0; i < paramcost::cocomo2::kScaleFactorCount; ++i) {
                    if (ids[i] == id) {
                        profile.weights[i] = to_double(value, "--scale");
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    throw ValidationError("unknown scale factor '" + id +
                                          "' (prec, flex, resl, team, pmat)");
                }
            }
            profile = paramcost::cocomo2::ScaleFactorProfile(profile.weights);
        }
        doc["size_kloc"] = size.value;
        doc["eaf"] = eaf;
        doc["scale_sum"] = profile.sum();
        doc["exponent"] = paramcost::cocomo2::post_arch_exponent(profile);
        add_effort(doc, paramcost::cocomo2::effort_post_architecture(size, profile, eaf,
                                                                     tables.c2.constants));
        return doc;
    }
    throw ValidationError("unknown model '" + opts.model + "'");
}

json estimate_app_composition(const EstimateOptions& opts) {
    if (!opts.object_points_set || !opts.productivity_set) {
        throw ValidationError(
            "cocomo2-app-composition requires --object-points and --productivity");
    }
    const paramcost::cocomo2::ObjectPointInput input(opts.object_points, opts.reuse,
                                                     opts.productivity);
    json doc;
    doc["model"] = opts.model;
    doc["object_points"] = opts.object_points;
    doc["reuse_percent"] = opts.reuse;
    doc["productivity_rate"] = opts.productivity;
    doc["new_object_points"] = paramcost::cocomo2::new_object_points(input);
    add_effort(doc, paramcost::cocomo2::effort_app_composition(input));
    return doc;
}

json estimate_slim(const EstimateOptions& opts) {
    namespace slim = paramcost::slim;
    json doc;
    doc["model"] = "slim";
    std::vector<std::string> notes;

    if (opts.solve_environment) {
        if (!opts.size_loc_set || !opts.effort_py_set || !opts.td_set) {
            throw ValidationError(
                "--solve-environment requires --size-loc, --effort-py and --td");
        }
        doc["size_loc"] = opts.size_loc;
        doc["effort_py"] = opts.effort_py;
        doc["td_years"] = opts.td;
        doc["environment"] = slim::environment_from_history(
            opts.size_loc, slim::EffortPy(opts.effort_py), opts.td);
        return doc;
    }

    slim::EffortPy effort;
    if (opts.size_loc_set && opts.environment_set && opts.buildup_set) {
        effort = slim::effort_power_form(opts.buildup, opts.environment, opts.size_loc);
        doc["size_loc"] = opts.size_loc;
        doc["environment"] = opts.environment;
        doc["buildup"] = opts.buildup;
        doc["td_years"] = slim::td_power_form(opts.buildup, opts.environment, opts.size_loc);
        notes = slim::advisories(opts.buildup, opts.size_loc);
    } else if (opts.size_loc_set && opts.environment_set && opts.td_set) {
        effort = slim::effort_from_software_equation(opts.size_loc, opts.environment, opts.td);
        doc["size_loc"] = opts.size_loc;
        doc["environment"] = opts.environment;
        doc["td_years"] = opts.td;
        notes = slim::advisories(slim::kBuildupTypicalLow, opts.size_loc);
    } else if (opts.buildup_set && opts.td_set) {
        effort = slim::effort_from_buildup(opts.buildup, opts.td);
        doc["buildup"] = opts.buildup;
        doc["td_years"] = opts.td;
        notes = slim::advisories(opts.buildup, slim::kLargeProjectLoc);
    } else {
        throw ValidationError(
            "slim needs one of: --size-loc --environment --buildup | "
            "--size-loc --environment --td | --buildup --td");
    }
    doc["effort_py"] = effort.value;
    doc["effort_pm"] = effort.to_person_months().value;
    doc["effort_pm_rounded"] = paramcost::table_round(effort.to_person_months());
    if (!notes.empty()) {
        doc["notes"] = notes;
    }
    return doc;
}

json estimate_fpa(const EstimateOptions& opts, const ModelTables& tables) {
    namespace fpa = paramcost::fpa;
    fpa::FunctionPointCounts counts;
    const std::pair<fpa::FunctionType, const std::string*> flags[] = {
        {fpa::FunctionType::Inputs, &opts.inputs},
        {fpa::FunctionType::Outputs, &opts.outputs},
        {fpa::FunctionType::Inquiries, &opts.inquiries},
        {fpa::FunctionType::MasterFiles, &opts.master_files},
        {fpa::FunctionType::Interfaces, &opts.interfaces},
    };
    for (const auto& [type, text] : flags) {
        const std::vector<double> triple = parse_double_list(*text, "function counts");
        if (triple.size() != 3) {
            throw ValidationError("function counts expect simple,average,complex, got '" + *text +
                                  "'");
        }
        const fpa::Complexity levels[] = {fpa::Complexity::Simple, fpa::Complexity::Average,
                                          fpa::Complexity::Complex};
        for (int i = 0; i < 3; ++i) {
            const double v = triple[i];
            if (v < 0 || v != static_cast<long>(v)) {
                throw ValidationError("function counts must be non-negative integers, got '" +
                                      *text + "'");
            }
            counts.set(type, levels[i], static_cast<long>(v));
        }
    }

    if (opts.adjustment_total >= 0 && !opts.adjustments.empty()) {
        throw ValidationError("--adjustment-total and --adjustments are mutually exclusive");
    }
    fpa::ComplexityAdjustment adjustment = fpa::ComplexityAdjustment::with_total(35);
    if (opts.adjustment_total >= 0) {
        adjustment = fpa::ComplexityAdjustment::with_total(opts.adjustment_total);
    } else if (!opts.adjustments.empty()) {
        const std::vector<double> values = parse_double_list(opts.adjustments, "--adjustments");
        if (values.size() != fpa::kAdjustmentFactorCount) {
            throw ValidationError("--adjustments expects 14 comma-separated values, got " +
                                  std::to_string(values.size()));
        }
        std::array<int, fpa::kAdjustmentFactorCount> v{};
        for (int i = 0; i < fpa::kAdjustmentFactorCount; ++i) {
            if (values[i] != static_cast<int>(values[i])) {
                throw ValidationError("adjustment factors are integers 0..5");
            }
            v[i] = static_cast<int>(values[i]);
        }
        adjustment = fpa::ComplexityAdjustment(v);
    }

    const double ufp = fpa::unadjusted_fp(counts, tables.fp.weights);
    const double afp = fpa::adjusted_fp(ufp, adjustment);
    json doc;
    doc["model"] = "fpa";
    doc["unadjusted_fp"] = ufp;
    doc["adjustment_total"] = adjustment.total();
    doc["adjusted_fp"] = afp;
    if (!opts.language.empty()) {
        const fpa::LanguageFactor factor = tables.fp.languages.require(opts.language);
        const double sloc = fpa::sloc_from_fp(afp, factor);
        doc["language"] = factor.language;
        doc["sloc_per_fp"] = factor.sloc_per_fp;
        doc["sloc"] = sloc;
        doc["size_kloc"] = sloc / 1000.0;
    }
    return doc;
}

json estimate_delphi(const EstimateOptions& opts) {
    namespace delphi = paramcost::delphi;
    if (!opts.estimates.empty() && !opts.rounds_path.empty()) {
        throw ValidationError("--estimates and --rounds are mutually exclusive");
    }
    json doc;
    doc["model"] = "delphi";
    if (!opts.rounds_path.empty()) {
        std::ifstream in(opts.rounds_path);
        if (!in) {
            throw IoError("cannot open rounds file '" + opts.rounds_path + "'");
        }
        const std::vector<delphi::ExpertRound> rounds = delphi::load_rounds_csv(in);
        json list = json::array();
        for (std::size_t i = 0; i < rounds.size(); ++i) {
            json r;
            r["round"] = i + 1;
            r["experts"] = rounds[i].estimates().size();
            r["least_pm"] = rounds[i].least();
            r["average_pm"] = rounds[i].average();
            r["highest_pm"] = rounds[i].highest();
            r["effort_pm"] = delphi::aggregate(rounds[i]).value;
            list.push_back(std::move(r));
        }
        doc["rounds"] = std::move(list);
        add_effort(doc, delphi::aggregate(rounds.back()));
        return doc;
    }
    if (opts.estimates.empty()) {
        throw ValidationError("delphi requires --estimates (comma-separated person-months) "
                              "or --rounds <csv>");
    }
    const delphi::ExpertRound round(parse_double_list(opts.estimates, "--estimates"));
    doc["experts"] = round.estimates().size();
    doc["least_pm"] = round.least();
    doc["average_pm"] = round.average();
    doc["highest_pm"] = round.highest();
    add_effort(doc, delphi::aggregate(round));
    return doc;
}

int cmd_estimate(const GlobalOptions& global, const EstimateOptions& opts) {
    const ModelTables tables = load_tables(global);
    json doc;
    if (opts.model == "cocomo2-app-composition") {
        doc = estimate_app_composition(opts);
    } else if (opts.model == "slim") {
        doc = estimate_slim(opts);
    } else if (opts.model == "fpa") {
        doc = estimate_fpa(opts, tables);
    } else if (opts.model == "delphi") {
        doc = estimate_delphi(opts);
    } else {
        doc = estimate_cocomo(opts, tables);
    }

    if (opts.format == "json") {
        if (global.meta) {
            json wrapped;
            wrapped["meta"] = meta_object();
            for (auto& [k, v] : doc.items()) {
                wrapped[k] = v;
            }
            doc = std::move(wrapped);
        }
        std::cout << doc.dump(2) << '\n';
    } else {
        if (global.meta) {
            std::cout << meta_comment_lines();
        }
        std::cout << render_kv(doc);
    }
    return 0;
}

// ---------------------------------------------------------------- evaluate

struct EvaluateOptions {
    std::string corpus_path;
    std::string models = "all";
    std::string format = "table";
    std::string out_path;
    bool against_paper = false;
    bool list_cells = false;
};

paramcost::dataset::Corpus load_corpus_or_embedded(const std::string& path) {
    if (path.empty()) {
        return paramcost::dataset::embedded_corpus();
    }
    return paramcost::dataset::load_corpus_file(path);
}

int cmd_evaluate(const GlobalOptions& global, const EvaluateOptions& opts) {
    namespace evaluation = paramcost::evaluation;
    const ModelTables tables = load_tables(global);
    const paramcost::dataset::Corpus corpus = load_corpus_or_embedded(opts.corpus_path);
    const std::vector<evaluation::ModelConfiguration> configs =
        evaluation::parse_model_list(opts.models);
    const evaluation::EvaluationReport report = evaluation::evaluate(corpus, configs, tables);

    std::string payload;
    if (opts.format == "csv") {
        payload = evaluation::to_csv(report);
    } else if (opts.format == "json") {
        payload = evaluation::to_json(report);
    } else if (opts.format == "plot-data") {
        payload = evaluation::to_plot_data(report);
    } else {
        payload = evaluation::to_text_table(report);
    }
    if (global.meta && opts.format != "json") {
        payload = meta_comment_lines() + payload;
    }
    write_output(payload, opts.out_path);

    if (opts.against_paper) {
        const auto comparisons = paramcost::reference_tables::compare_selected(tables, configs);
        if (comparisons.empty()) {
            std::cout << "no published expectation columns match the selected models\n";
            return 0;
        }
        std::cout << paramcost::reference_tables::render(comparisons, opts.list_cells);
        if (!paramcost::reference_tables::all_ok(comparisons)) {
            return 3;
        }
    }
    return 0;
}

// --------------------------------------------------------------- calibrate

struct CalibrateOptions {
    std::string corpus_path;
    std::string baseline;
    std::string emit_config_path;
    std::string format = "table";
};

int cmd_calibrate(const GlobalOptions& global, const CalibrateOptions& opts) {
    namespace evaluation = paramcost::evaluation;
    const ModelTables tables = load_tables(global);
    const paramcost::dataset::Corpus corpus = load_corpus_or_embedded(opts.corpus_path);
    const evaluation::CalibrationResult result =
        evaluation::calibrate_power_law(evaluation::calibration_points(corpus));

    json doc;
    doc["points"] = result.n;
    doc["a"] = result.constants.a;
    doc["b"] = result.constants.b;
    doc["log_residual_ss"] = result.log_residual_ss;

    std::optional<evaluation::ModelConfiguration> baseline;
    if (!opts.baseline.empty()) {
        const auto expanded = evaluation::expand_selector(opts.baseline);
        if (expanded.size() != 1) {
            throw ValidationError("--baseline must name a single configuration, e.g. "
                                  "cocomo81-basic-organic");
        }
        baseline = expanded.front();

        double baseline_sum = 0.0;
        double fitted_sum = 0.0;
        for (const auto& project : corpus.projects()) {
            const EffortPm base_est =
                evaluation::estimate_effort(*baseline, project.size, tables);
            const EffortPm fit_est = paramcost::power_law_effort(project.size, result.constants);
            baseline_sum += evaluation::mre(base_est, project.actual_effort);
            fitted_sum += evaluation::mre(fit_est, project.actual_effort);
        }
        const double n = static_cast<double>(corpus.size());
        doc["baseline"] = baseline->display();
        doc["baseline_mmre"] = baseline_sum / n;
        doc["fitted_mmre"] = fitted_sum / n;
    }

    if (!opts.emit_config_path.empty()) {
        if (!baseline || !baseline->mode) {
            throw ValidationError(
                "--emit-config needs a cocomo81 --baseline (basic or intermediate with a "
                "mode) to pick the constants keys");
        }
        std::string family;
        if (baseline->model == "cocomo81-basic") {
            family = "basic";
        } else if (baseline->model == "cocomo81-intermediate") {
            family = "intermediate";
        } else {
            throw ValidationError("--emit-config supports cocomo81-basic and "
                                  "cocomo81-intermediate baselines, got '" +
                                  baseline->model + "'");
        }
        const std::string prefix =
            "cocomo81." + family + "." + std::string(paramcost::to_string(*baseline->mode));
        KeyValueConfig fitted;
        fitted.set_double(prefix + ".a", result.constants.a);
        fitted.set_double(prefix + ".b", result.constants.b);
        std::ofstream out(opts.emit_config_path);
        if (!out) {
            throw IoError("cannot open config output '" + opts.emit_config_path + "'");
        }
        out << fitted.serialize();
        doc["config_written"] = opts.emit_config_path;
    }

    if (opts.format == "json") {
        if (global.meta) {
            json wrapped;
            wrapped["meta"] = meta_object();
            for (auto& [k, v] : doc.items()) {
                wrapped[k] = v;
            }
            doc = std::move(wrapped);
        }
        std::cout << doc.dump(2) << '\n';
    } else {
        if (global.meta) {
            std::cout << meta_comment_lines();
        }
        std::cout << render_kv(doc);
    }
    return 0;
}

// ----------------------------------------------------------------- dataset

struct DatasetOptions {
    std::string corpus_path;
    std::string validate_path;
    std::string out_path;
    bool export_csv = false;
};

int cmd_dataset(const DatasetOptions& opts) {
    namespace dataset = paramcost::dataset;
    if (!opts.validate_path.empty()) {
        const dataset::Corpus corpus = dataset::load_corpus_file(opts.validate_path);
        std::cout << "ok: " << corpus.size() << " project(s)\n";
        return 0;
    }
    const dataset::Corpus corpus = load_corpus_or_embedded(opts.corpus_path);
    if (opts.export_csv) {
        write_output(dataset::export_csv(corpus), opts.out_path);
        return 0;
    }
    double min_size = corpus.projects().front().size.value;
    double max_size = min_size;
    double min_effort = corpus.projects().front().actual_effort.value;
    double max_effort = min_effort;
    for (const auto& p : corpus.projects()) {
        min_size = std::min(min_size, p.size.value);
        max_size = std::max(max_size, p.size.value);
        min_effort = std::min(min_effort, p.actual_effort.value);
        max_effort = std::max(max_effort, p.actual_effort.value);
    }
    json doc;
    doc["provenance"] = corpus.provenance();
    doc["projects"] = corpus.size();
    doc["size_kloc_min"] = min_size;
    doc["size_kloc_max"] = max_size;
    doc["actual_effort_pm_min"] = min_effort;
    doc["actual_effort_pm_max"] = max_effort;
    std::cout << render_kv(doc);
    return 0;
}

// ------------------------------------------------------------------ config

struct ConfigOptions {
    std::string out_path;
};

int cmd_config(const GlobalOptions& global, const ConfigOptions& opts) {
    const ModelTables tables = load_tables(global);
    std::string payload = tables.dump().serialize();
    if (global.meta) {
        payload = meta_comment_lines() + payload;
    }
    write_output(payload, opts.out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"parametric software cost estimation (COCOMO, SLIM, FPA, Delphi)"};
    app.set_version_flag("--version", std::string("paramcost ") + kVersion);
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--config", global.config_path,
                   "key/value config file overriding embedded constants and tables")
        ->envname("PARAMCOST_CONFIG");
    app.add_flag("--meta", global.meta, "prepend run metadata to outputs");

    EstimateOptions est;
    CLI::App* estimate = app.add_subcommand("estimate", "estimate one project's effort");
    estimate->add_option("--model", est.model,
                         "cocomo81-basic|cocomo81-intermediate|cocomo81-detailed|"
                         "cocomo2-app-composition|cocomo2-early|cocomo2-post|slim|fpa|delphi")
        ->required();
    estimate->add_option("--format", est.format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));
    estimate->add_option("--size", est.size, "project size in KLOC")
        ->check(CLI::PositiveNumber);
    auto* size_opt = estimate->get_option("--size");
    estimate->add_option("--mode", est.mode, "organic|semidetached|embedded");
    estimate->add_option("--eaf", est.eaf, "effort adjustment factor (default 1.0)");
    auto* eaf_opt = estimate->get_option("--eaf");
    estimate->add_option("--driver", est.drivers,
                         "driver rating as id=rating, repeatable (e.g. rely=high)");
    estimate->add_option("--scale-sum", est.scale_sum, "sum of the five scale factors");
    auto* scale_sum_opt = estimate->get_option("--scale-sum");
    estimate->add_option("--scale", est.scales,
                         "scale factor as id=weight, repeatable (prec, flex, resl, team, pmat)");
    estimate->add_option("--object-points", est.object_points, "object point count");
    auto* op_opt = estimate->get_option("--object-points");
    estimate->add_option("--reuse", est.reuse, "reuse percentage in [0, 100]");
    estimate->add_option("--productivity", est.productivity, "NOP per person-month");
    auto* prod_opt = estimate->get_option("--productivity");
    estimate->add_option("--size-loc", est.size_loc, "size in lines of code (slim)");
    auto* size_loc_opt = estimate->get_option("--size-loc");
    estimate->add_option("--environment", est.environment, "environment factor (slim)");
    auto* env_opt = estimate->get_option("--environment");
    estimate->add_option("--buildup", est.buildup, "manpower buildup D0 (slim)");
    auto* buildup_opt = estimate->get_option("--buildup");
    estimate->add_option("--td", est.td, "delivery time in years (slim)");
    auto* td_opt = estimate->get_option("--td");
    estimate->add_option("--effort-py", est.effort_py, "observed effort in person-years (slim)");
    auto* effort_py_opt = estimate->get_option("--effort-py");
    estimate->add_flag("--solve-environment", est.solve_environment,
                       "solve the software equation for the environment factor");
    estimate->add_option("--inputs", est.inputs, "input counts simple,average,complex");
    estimate->add_option("--outputs", est.outputs, "output counts simple,average,complex");
    estimate->add_option("--inquiries", est.inquiries, "inquiry counts simple,average,complex");
    estimate->add_option("--master-files", est.master_files,
                         "master file counts simple,average,complex");
    estimate->add_option("--interfaces", est.interfaces,
                         "interface counts simple,average,complex");
    estimate->add_option("--adjustment-total", est.adjustment_total,
                         "total complexity adjustment in [0, 70] (default 35)");
    estimate->add_option("--adjustments", est.adjustments, "14 comma-separated factors 0..5");
    estimate->add_option("--language", est.language, "language for SLOC conversion");
    estimate->add_option("--estimates", est.estimates,
                         "comma-separated expert estimates in person-months");
    estimate->add_option("--rounds", est.rounds_path, "expert rounds CSV (round,expert,estimate_pm)");

    EvaluateOptions ev;
    CLI::App* evaluate = app.add_subcommand("evaluate", "run models over a corpus");
    evaluate->add_option("--corpus", ev.corpus_path, "corpus CSV (default: embedded corpus)");
    evaluate->add_option("--models", ev.models,
                         "comma-separated selectors (default: all nominal configurations)");
    evaluate->add_option("--format", ev.format, "table|csv|json|plot-data")
        ->check(CLI::IsMember({"table", "csv", "json", "plot-data"}));
    evaluate->add_option("--out", ev.out_path, "write the report to a file instead of stdout");
    evaluate->add_flag("--against-paper", ev.against_paper,
                       "compare computed efforts/errors against the published comparison tables");
    evaluate->add_flag("--list-cells", ev.list_cells,
                       "list every compared cell, not only failures");

    CalibrateOptions cal;
    CLI::App* calibrate =
        app.add_subcommand("calibrate", "fit power-law constants to a corpus by log-log OLS");
    calibrate->add_option("--corpus", cal.corpus_path, "corpus CSV (default: embedded corpus)");
    calibrate->add_option("--baseline", cal.baseline,
                          "stock configuration to compare MMRE against, e.g. "
                          "cocomo81-basic-organic");
    calibrate->add_option("--emit-config", cal.emit_config_path,
                          "write the fitted constants as a config file (needs --baseline)");
    calibrate->add_option("--format", cal.format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    DatasetOptions ds;
    CLI::App* dataset = app.add_subcommand("dataset", "inspect, export or validate a corpus");
    dataset->add_option("--corpus", ds.corpus_path, "corpus CSV (default: embedded corpus)");
    dataset->add_flag("--export", ds.export_csv, "print the corpus as canonical CSV");
    dataset->add_option("--validate", ds.validate_path, "load the given corpus CSV and report");
    dataset->add_option("--out", ds.out_path, "write output to a file instead of stdout");

    ConfigOptions cfg;
    CLI::App* config =
        app.add_subcommand("config", "dump the effective constants/tables as a config file");
    config->add_option("--out", cfg.out_path, "write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    est.size_set = size_opt->count() > 0;
    est.eaf_set = eaf_opt->count() > 0;
    est.scale_sum_set = scale_sum_opt->count() > 0;
    est.object_points_set = op_opt->count() > 0;
    est.productivity_set = prod_opt->count() > 0;
    est.size_loc_set = size_loc_opt->count() > 0;
    est.environment_set = env_opt->count() > 0;
    est.buildup_set = buildup_opt->count() > 0;
    est.td_set = td_opt->count() > 0;
    est.effort_py_set = effort_py_opt->count() > 0;

    try {
        if (app.got_subcommand(estimate)) {
            return cmd_estimate(global, est);
        }
        if (app.got_subcommand(evaluate)) {
            return cmd_evaluate(global, ev);
        }
        if (app.got_subcommand(calibrate)) {
            return cmd_calibrate(global, cal);
        }
        if (app.got_subcommand(dataset)) {
            return cmd_dataset(ds);
        }
        if (app.got_subcommand(config)) {
            return cmd_config(global, cfg);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
