#include "paramcost/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"
#include "paramcost/errors.hpp"

namespace paramcost::evaluation {

namespace {

// Shared ratio so that |signed %| == 100 * MRE holds bitwise: scaling by 100
// and taking the absolute value both commute with the one rounded division.
double relative_deviation(EffortPm estimated, EffortPm actual) {
    if (actual.value <= 0.0) {
        throw DomainError("relative error needs a positive actual effort, got " +
                          format_compact(actual.value));
    }
    return (estimated.value - actual.value) / actual.value;
}

} // namespace

double signed_error_pct(EffortPm estimated, EffortPm actual) {
    return 100.0 * relative_deviation(estimated, actual);
}

double mre(EffortPm estimated, EffortPm actual) {
    return std::abs(relative_deviation(estimated, actual));
}

std::string ModelConfiguration::display() const {
    return model + "/" + label;
}

EffortPm estimate_effort(const ModelConfiguration& config, SizeKloc size,
                         const ModelTables& tables) {
    const auto require_mode = [&config]() -> Mode {
        if (!config.mode) {
            throw ValidationError("model '" + config.model + "' requires a development mode");
        }
        return *config.mode;
    };
    if (config.model == "cocomo81-basic") {
        return cocomo81::effort_basic(size, require_mode(), tables.c81.constants);
    }
    if (config.model == "cocomo81-intermediate") {
        return cocomo81::effort_intermediate(size, require_mode(), config.eaf,
                                             tables.c81.constants);
    }
    if (config.model == "cocomo81-detailed") {
        return cocomo81::effort_detailed(size, require_mode(), config.eaf, tables.c81.phases,
                                         tables.c81.constants)
            .total;
    }
    if (config.model == "cocomo2-early") {
        return cocomo2::effort_early_design(size, config.eaf, tables.c2.constants);
    }
    if (config.model == "cocomo2-post") {
        const cocomo2::ScaleFactorProfile profile =
            config.scale_sum ? cocomo2::ScaleFactorProfile::uniform(*config.scale_sum)
                             : tables.c2.default_scale;
        return cocomo2::effort_post_architecture(size, profile, config.eaf, tables.c2.constants);
    }
    throw ValidationError("unknown model '" + config.model + "'");
}

namespace {

ModelConfiguration moded(std::string model, Mode mode) {
    ModelConfiguration c;
    c.model = std::move(model);
    c.label = std::string(to_string(mode));
    c.mode = mode;
    return c;
}

ModelConfiguration nominal(std::string model) {
    ModelConfiguration c;
    c.model = std::move(model);
    c.label = "nominal";
    return c;
}

constexpr std::string_view kCocomo81Families[] = {"cocomo81-basic", "cocomo81-intermediate",
                                                  "cocomo81-detailed"};
constexpr std::string_view kCocomo2Families[] = {"cocomo2-early", "cocomo2-post"};

} // namespace

std::vector<ModelConfiguration> standard_configurations() {
    std::vector<ModelConfiguration> out;
    for (std::string_view family : kCocomo81Families) {
        for (Mode mode : kAllModes) {
            out.push_back(moded(std::string(family), mode));
        }
    }
    for (std::string_view family : kCocomo2Families) {
        out.push_back(nominal(std::string(family)));
    }
    return out;
}

std::vector<ModelConfiguration> expand_selector(const std::string& selector) {
    if (selector == "all") {
        return standard_configurations();
    }
    for (std::string_view family : kCocomo81Families) {
        if (selector == family) {
            std::vector<ModelConfiguration> out;
            for (Mode mode : kAllModes) {
                out.push_back(moded(std::string(family), mode));
            }
            return out;
        }
        const std::string prefix = std::string(family) + "-";
        if (selector.starts_with(prefix)) {
            const Mode mode = parse_mode(selector.substr(prefix.size()));
            return {moded(std::string(family), mode)};
        }
    }
    for (std::string_view family : kCocomo2Families) {
        if (selector == family) {
            return {nominal(std::string(family))};
        }
    }
    throw ValidationError(
        "unknown model selector '" + selector +
        "' (expected all, cocomo81-basic, cocomo81-intermediate, cocomo81-detailed, "
        "cocomo2-early, cocomo2-post, or a cocomo81 family with a -<mode> suffix)");
}

std::vector<ModelConfiguration> parse_model_list(const std::string& list) {
    std::vector<ModelConfiguration> out;
    std::set<std::string> seen;
    std::string token;
    std::istringstream in(list);
    bool any_token = false;
    while (std::getline(in, token, ',')) {
        const auto begin = token.find_first_not_of(" \t");
        const auto end = token.find_last_not_of(" \t");
        if (begin == std::string::npos) {
            throw ValidationError("empty model selector in '" + list + "'");
        }
        any_token = true;
        for (ModelConfiguration& c : expand_selector(token.substr(begin, end - begin + 1))) {
            if (seen.insert(c.display()).second) {
                out.push_back(std::move(c));
            }
        }
    }
    if (!any_token) {
        throw ValidationError("no model selectors given");
    }
    return out;
}

double mmre(const std::vector<ErrorRow>& rows) {
    if (rows.empty()) {
        throw ValidationError("MMRE needs at least one row");
    }
    double sum = 0.0;
    for (const ErrorRow& row : rows) {
        sum += row.mre;
    }
    return sum / static_cast<double>(rows.size());
}

EvaluationReport evaluate(const dataset::Corpus& corpus,
                          const std::vector<ModelConfiguration>& configurations,
                          const ModelTables& tables) {
    std::vector<const dataset::Project*> ordered;
    ordered.reserve(corpus.size());
    for (const dataset::Project& p : corpus.projects()) {
        ordered.push_back(&p);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const dataset::Project* a, const dataset::Project* b) { return a->id < b->id; });

    EvaluationReport report;
    report.rows.reserve(ordered.size() * configurations.size());
    for (const dataset::Project* project : ordered) {
        for (const ModelConfiguration& config : configurations) {
            const EffortPm estimated = estimate_effort(config, project->size, tables);
            ErrorRow row;
            row.project_id = project->id;
            row.model = config.model;
            row.label = config.label;
            row.estimated_pm = estimated.value;
            row.actual_pm = project->actual_effort.value;
            row.signed_error_pct = signed_error_pct(estimated, project->actual_effort);
            row.mre = mre(estimated, project->actual_effort);
            report.rows.push_back(std::move(row));
        }
    }
    for (const ModelConfiguration& config : configurations) {
        double sum = 0.0;
        std::size_t n = 0;
        for (const ErrorRow& row : report.rows) {
            if (row.model == config.model && row.label == config.label) {
                sum += row.mre;
                ++n;
            }
        }
        MmreEntry entry;
        entry.model = config.model;
        entry.label = config.label;
        entry.mmre = n == 0 ? 0.0 : sum / static_cast<double>(n);
        report.mmre.push_back(std::move(entry));
    }
    return report;
}

std::string to_csv(const EvaluationReport& report) {
    std::string out{kReportCsvHeader};
    out += '\n';
    for (const ErrorRow& row : report.rows) {
        out += std::to_string(row.project_id);
        out += ',';
        out += row.model;
        out += ',';
        out += row.label;
        out += ',';
        out += format_compact(row.estimated_pm);
        out += ',';
        out += format_compact(row.actual_pm);
        out += ',';
        out += format_compact(row.signed_error_pct);
        out += ',';
        out += format_compact(row.mre);
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

double field_to_double(const std::string& text, int line_no, const char* what) {
    double out = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) {
        throw ValidationError("report CSV line " + std::to_string(line_no) + ": " + what + " '" +
                              text + "' is not a number");
    }
    return out;
}

} // namespace

EvaluationReport parse_report_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError("report CSV is empty");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kReportCsvHeader) {
        throw ValidationError("report CSV header must be '" + std::string(kReportCsvHeader) +
                              "', got '" + line + "'");
    }
    EvaluationReport report;
    std::vector<std::pair<std::string, std::string>> config_order;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 7) {
            throw ValidationError("report CSV line " + std::to_string(line_no) +
                                  ": expected 7 fields, got " + std::to_string(f.size()));
        }
        ErrorRow row;
        int id = 0;
        auto [ptr, ec] = std::from_chars(f[0].data(), f[0].data() + f[0].size(), id);
        if (ec != std::errc() || ptr != f[0].data() + f[0].size()) {
            throw ValidationError("report CSV line " + std::to_string(line_no) +
                                  ": project_id '" + f[0] + "' is not an integer");
        }
        row.project_id = id;
        row.model = f[1];
        row.label = f[2];
        row.estimated_pm = field_to_double(f[3], line_no, "estimated_pm");
        row.actual_pm = field_to_double(f[4], line_no, "actual_pm");
        row.signed_error_pct = field_to_double(f[5], line_no, "signed_error_pct");
        row.mre = field_to_double(f[6], line_no, "mre");
        const std::pair<std::string, std::string> key{row.model, row.label};
        if (std::find(config_order.begin(), config_order.end(), key) == config_order.end()) {
            config_order.push_back(key);
        }
        report.rows.push_back(std::move(row));
    }
    for (const auto& [model, label] : config_order) {
        double sum = 0.0;
        std::size_t n = 0;
        for (const ErrorRow& row : report.rows) {
            if (row.model == model && row.label == label) {
                sum += row.mre;
                ++n;
            }
        }
        report.mmre.push_back({model, label, sum / static_cast<double>(n)});
    }
    return report;
}

std::string to_json(const EvaluationReport& report) {
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const ErrorRow& row : report.rows) {
        nlohmann::ordered_json r;
        r["project_id"] = row.project_id;
        r["model"] = row.model;
        r["parameterization"] = row.label;
        r["estimated_pm"] = row.estimated_pm;
        r["actual_pm"] = row.actual_pm;
        r["signed_error_pct"] = row.signed_error_pct;
        r["mre"] = row.mre;
        doc["rows"].push_back(std::move(r));
    }
    doc["mmre"] = nlohmann::ordered_json::array();
    for (const MmreEntry& entry : report.mmre) {
        nlohmann::ordered_json e;
        e["model"] = entry.model;
        e["parameterization"] = entry.label;
        e["mmre"] = entry.mmre;
        doc["mmre"].push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
}

namespace {

std::vector<std::pair<std::string, std::string>> config_order_of(const EvaluationReport& report) {
    std::vector<std::pair<std::string, std::string>> order;
    for (const MmreEntry& entry : report.mmre) {
        order.emplace_back(entry.model, entry.label);
    }
    if (order.empty()) {
        for (const ErrorRow& row : report.rows) {
            const std::pair<std::string, std::string> key{row.model, row.label};
            if (std::find(order.begin(), order.end(), key) == order.end()) {
                order.push_back(key);
            }
        }
    }
    return order;
}

} // namespace

std::string to_text_table(const EvaluationReport& report) {
    const auto order = config_order_of(report);
    std::vector<int> project_ids;
    for (const ErrorRow& row : report.rows) {
        if (std::find(project_ids.begin(), project_ids.end(), row.project_id) ==
            project_ids.end()) {
            project_ids.push_back(row.project_id);
        }
    }

    std::ostringstream out;
    out << std::left << std::setw(8) << "project" << std::right << std::setw(10) << "actual";
    for (const auto& [model, label] : order) {
        const std::string head = model + "/" + label;
        out << "  " << std::setw(std::max<std::size_t>(head.size(), 14)) << head
            << std::setw(8) << "err%";
    }
    out << '\n';

    for (int id : project_ids) {
        const ErrorRow* first = nullptr;
        for (const ErrorRow& row : report.rows) {
            if (row.project_id == id) {
                first = &row;
                break;
            }
        }
        out << std::left << std::setw(8) << id << std::right << std::setw(10)
            << format_compact(first->actual_pm);
        for (const auto& [model, label] : order) {
            const ErrorRow* cell = nullptr;
            for (const ErrorRow& row : report.rows) {
                if (row.project_id == id && row.model == model && row.label == label) {
                    cell = &row;
                    break;
                }
            }
            const std::string head = model + "/" + label;
            const int width = static_cast<int>(std::max<std::size_t>(head.size(), 14));
            if (cell == nullptr) {
                out << "  " << std::setw(width) << "-" << std::setw(8) << "-";
            } else {
                out << "  " << std::setw(width) << table_round(EffortPm(cell->estimated_pm))
                    << std::setw(8) << std::llround(cell->signed_error_pct);
            }
        }
        out << '\n';
    }

    if (!report.mmre.empty()) {
        out << '\n';
        for (const MmreEntry& entry : report.mmre) {
            out << "MMRE " << entry.model << "/" << entry.label << " = " << std::fixed
                << std::setprecision(4) << entry.mmre << '\n';
            out.unsetf(std::ios::fixed);
        }
    }
    return out.str();
}

std::string to_plot_data(const EvaluationReport& report) {
    const auto order = config_order_of(report);
    std::string out;
    bool first_series = true;
    for (const auto& [model, label] : order) {
        if (!first_series) {
            out += '\n';
        }
        first_series = false;
        out += "# series: " + model + "/" + label + "\n";
        out += "# columns: project_index estimated_pm actual_pm\n";
        int index = 0;
        for (const ErrorRow& row : report.rows) {
            if (row.model == model && row.label == label) {
                ++index;
                out += std::to_string(index);
                out += ' ';
                out += format_compact(row.estimated_pm);
                out += ' ';
                out += format_compact(row.actual_pm);
                out += '\n';
            }
        }
    }
    return out;
}

CalibrationResult calibrate_power_law(
    const std::vector<std::pair<SizeKloc, EffortPm>>& points) {
    if (points.size() < 2) {
        throw ValidationError("calibration needs at least 2 points, got " +
                              std::to_string(points.size()));
    }
    std::set<double> distinct_sizes;
    for (const auto& [size, effort] : points) {
        if (effort.value <= 0.0) {
            throw DomainError("calibration needs positive efforts, got " +
                              format_compact(effort.value));
        }
        distinct_sizes.insert(size.value);
    }
    if (distinct_sizes.size() < 2) {
        throw ValidationError("degenerate fit: all " + std::to_string(points.size()) +
                              " points share one size");
    }

    const double n = static_cast<double>(points.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& [size, effort] : points) {
        mean_x += std::log(size.value);
        mean_y += std::log(effort.value);
    }
    mean_x /= n;
    mean_y /= n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& [size, effort] : points) {
        const double dx = std::log(size.value) - mean_x;
        const double dy = std::log(effort.value) - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    const double b = sxy / sxx;
    const double ln_a = mean_y - b * mean_x;
    if (b <= 0.0) {
        throw ValidationError("fitted exponent " + format_compact(b) +
                              " is not positive; the data does not follow a growing power law");
    }

    double rss = 0.0;
    for (const auto& [size, effort] : points) {
        const double r = std::log(effort.value) - (ln_a + b * std::log(size.value));
        rss += r * r;
    }
    return CalibrationResult{PowerLawConstants(std::exp(ln_a), b), rss, points.size()};
}

std::vector<std::pair<SizeKloc, EffortPm>> calibration_points(const dataset::Corpus& corpus) {
    std::vector<std::pair<SizeKloc, EffortPm>> out;
    out.reserve(corpus.size());
    for (const dataset::Project& p : corpus.projects()) {
        out.emplace_back(p.size, p.actual_effort);
    }
    return out;
}

} // namespace paramcost::evaluation
