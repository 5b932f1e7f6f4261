#include "paramcost/dataset.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "paramcost/errors.hpp"

namespace paramcost::dataset {

Project::Project(int id, std::string ref_group, SizeKloc size, EffortPm actual_effort)
    : id(id), ref_group(std::move(ref_group)), size(size), actual_effort(actual_effort) {
    if (this->id <= 0) {
        throw ValidationError("project id must be positive, got " + std::to_string(this->id));
    }
    if (this->ref_group.empty()) {
        throw ValidationError("project " + std::to_string(this->id) + ": ref_group is empty");
    }
    if (this->actual_effort.value <= 0.0) {
        throw ValidationError("project " + std::to_string(this->id) +
                              ": actual effort must be positive");
    }
}

Corpus::Corpus(std::vector<Project> projects, std::string provenance)
    : projects_(std::move(projects)), provenance_(std::move(provenance)) {
    if (projects_.empty()) {
        throw ValidationError("corpus has no projects");
    }
    std::set<int> seen;
    for (const Project& p : projects_) {
        if (!seen.insert(p.id).second) {
            throw ValidationError("duplicate project id " + std::to_string(p.id));
        }
    }
}

const Project& Corpus::by_id(int id) const {
    for (const Project& p : projects_) {
        if (p.id == id) {
            return p;
        }
    }
    throw ValidationError("no project with id " + std::to_string(id));
}

Corpus embedded_corpus() {
    // Sizes in KLOC and actual efforts in person-months as printed in the
    // source study. ref_group is the study's own source tag, kept verbatim;
    // project 18 carries "***" in the data listing even though the prose
    // names only four sources, so the tag is stored as printed.
    std::vector<Project> rows;
    rows.reserve(30);
    struct Row {
        int id;
        const char* group;
        double kloc;
        double pm;
    };
    static constexpr Row kRows[] = {
        {1, "*", 50, 47},      {2, "*", 40, 66},        {3, "*", 22, 66},
        {4, "*", 13, 159},     {5, "*", 12, 218},       {6, "*", 34, 723},
        {7, "*", 6.2, 775},    {8, "*", 2.5, 312},      {9, "*", 5.3, 883},
        {10, "*", 19.5, 433},  {11, "*", 28, 337},      {12, "*", 30, 345},
        {13, "*", 32, 302},    {14, "*", 57, 452},      {15, "**", 30.8, 143.7},
        {16, "**", 34.8, 161.3}, {17, "**", 38.8, 178.6}, {18, "***", 39, 542},
        {19, "****", 128.6, 557}, {20, "****", 15.4, 400}, {21, "****", 11.3, 240},
        {22, "****", 12.3, 95},  {23, "****", 13.3, 87},  {24, "****", 13, 18},
        {25, "****", 12.4, 63},  {26, "****", 13.6, 45},  {27, "****", 14, 13},
        {28, "****", 12.7, 16},  {29, "****", 12.8, 16},  {30, "****", 12.2, 34},
    };
    for (const Row& r : kRows) {
        rows.emplace_back(r.id, r.group, SizeKloc(r.kloc), EffortPm(r.pm));
    }
    return Corpus(std::move(rows), "embedded 30-project comparison corpus");
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

bool parse_double(const std::string& text, double& out) {
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool parse_int(const std::string& text, int& out) {
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace

Corpus load_corpus(std::istream& in, std::string provenance) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError("corpus CSV is empty (expected header '" +
                              std::string(kCsvHeader) + "')");
    }
    if (trim(line) != kCsvHeader) {
        throw ValidationError("corpus CSV header must be '" + std::string(kCsvHeader) +
                              "', got '" + trim(line) + "'");
    }

    std::vector<Project> rows;
    std::vector<std::string> problems;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        const std::vector<std::string> fields = split_csv_line(stripped);
        if (fields.size() != 4) {
            problems.push_back("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                               std::to_string(fields.size()));
            continue;
        }
        int id = 0;
        double kloc = 0.0;
        double pm = 0.0;
        const std::string id_text = trim(fields[0]);
        const std::string group = trim(fields[1]);
        const std::string kloc_text = trim(fields[2]);
        const std::string pm_text = trim(fields[3]);
        if (!parse_int(id_text, id)) {
            problems.push_back("line " + std::to_string(line_no) + ": id '" + id_text +
                               "' is not an integer");
            continue;
        }
        if (!parse_double(kloc_text, kloc)) {
            problems.push_back("line " + std::to_string(line_no) + ": size_kloc '" + kloc_text +
                               "' is not a number");
            continue;
        }
        if (!parse_double(pm_text, pm)) {
            problems.push_back("line " + std::to_string(line_no) + ": actual_effort_pm '" +
                               pm_text + "' is not a number");
            continue;
        }
        try {
            rows.emplace_back(id, group, SizeKloc(kloc), EffortPm(pm));
        } catch (const Error& e) {
            problems.push_back("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!problems.empty()) {
        std::ostringstream msg;
        msg << "corpus CSV has " << problems.size() << " invalid row(s):";
        for (const std::string& p : problems) {
            msg << "\n  " << p;
        }
        throw ValidationError(msg.str());
    }
    return Corpus(std::move(rows), std::move(provenance));
}

Corpus load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open corpus file '" + path + "'");
    }
    return load_corpus(in, "loaded from " + path);
}

std::string export_csv(const Corpus& corpus) {
    std::string out{kCsvHeader};
    out += '\n';
    for (const Project& p : corpus.projects()) {
        out += std::to_string(p.id);
        out += ',';
        out += p.ref_group;
        out += ',';
        out += format_compact(p.size.value);
        out += ',';
        out += format_compact(p.actual_effort.value);
        out += '\n';
    }
    return out;
}

} // namespace paramcost::dataset
