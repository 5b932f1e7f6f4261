#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "paramcost/core.hpp"

namespace paramcost::dataset {

/// One historical project record.
struct Project {
    int id;
    std::string ref_group; // opaque source tag ("*", "**", ...)
    SizeKloc size;
    EffortPm actual_effort; // strictly positive

    Project(int id, std::string ref_group, SizeKloc size, EffortPm actual_effort);
};

/// Ordered, validated collection of projects. Immutable after construction.
class Corpus {
public:
    Corpus(std::vector<Project> projects, std::string provenance); // ValidationError

    const std::vector<Project>& projects() const { return projects_; }
    const std::string& provenance() const { return provenance_; }
    std::size_t size() const { return projects_.size(); }

    const Project& by_id(int id) const; // ValidationError if absent

private:
    std::vector<Project> projects_;
    std::string provenance_;
};

/// The 30-project corpus embedded from the published comparison study,
/// exactly as printed there.
Corpus embedded_corpus();

inline constexpr std::string_view kCsvHeader = "id,ref_group,size_kloc,actual_effort_pm";

/// Parses the documented CSV schema. Every offending row is reported in one
/// ValidationError.
Corpus load_corpus(std::istream& in, std::string provenance = "loaded from CSV");
Corpus load_corpus_file(const std::string& path); // IoError if unreadable

/// Canonical CSV bytes: header, one row per project, shortest round-trip
/// number formatting, '\n' line ends.
std::string export_csv(const Corpus& corpus);

} // namespace paramcost::dataset
