#pragma once

#include <istream>
#include <vector>

#include "paramcost/core.hpp"

namespace paramcost::delphi {

/// One round of expert estimates, person-months. At least one estimate; all
/// positive.
class ExpertRound {
public:
    explicit ExpertRound(std::vector<double> estimates); // ValidationError

    const std::vector<double>& estimates() const { return estimates_; }
    double least() const { return least_; }
    double highest() const { return highest_; }
    double average() const { return average_; }

private:
    std::vector<double> estimates_;
    double least_;
    double highest_;
    double average_;
};

/// (least + 4 * average + highest) / 6 — a convex combination, so the result
/// always lies within [least, highest].
EffortPm aggregate(const ExpertRound& round);

/// CSV ingestion, one row per expert per round. Schema:
///   round,expert,estimate_pm
/// Rounds come back ordered by round id. ValidationError lists every bad row.
std::vector<ExpertRound> load_rounds_csv(std::istream& in);

} // namespace paramcost::delphi
