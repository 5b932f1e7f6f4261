#include "paramcost/delphi.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace paramcost::delphi {

ExpertRound::ExpertRound(std::vector<double> estimates) : estimates_(std::move(estimates)) {
    if (estimates_.empty()) {
        throw ValidationError("an expert round needs at least one estimate");
    }
    for (double e : estimates_) {
        if (!std::isfinite(e) || e <= 0.0) {
            throw ValidationError("expert estimates must be positive person-month values");
        }
    }
    least_ = *std::min_element(estimates_.begin(), estimates_.end());
    highest_ = *std::max_element(estimates_.begin(), estimates_.end());
    double sum = 0.0;
    for (double e : estimates_) sum += e;
    average_ = sum / static_cast<double>(estimates_.size());
}

EffortPm aggregate(const ExpertRound& round) {
    const double raw = (round.least() + 4.0 * round.average() + round.highest()) / 6.0;
    // rounding can push the convex combination a few ulp past an extreme; the
    // documented [least, highest] bound wins
    return EffortPm(std::clamp(raw, round.least(), round.highest()));
}

std::vector<ExpertRound> load_rounds_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "round,expert,estimate_pm") {
        throw ValidationError("expected header 'round,expert,estimate_pm'");
    }
    std::map<long, std::vector<double>> by_round;
    std::string problems;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string round_s, expert, estimate_s;
        if (!std::getline(row, round_s, ',') || !std::getline(row, expert, ',') ||
            !std::getline(row, estimate_s)) {
            problems += "row " + std::to_string(line_no) + ": expected 3 fields\n";
            continue;
        }
        long round_id = 0;
        auto [p1, e1] = std::from_chars(round_s.data(), round_s.data() + round_s.size(), round_id);
        double estimate = 0.0;
        auto [p2, e2] = std::from_chars(estimate_s.data(), estimate_s.data() + estimate_s.size(),
                                        estimate);
        if (e1 != std::errc() || p1 != round_s.data() + round_s.size()) {
            problems += "row " + std::to_string(line_no) + ": bad round id '" + round_s + "'\n";
            continue;
        }
        if (e2 != std::errc() || p2 != estimate_s.data() + estimate_s.size() ||
            !std::isfinite(estimate) || estimate <= 0.0) {
            problems += "row " + std::to_string(line_no) + ": bad estimate '" + estimate_s + "'\n";
            continue;
        }
        by_round[round_id].push_back(estimate);
    }
    if (!problems.empty()) {
        throw ValidationError("delphi CSV rejected:\n" + problems);
    }
    if (by_round.empty()) {
        throw ValidationError("delphi CSV contains no estimates");
    }
    std::vector<ExpertRound> rounds;
    rounds.reserve(by_round.size());
    for (auto& [id, estimates] : by_round) {
        rounds.emplace_back(std::move(estimates));
    }
    return rounds;
}

} // namespace paramcost::delphi
