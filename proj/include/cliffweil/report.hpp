#pragma once

#include <string>
#include <vector>

namespace cliffweil {

enum class CheckStatus { Pass, Fail, Flagged };

std::string statusName(CheckStatus s);

// One executed check: exact values are rendered as canonical strings so a
// report can be compared byte for byte; residuals carry the numeric-path
// data (time grids, extrapolants, tail estimates).
struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::vector<std::string> values;
    std::vector<double> residuals;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool failed() const;
    int countFailed() const;
    int countFlagged() const;
};

// Versioned JSON document; field order and formatting are fixed so that
// identical runs produce identical bytes.  No wall-clock data is included.
std::string reportsToJson(const std::vector<SuiteReport>& reports);

// One line per check, then a per-suite summary line.
std::string reportsToText(const std::vector<SuiteReport>& reports);

bool anyFailed(const std::vector<SuiteReport>& reports);

}  // namespace cliffweil
