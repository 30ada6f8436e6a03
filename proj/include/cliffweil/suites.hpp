#pragma once

#include <string>
#include <vector>

#include "cliffweil/config.hpp"
#include "cliffweil/report.hpp"

namespace cliffweil {

// Validation suites behind the command-line driver.  Each returns one
// report; runAll concatenates them in a fixed order.  All randomness is
// seeded from the config, so reports are reproducible.
SuiteReport runAlgebraSuite(const Config& cfg);
SuiteReport runWeilSuite(const Config& cfg);
SuiteReport runGaussSuite(const Config& cfg);
SuiteReport runDufloSuite(const Config& cfg);
SuiteReport runIndexSuite(const Config& cfg);
SuiteReport runTheoremSuite(const Config& cfg);
SuiteReport runHeatSuite(const Config& cfg);
// Deliberately corrupted fixtures; a check passes when the corruption is
// caught by the validators it is aimed at.
SuiteReport runSensitivitySuite(const Config& cfg);

std::vector<SuiteReport> runAll(const Config& cfg);

// Table of index coefficients and the fitted pattern for one twist.
std::string indexTable(const Config& cfg, int w);

}  // namespace cliffweil
