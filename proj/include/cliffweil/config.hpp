#pragma once

#include <string>
#include <vector>

#include "cliffweil/series.hpp"

namespace cliffweil {

// Harness settings shared by the suites and the command-line driver.
// Defaults reproduce the shipped verification run.
struct Config {
    int order = 8;             // series truncation order
    int cutoff = 20;           // block range for index computations
    int stabilityCutoff = 30;  // enlarged range for the stability check
    std::vector<int> twists = {-2, -1, 0, 1, 2};
    // test polynomials as coefficient lists, constant term first
    std::vector<std::vector<long>> phis = {{1}, {0, 1}, {0, 0, 1}, {0, 0, 0, 1}};
    std::vector<double> tGrid = {0.4, 0.2, 0.1, 0.05};
    int spectralCutoff = 80;   // heat kernel spectral range 2j <= this
    double tolerance = 1e-3;   // heat comparison tolerance
    int heatWeightMax = 4;     // heat checks run |m| <= this
    int heatTwist = 0;         // twist of the model used for heat checks
    unsigned long seed = 12345;
    std::string algebraFile;   // optional structure-constant table to validate
};

// key = value lines, '#' comments, blank lines ignored.  List values are
// comma- or space-separated.  Repeated `phi = c0 c1 ...` lines replace the
// default polynomial set on first occurrence and accumulate afterwards.
// Unknown keys and malformed values raise std::invalid_argument naming the
// offending line.
Config parseConfig(const std::string& text);

// Reads and parses a file; throws std::invalid_argument("cannot open config
// file: <path>") when unreadable.
Config loadConfigFile(const std::string& path);

// Coefficient list (constant first) as a one-variable polynomial jet.
Series phiFromCoeffs(const std::vector<long>& coeffs, int order);

}  // namespace cliffweil
