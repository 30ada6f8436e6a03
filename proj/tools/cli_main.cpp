#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliffweil/config.hpp"
#include "cliffweil/report.hpp"
#include "cliffweil/suites.hpp"

namespace {

struct FlagOverrides {
    std::string configPath;
    std::string jsonPath;
    int order = 0;
    int cutoff = 0;
    std::vector<int> twists;
    std::vector<double> tGrid;
    double tolerance = 0.0;
    bool orderSet = false, cutoffSet = false, toleranceSet = false;
};

void addCommonFlags(CLI::App* sub, FlagOverrides& fo) {
    sub->add_option("--config", fo.configPath,
                    "configuration file (key = value lines)");
    sub->add_option("--json", fo.jsonPath, "write the JSON report to this path");
    sub->add_option("--order", fo.order, "series truncation order")
        ->check(CLI::PositiveNumber)
        ->each([&fo](const std::string&) { fo.orderSet = true; });
    sub->add_option("--cutoff", fo.cutoff, "block range for index computations")
        ->check(CLI::NonNegativeNumber)
        ->each([&fo](const std::string&) { fo.cutoffSet = true; });
    sub->add_option("--twist", fo.twists, "twist weights (comma separated)")
        ->delimiter(',');
    sub->add_option("--t-grid", fo.tGrid, "heat time grid (comma separated)")
        ->delimiter(',');
    sub->add_option("--tolerance", fo.tolerance, "heat comparison tolerance")
        ->each([&fo](const std::string&) { fo.toleranceSet = true; });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification harness for the curvature/index pairing"};
    app.require_subcommand(1);
    FlagOverrides fo;

    CLI::App* cmdAlgebra = app.add_subcommand(
        "verify-algebra", "Clifford/matrix agreement and structure tables");
    CLI::App* cmdWeil = app.add_subcommand(
        "verify-weil", "quadratic lifts, profile identities, basis independence");
    CLI::App* cmdGauss = app.add_subcommand(
        "verify-gauss", "moment expansion containment and top-degree identity");
    CLI::App* cmdDuflo = app.add_subcommand(
        "verify-duflo", "transport round-trip and eigenvalue shift pattern");
    CLI::App* cmdIndex = app.add_subcommand(
        "index", "index coefficient table, pattern fit, stability");
    CLI::App* cmdTheorem = app.add_subcommand(
        "verify-theorem", "spectral pairing equals curvature pairing");
    CLI::App* cmdHeat = app.add_subcommand(
        "heat", "numeric small-time checks against exact coefficients");
    CLI::App* cmdAll = app.add_subcommand("all", "every suite in order");
    for (CLI::App* sub : {cmdAlgebra, cmdWeil, cmdGauss, cmdDuflo, cmdIndex,
                          cmdTheorem, cmdHeat, cmdAll})
        addCommonFlags(sub, fo);

    CLI11_PARSE(app, argc, argv);

    try {
        cliffweil::Config cfg;
        if (!fo.configPath.empty()) cfg = cliffweil::loadConfigFile(fo.configPath);
        if (fo.orderSet) cfg.order = fo.order;
        if (fo.cutoffSet) {
            cfg.cutoff = fo.cutoff;
            cfg.stabilityCutoff = fo.cutoff + (fo.cutoff + 1) / 2;
        }
        if (!fo.twists.empty()) cfg.twists = fo.twists;
        if (!fo.tGrid.empty()) cfg.tGrid = fo.tGrid;
        if (fo.toleranceSet) cfg.tolerance = fo.tolerance;

        std::vector<cliffweil::SuiteReport> reports;
        if (app.got_subcommand(cmdAlgebra)) {
            reports.push_back(cliffweil::runAlgebraSuite(cfg));
        } else if (app.got_subcommand(cmdWeil)) {
            reports.push_back(cliffweil::runWeilSuite(cfg));
        } else if (app.got_subcommand(cmdGauss)) {
            reports.push_back(cliffweil::runGaussSuite(cfg));
        } else if (app.got_subcommand(cmdDuflo)) {
            reports.push_back(cliffweil::runDufloSuite(cfg));
        } else if (app.got_subcommand(cmdIndex)) {
            for (int w : cfg.twists) std::cout << cliffweil::indexTable(cfg, w);
            reports.push_back(cliffweil::runIndexSuite(cfg));
        } else if (app.got_subcommand(cmdTheorem)) {
            reports.push_back(cliffweil::runTheoremSuite(cfg));
        } else if (app.got_subcommand(cmdHeat)) {
            reports.push_back(cliffweil::runHeatSuite(cfg));
        } else if (app.got_subcommand(cmdAll)) {
            reports = cliffweil::runAll(cfg);
        }

        std::cout << cliffweil::reportsToText(reports);
        if (!fo.jsonPath.empty()) {
            std::ofstream out(fo.jsonPath);
            if (!out)
                throw std::invalid_argument("cannot write JSON report to " +
                                            fo.jsonPath);
            out << cliffweil::reportsToJson(reports);
        }
        return cliffweil::anyFailed(reports) ? 1 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
