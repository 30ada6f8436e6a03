#include "cliffweil/report.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cliffweil/config.hpp"
#include "json.hpp"

namespace cliffweil {

std::string statusName(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass:
            return "pass";
        case CheckStatus::Fail:
            return "fail";
        case CheckStatus::Flagged:
            return "flagged";
    }
    return "unknown";
}

bool SuiteReport::failed() const { return countFailed() > 0; }

int SuiteReport::countFailed() const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) ++n;
    return n;
}

int SuiteReport::countFlagged() const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == CheckStatus::Flagged) ++n;
    return n;
}

std::string reportsToJson(const std::vector<SuiteReport>& reports) {
    nlohmann::ordered_json root;
    root["schema"] = 1;
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json s;
        s["suite"] = r.suite;
        s["failed"] = r.countFailed();
        s["flagged"] = r.countFlagged();
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : r.checks) {
            nlohmann::ordered_json jc;
            jc["id"] = c.id;
            jc["status"] = statusName(c.status);
            jc["detail"] = c.detail;
            jc["values"] = c.values;
            jc["residuals"] = c.residuals;
            checks.push_back(jc);
        }
        s["checks"] = checks;
        suites.push_back(s);
    }
    root["suites"] = suites;
    return root.dump(2) + "\n";
}

std::string reportsToText(const std::vector<SuiteReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        for (const auto& c : r.checks) {
            std::string tag = statusName(c.status);
            for (auto& ch : tag) ch = static_cast<char>(std::toupper(ch));
            os << "[" << tag << "] " << r.suite << "/" << c.id;
            if (!c.detail.empty()) os << " - " << c.detail;
            os << "\n";
            if (c.status != CheckStatus::Pass) {
                for (const auto& v : c.values) os << "        value: " << v << "\n";
                for (double d : c.residuals) os << "        residual: " << d << "\n";
            }
        }
        os << "suite " << r.suite << ": " << r.checks.size() << " checks, "
           << r.countFailed() << " failed, " << r.countFlagged() << " flagged\n";
    }
    return os.str();
}

bool anyFailed(const std::vector<SuiteReport>& reports) {
    for (const auto& r : reports)
        if (r.failed()) return true;
    return false;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> splitList(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

[[noreturn]] void badValue(const std::string& key, int lineNo) {
    throw std::invalid_argument("bad value for " + key + " on line " +
                                std::to_string(lineNo));
}

long parseLong(const std::string& key, const std::string& v, int lineNo) {
    try {
        size_t used = 0;
        long r = std::stol(v, &used);
        if (used != v.size()) badValue(key, lineNo);
        return r;
    } catch (const std::invalid_argument&) {
        badValue(key, lineNo);
    } catch (const std::out_of_range&) {
        badValue(key, lineNo);
    }
}

double parseDouble(const std::string& key, const std::string& v, int lineNo) {
    try {
        size_t used = 0;
        double r = std::stod(v, &used);
        if (used != v.size()) badValue(key, lineNo);
        return r;
    } catch (const std::invalid_argument&) {
        badValue(key, lineNo);
    } catch (const std::out_of_range&) {
        badValue(key, lineNo);
    }
}

}  // namespace

Config parseConfig(const std::string& text) {
    Config cfg;
    bool phiSeen = false;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad config line " + std::to_string(lineNo));
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::invalid_argument("bad config line " + std::to_string(lineNo));
        if (key == "order") {
            cfg.order = static_cast<int>(parseLong(key, val, lineNo));
        } else if (key == "cutoff") {
            cfg.cutoff = static_cast<int>(parseLong(key, val, lineNo));
        } else if (key == "stability-cutoff") {
            cfg.stabilityCutoff = static_cast<int>(parseLong(key, val, lineNo));
        } else if (key == "twists") {
            cfg.twists.clear();
            for (const auto& p : splitList(val))
                cfg.twists.push_back(static_cast<int>(parseLong(key, p, lineNo)));
            if (cfg.twists.empty()) badValue(key, lineNo);
        } else if (key == "t-grid") {
            cfg.tGrid.clear();
            for (const auto& p : splitList(val))
                cfg.tGrid.push_back(parseDouble(key, p, lineNo));
            if (cfg.tGrid.empty()) badValue(key, lineNo);
        } else if (key == "spectral-cutoff") {
            cfg.spectralCutoff = static_cast<int>(parseLong(key, val, lineNo));
        } else if (key == "tolerance") {
            cfg.tolerance = parseDouble(key, val, lineNo);
        } else if (key == "heat-weight-max") {
            cfg.heatWeightMax = static_cast<int>(parseLong(key, val, lineNo));
        } else if (key == "heat-twist") {
            cfg.heatTwist = static_cast<int>(parseLong(key, val, lineNo));
        } else if (key == "seed") {
            cfg.seed = static_cast<unsigned long>(parseLong(key, val, lineNo));
        } else if (key == "algebra-file") {
            cfg.algebraFile = val;
        } else if (key == "phi") {
            if (!phiSeen) {
                cfg.phis.clear();
                phiSeen = true;
            }
            std::vector<long> coeffs;
            for (const auto& p : splitList(val))
                coeffs.push_back(parseLong(key, p, lineNo));
            if (coeffs.empty()) badValue(key, lineNo);
            cfg.phis.push_back(coeffs);
        } else {
            throw std::invalid_argument("unknown config key '" + key +
                                        "' on line " + std::to_string(lineNo));
        }
    }
    return cfg;
}

Config loadConfigFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseConfig(buf.str());
}

Series phiFromCoeffs(const std::vector<long>& coeffs, int order) {
    if (static_cast<int>(coeffs.size()) - 1 > order)
        throw std::invalid_argument("polynomial degree exceeds the series order");
    Series s(1, order);
    for (size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0)
            s.setCoefficient({static_cast<int>(k)}, Scalar::fromInt(coeffs[k]));
    return s;
}

}  // namespace cliffweil
