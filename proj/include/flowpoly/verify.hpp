#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace flowpoly {

/// Inclusive upper bounds of a parameter sweep; lower bounds are n, a, b
/// >= 1 and c >= 0. Parsed from "n<=2,a<=2,b<=2,c<=1"; omitted keys keep
/// the defaults n <= 3, a <= 3, b <= 3, c <= 2.
struct Grid {
    int n = 3;
    int a = 3;
    int b = 3;
    int c = 2;
};

Grid parse_grid(const std::string& spec);

struct Check {
    std::string name;
    std::string params;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    Grid grid;
    std::vector<Check> checks;
    // Measured quantities reported without a pass/fail verdict.
    std::vector<nlohmann::json> observations;
    bool pass() const;
};

// relations, thm14, thm16, thm62, symmetry, theta, cor-catalan, asymptotics.
const std::vector<std::string>& suite_names();

// UsageError for an unknown suite.
SuiteReport run_suite(const std::string& suite, const Grid& grid);

nlohmann::json report_to_json(const SuiteReport& r);

}  // namespace flowpoly
