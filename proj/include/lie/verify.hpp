#pragma once

// Regression suites over the family corpus: index formulas on the (a,b)
// grids, contactness with certificates, semi-invariant shapes, index
// additivity of semidirect sums, truncation indices and agreement of the
// probabilistic and symbolic engines.

#include <string>
#include <vector>

#include <lie/coadjoint.hpp>

namespace lie {

struct VerifyCfg {
    SampleCfg sample;
    int max_grid = 5;   // grid suites sweep 0 <= a,b <= max_grid
};

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string computed;
    double failure_bound = 0.0;
    std::string note;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::vector<CheckLine> checks;
};

const std::vector<std::string>& verify_suite_names();

// Throws std::domain_error("unknown suite: ...") for names not in the list.
SuiteResult run_suite(const std::string& name, const VerifyCfg& cfg);

std::vector<SuiteResult> run_all_suites(const VerifyCfg& cfg);

}  // namespace lie
