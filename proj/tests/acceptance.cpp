// Acceptance gate: runs every regression suite and prints one line per
// criterion. Exits 0 only when all of them pass. Failing checks are listed
// under their criterion so a red run is diagnosable from the log alone.

#include <lie/verify.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Criterion {
    const char* suite;
    const char* what;
};

// One entry per acceptance criterion, in order; suite names match
// verify_suite_names().
const std::vector<Criterion> criteria = {
    {"index-grid", "index of q(a,b) and r(a,b) matches the closed forms on the grid"},
    {"index-shift", "reduced families qbar/rbar have index one less than q/r"},
    {"contact-seaweeds", "contact instances certified by Pfaffian and recovered via reduction"},
    {"noncontact-seaweeds", "index-1 instances with vanishing contact semi-invariant rejected"},
    {"borel-semiinv", "Borel semi-invariants: generators, weights and the quotient relation"},
    {"heisenberg-ladder", "Heisenberg semi-invariants are the central powers z^n and z^(n+1)"},
    {"sp4-parabolic", "contact parabolic whose contact semi-invariant splits off the centre"},
    {"sl2-product", "orbit geometry at a marked functional: stabiliser, conical, stable"},
    {"two-characters", "two-weight extensions contact exactly when the weights differ"},
    {"equivalence", "contact, non-conical generic orbit and stability coincide at index 1"},
    {"rais", "index additivity across split abelian extensions"},
    {"truncation", "canonical truncations: dimensions and indices, Takiff ladders"},
    {"four-copies", "four copies of the plane rep, with and without the extra torus"},
    {"mode-agreement", "probabilistic and symbolic index agree on the small corpus"},
};

}  // namespace

int main() {
    lie::VerifyCfg cfg;
    int passed = 0;

    std::printf("acceptance: %zu criteria\n", criteria.size());
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        lie::SuiteResult res;
        std::string error;
        try {
            res = lie::run_suite(criteria[i].suite, cfg);
        } catch (const std::exception& e) {
            res.pass = false;
            error = e.what();
        }
        int ok = 0;
        for (const auto& c : res.checks) ok += c.pass ? 1 : 0;
        std::printf("%3zu %s  %-72s %d/%zu checks\n", i + 1,
                    res.pass ? "PASS" : "FAIL", criteria[i].what, ok,
                    res.checks.size());
        if (!error.empty()) std::printf("      error: %s\n", error.c_str());
        for (const auto& c : res.checks)
            if (!c.pass)
                std::printf("      %s: expected %s, got %s\n", c.name.c_str(),
                            c.expected.c_str(), c.computed.c_str());
        if (res.pass) ++passed;
        std::fflush(stdout);
    }

    std::printf("acceptance: %d/%zu criteria pass\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
