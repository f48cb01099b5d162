#pragma once

#include <string>
#include <vector>

#include "parorb/orbit_case.hpp"

namespace parorb {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct FixtureReport {
    std::string fixture;
    std::vector<CheckResult> checks;
    std::string decomposition;  // report JSON of the stratum-by-stratum comparison
    bool pass() const;
};

struct VerifyOptions {
    bool certify = true;   // Bruhat interval certification of every class
    bool corrupt = false;  // drop one member of a class before certifying (negative control)
};

FixtureReport verify_fixture(const GrassmannianCase& gc, const VerifyOptions& opt = {});

struct SweepCaps {
    int a = 5, b = 5, c = 5, d = 5;
};

// All (G/P_m, cominuscule P_i) pairs up to the caps, in a fixed order.
std::vector<GrassmannianCase> sweep_fixtures(const SweepCaps& caps);
GrassmannianCase parse_fixture(const std::string& spec);  // "C,4,2,4"

// Runs fixtures on `threads` workers; output order follows the input.
std::vector<FixtureReport> run_sweep(const std::vector<GrassmannianCase>& fixtures, const VerifyOptions& opt,
                                     unsigned threads = 0);
std::string sweep_json(const std::vector<FixtureReport>& reports);

}  // namespace parorb
