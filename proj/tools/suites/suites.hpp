#pragma once

// Scaled experiments, one per acceptance criterion, runnable from the CLI
// (`suite run <name>`) and from the acceptance test.

#include "deltasys/linorders.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace deltasys::suites {

struct Assertion {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<Assertion> assertions;
    /// Wall time of the run in seconds.
    double seconds = 0;
    /// Time limit the suite is held to, seconds.
    double limit = 0;

    bool pass() const;
};

const std::vector<std::string>& suite_names();
/// Throws Errc::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name);

/// Random term of the given maximal depth.
OrderTerm random_term(std::mt19937_64& rng, int depth);

} // namespace deltasys::suites
