// verify.hpp
// Aggregated verification suite: every numeric claim the library makes,
// re-derived and checked at a configurable tolerance, reported as
// deterministic records.

#pragma once

#include <string>
#include <vector>

#include "nucleonsim/core.hpp"

namespace nsim {

struct CheckRecord {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
};

/// Runs every registered check (gate algebra, rewrites, preparation
/// fidelities, reduced-density structure, moments, quantum numbers,
/// photonic backend) in a fixed order.
std::vector<CheckRecord> verification_suite(double tol = kDefaultTol);

/// "check=<name> status=<pass|fail> measured=<v> tol=<t>" per line.
std::string format_report(const std::vector<CheckRecord>& records);

bool all_pass(const std::vector<CheckRecord>& records);

}  // namespace nsim
