#pragma once

// Acceptance suite: each criterion is a self-contained check with its
// tolerance pinned in code, reporting the measured value either way.

#include <functional>
#include <string>
#include <vector>

namespace jc {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string measured;     // human-readable measured values
    std::string tolerance;    // pinned tolerances
    double seconds = 0.0;
};

struct ValidationOptions {
    // Negative-control hook: scale every tolerance (1.0 = pinned values).
    double tolerance_scale = 1.0;
    // Override the g2(0) target for the documented negative control.
    double g2_target = 2.17;
    bool verbose = true;      // print one line per criterion as it finishes
};

CriterionResult run_criterion(int id, const ValidationOptions& opt = {});
std::vector<CriterionResult> run_all_criteria(const ValidationOptions& opt = {});

std::string criterion_line(const CriterionResult& r);

}  // namespace jc
