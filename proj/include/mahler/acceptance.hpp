#ifndef MAHLER_ACCEPTANCE_HPP
#define MAHLER_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace mahler {

// One verification criterion: a pinned numeric check with a pinned runtime
// budget. detail carries the measured numbers for the log line.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;
};

// Runs the whole verification suite (the `verify-all` CLI command and the
// acceptance test binary share this).
std::vector<CriterionResult> run_acceptance();

std::string format_criterion_line(const CriterionResult& r);

} // namespace mahler

#endif
