#ifndef MAHLER_SEARCH_HPP
#define MAHLER_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "mahler/polynomial.hpp"
#include "mahler/roots.hpp"

namespace mahler {

// Exhaustive scan over monic integer polynomials of fixed degree and bounded
// coefficient height for the minimal noncyclotomic Mahler measure.
struct SearchSpec {
    int degree = 10;
    int height = 1;
    bool reciprocal_only = false; // restrict to palindromic coefficient vectors
    int workers = 1;
    RootOptions roots;
};

struct SearchRecord {
    double best_measure = 0;
    IntPolynomial witness;
    std::uint64_t candidates_scanned = 0;
    std::uint64_t cyclotomic_skipped = 0; // measure-1 candidates: cyclotomic products times a power of X
    double wall_time_seconds = 0;
};

struct CandidateRow {
    IntPolynomial poly;
    double measure = 0;
};

// true iff the coefficient vector is palindromic
bool is_reciprocal(const IntPolynomial& p);

// Scans the whole box, strips cyclotomic parts, and returns the minimal
// measure strictly above 1 with deterministic tie-breaking (lexicographically
// smallest coefficient vector). The result is independent of the worker
// count. When report_rows is given, every noncyclotomic candidate with
// measure above report_threshold is recorded (and measure pruning is
// disabled so the rows are exact).
SearchRecord enumerate_and_minimize(const SearchSpec& spec, double report_threshold = 0.0,
                                    std::vector<CandidateRow>* report_rows = nullptr);

} // namespace mahler

#endif
