#ifndef MAHLER_MEASURES_HPP
#define MAHLER_MEASURES_HPP

#include <string>
#include <utility>

#include <gmpxx.h>

#include "mahler/polynomial.hpp"
#include "mahler/roots.hpp"

namespace mahler {

enum class EqualityCase { lower_tight, upper_tight, both_tight, neither };

const char* to_string(EqualityCase c);
EqualityCase equality_case_from_string(const std::string& s);

// The two-sided bound 2 sqrt(2/n) log M(p) <= l(p) <= 2 log M(p) for a monic
// degree-n polynomial whose roots multiply to +-1, together with the
// classification of the equality cases:
//   lower_tight: some r has every root modulus in {r, 1/r} (up to tolerance),
//   upper_tight: all but at most two moduli equal 1 (up to tolerance).
struct MeasureReport {
    int degree = 0;
    double mahler = 0, mahler_err = 0;
    double log_mahler = 0;
    double translation_length = 0, length_err = 0;
    double lower_bound = 0, upper_bound = 0;
    EqualityCase equality_case = EqualityCase::neither;
    std::string inputs_echo;
};

struct MeasureOptions {
    double tolerance = 1e-9;
    // strict: require the root product to be exactly +1 (within tolerance for
    // inexact input); relaxed accepts product -1 as well, since the bound
    // arithmetic depends only on moduli.
    bool strict_product_one = false;
    RootOptions roots;
};

// M(p) = |lc| * prod max(1, |a_i|), with the error propagated from the
// certified root radii. Returns (value, certified_error).
std::pair<double, double> mahler_measure(const RatPolynomial& p, const RootOptions& options = {});
std::pair<double, double> mahler_measure(const IntPolynomial& p, const RootOptions& options = {});

// l(p) = sqrt(sum over roots of 2 (log |a_i|)^2). Rejects a zero constant
// coefficient (a root at 0 makes the log divergent).
std::pair<double, double> translation_length(const RatPolynomial& p, const RootOptions& options = {});
std::pair<double, double> translation_length(const IntPolynomial& p, const RootOptions& options = {});

MeasureReport check_bounds(const RatPolynomial& p, const MeasureOptions& options = {});
MeasureReport check_bounds(const IntPolynomial& p, const MeasureOptions& options = {});

enum class BoundBranch { lehmer_branch, voutier_branch };

// f(n): log M(Lehmer) for n <= 20, else (1/4)(log log n / log n)^3.
struct BoundFunctionValue {
    long n = 0;
    double value = 0;
    BoundBranch branch = BoundBranch::lehmer_branch;
};

BoundFunctionValue lower_bound_function(long n);

// Direct evaluation of the Voutier expression (diagnostic; needs n >= 3).
double voutier_bound(long n);

// sys >= 2 sqrt(2) / sqrt(n) * f(n).
double systole_lower_bound(long n);

const IntPolynomial& lehmer_polynomial();
double lehmer_log_mahler(); // log M(L), computed once at full precision

// 2 sqrt(2/n) log+(2^-n L(p)) <= l(p) <= 2 log L(p), and
// (1/(n-1)) sqrt(2/n) log+|n^-n disc(p)| <= l(p).
struct CorollaryBounds {
    double length_lower = 0;
    double length_upper = 0;
    double disc_lower = 0;
};

CorollaryBounds corollary_bounds(const IntPolynomial& p, const MeasureOptions& options = {});

// L(p) <= 2^n M(p) <= 2^n L(p) and |disc(p)| <= n^n M(p)^(2n-2), checked with
// exact length/discriminant and certified Mahler measure. "holds" means the
// inequality cannot be refuted given the certified error; margins are signed
// slack (the third one on the log scale).
struct ClassicalInequalities {
    bool length_vs_measure_holds = false;
    double length_vs_measure_margin = 0; // 2^n M - L
    bool measure_vs_length_holds = false;
    double measure_vs_length_margin = 0; // L - M
    bool disc_vs_measure_holds = false;
    double disc_vs_measure_log_margin = 0; // n log n + (2n-2) log M - log |disc|
    mpz_class length;
    mpq_class disc;
    double mahler = 0, mahler_err = 0;
};

ClassicalInequalities mahler_classical_inequalities(const IntPolynomial& p, const RootOptions& options = {});

// Upper bound on log N(disc) from inverting Silverman's inequality:
// 2 p (p-1) log_mahler + p^2 log p, for odd prime p.
double silverman_disc_bound(long prime_p, double log_mahler);

} // namespace mahler

#endif
