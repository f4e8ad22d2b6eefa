#ifndef MAHLER_ROOTS_HPP
#define MAHLER_ROOTS_HPP

#include <complex>
#include <utility>
#include <vector>

#include "mahler/polynomial.hpp"

namespace mahler {

// All complex roots of a polynomial, with multiplicity, and one certified
// error radius per root: the closed disk of radius radii[i] around roots[i]
// contains at least one true root (a posteriori Newton-quotient bound
// min_j |z - a_j| <= n |p(z)| / |p'(z)|, with floating point rounding folded
// into the radius).
struct RootSet {
    std::vector<std::complex<double>> roots;
    std::vector<double> radii;
    int source_degree = 0;
};

struct RootOptions {
    unsigned precision_bits = 128;     // starting working precision
    unsigned max_precision_bits = 1024;
    double radius_goal = 1e-12;        // escalate precision until all radii fit
};

RootSet find_roots(const RatPolynomial& p, const RootOptions& options = {});
RootSet find_roots(const IntPolynomial& p, const RootOptions& options = {});

// |a_i| with propagated error bounds, sorted descending by modulus.
std::vector<std::pair<double, double>> moduli(const RootSet& rs);

} // namespace mahler

#endif
