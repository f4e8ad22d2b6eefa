#ifndef MAHLER_NEWTON_IDENTITIES_HPP
#define MAHLER_NEWTON_IDENTITIES_HPP

#include <vector>

#include <gmpxx.h>

#include "mahler/errors.hpp"
#include "mahler/polynomial.hpp"

namespace mahler {

// The recurrence j*s_j = sum_{i=1..j} (-1)^(i-1) s_{j-i} p_i with s_0 = 1,
// solved for s_1..s_n given the power sums p_1..p_n. Exact.
inline std::vector<mpq_class> elementary_symmetric_from_power_sums(const std::vector<mpq_class>& power_sums) {
    if (power_sums.empty()) throw ValidationError("need at least one power sum");
    const std::size_t n = power_sums.size();
    std::vector<mpq_class> s(n + 1);
    s[0] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        mpq_class acc = 0;
        for (std::size_t i = 1; i <= j; ++i) {
            mpq_class term = s[j - i] * power_sums[i - 1];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        s[j] = acc / mpq_class(static_cast<long>(j));
    }
    return std::vector<mpq_class>(s.begin() + 1, s.end());
}

// Same recurrence solved for p_1..p_{k_max} given the elementary symmetric
// functions (s_j = 0 above the degree).
inline std::vector<mpq_class> power_sums_from_elementary_symmetric(const std::vector<mpq_class>& sym,
                                                                   int k_max) {
    if (k_max < 1) throw ValidationError("k_max must be >= 1");
    auto s = [&](std::size_t j) -> mpq_class { return j <= sym.size() ? (j == 0 ? mpq_class(1) : sym[j - 1]) : mpq_class(0); };
    std::vector<mpq_class> p(static_cast<std::size_t>(k_max));
    for (std::size_t j = 1; j <= static_cast<std::size_t>(k_max); ++j) {
        // j s_j = sum_{i=1..j-1} (-1)^(i-1) s_{j-i} p_i + (-1)^(j-1) p_j
        mpq_class acc = s(j) * mpq_class(static_cast<long>(j));
        for (std::size_t i = 1; i < j; ++i) {
            mpq_class term = s(j - i) * p[i - 1];
            if (i % 2 == 0) term = -term;
            acc -= term;
        }
        if (j % 2 == 0) acc = -acc;
        p[j - 1] = acc;
    }
    return p;
}

namespace detail {
template <typename T>
std::vector<mpq_class> signed_symmetric_of(const Polynomial<T>& p) {
    // s_j = (-1)^j * coefficient of X^(n-j) for monic p
    if (!p.is_monic()) throw ValidationError("power sums require a monic polynomial");
    std::vector<mpq_class> sym(static_cast<std::size_t>(p.degree()));
    for (int j = 1; j <= p.degree(); ++j) {
        mpq_class v(p.coeffs()[static_cast<std::size_t>(j)]);
        if (j % 2 == 1) v = -v;
        sym[static_cast<std::size_t>(j - 1)] = v;
    }
    return sym;
}
} // namespace detail

// Exact power sums p_1..p_{k_max} of the roots of a monic polynomial.
inline std::vector<mpq_class> power_sums_from_coeffs(const IntPolynomial& p, int k_max) {
    return power_sums_from_elementary_symmetric(detail::signed_symmetric_of(p), k_max);
}
inline std::vector<mpq_class> power_sums_from_coeffs(const RatPolynomial& p, int k_max) {
    return power_sums_from_elementary_symmetric(detail::signed_symmetric_of(p), k_max);
}

// Monic polynomial of degree n whose roots have the given power sums p_1..p_n.
inline RatPolynomial monic_from_power_sums(const std::vector<mpq_class>& power_sums) {
    std::vector<mpq_class> sym = elementary_symmetric_from_power_sums(power_sums);
    std::vector<mpq_class> coeffs(power_sums.size() + 1);
    coeffs[0] = 1;
    for (std::size_t j = 1; j < coeffs.size(); ++j) {
        mpq_class v = sym[j - 1];
        if (j % 2 == 1) v = -v;
        coeffs[j] = v;
    }
    return RatPolynomial(std::move(coeffs));
}

} // namespace mahler

#endif
