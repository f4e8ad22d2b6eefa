#ifndef MAHLER_SUBRESULTANT_HPP
#define MAHLER_SUBRESULTANT_HPP

#include <utility>

#include <gmpxx.h>

#include "mahler/errors.hpp"
#include "mahler/polynomial.hpp"

namespace mahler {

namespace detail {
inline mpz_class pow_z(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}
inline mpz_class exact_div_z(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
} // namespace detail

// Resultant of two integer polynomials by the fraction-free subresultant PRS.
// All intermediate divisions are exact in Z.
inline mpz_class resultant(IntPolynomial a, IntPolynomial b) {
    using detail::exact_div_z;
    using detail::pow_z;
    if (a.is_zero() || b.is_zero()) return 0;
    int s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    }
    const mpz_class cont_a = content(a), cont_b = content(b);
    // Res(ca*A, cb*B) = ca^deg(B) * cb^deg(A) * Res(A, B)
    mpz_class t = pow_z(cont_a, static_cast<unsigned long>(b.degree())) *
                  pow_z(cont_b, static_cast<unsigned long>(a.degree()));
    a = primitive_part(a);
    b = primitive_part(b);
    mpz_class g = 1, h = 1;
    while (b.degree() > 0) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) return 0; // positive-degree common factor
        a = std::move(b);
        {
            const mpz_class denom = g * pow_z(h, static_cast<unsigned long>(delta));
            std::vector<mpz_class> c;
            c.reserve(static_cast<std::size_t>(r.degree()) + 1);
            for (const auto& v : r.coeffs()) c.push_back(exact_div_z(v, denom));
            b = IntPolynomial(std::move(c));
        }
        g = a.leading();
        if (delta > 0)
            h = exact_div_z(pow_z(g, static_cast<unsigned long>(delta)),
                            pow_z(h, static_cast<unsigned long>(delta - 1)));
    }
    if (a.degree() == 0) return s * t; // both inputs were constants
    // deg b == 0, b nonzero
    const mpz_class hf = exact_div_z(pow_z(b.leading(), static_cast<unsigned long>(a.degree())),
                                     pow_z(h, static_cast<unsigned long>(a.degree() - 1)));
    return s * t * hf;
}

// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p); equals prod_{i<j} (a_i - a_j)^2
// for monic p. Exact.
inline mpq_class discriminant(const IntPolynomial& p) {
    const int n = p.degree();
    if (n < 1) throw ValidationError("discriminant needs degree >= 1");
    if (n == 1) return 1; // empty product
    mpz_class res = resultant(p, p.derivative());
    mpq_class d = make_rational(res, p.leading());
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

} // namespace mahler

#endif
