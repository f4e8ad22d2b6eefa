#ifndef MAHLER_POLYNOMIAL_HPP
#define MAHLER_POLYNOMIAL_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mahler/errors.hpp"

namespace mahler {

// Dense univariate polynomial over a commutative ring T.
// Coefficients are stored in descending degree order: coeff(0) is the leading
// coefficient. The canonical coefficient order of the whole project.
//
// Invariants: the vector is never empty; the leading coefficient is nonzero
// unless the polynomial is identically zero, represented as the single
// coefficient 0 of degree 0.
template <typename T>
class Polynomial {
public:
    Polynomial() : c_{T(0)} {}

    explicit Polynomial(std::vector<T> descending_coeffs)
        : c_(std::move(descending_coeffs)) {
        if (c_.empty()) c_.push_back(T(0));
        normalize();
    }

    Polynomial(std::initializer_list<T> descending_coeffs)
        : Polynomial(std::vector<T>(descending_coeffs)) {}

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial({T(1)}); }
    // c * X^k
    static Polynomial monomial(T c, int k) {
        std::vector<T> v(static_cast<std::size_t>(k) + 1, T(0));
        v[0] = std::move(c);
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
    bool is_constant() const { return c_.size() == 1; }
    bool is_monic() const { return c_[0] == 1; }

    const T& leading() const { return c_.front(); }
    const T& constant() const { return c_.back(); }

    // Coefficient of X^k (0 for k above the degree).
    const T& coefficient(int k) const {
        static const T kZero(0);
        if (k < 0 || k > degree()) return kZero;
        return c_[static_cast<std::size_t>(degree() - k)];
    }

    // Descending-order access, index 0 = leading.
    const std::vector<T>& coeffs() const { return c_; }

    T evaluate(const T& x) const {
        T acc = c_[0];
        for (std::size_t i = 1; i < c_.size(); ++i) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        const int n = degree();
        if (n == 0) return zero();
        std::vector<T> d(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] * T(n - i);
        return Polynomial(std::move(d));
    }

    // X^n p(1/X) with n = degree: the coefficient vector reversed.
    Polynomial reversed() const {
        std::vector<T> r(c_.rbegin(), c_.rend());
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        std::vector<T> r(c_);
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        const std::size_t na = a.c_.size(), nb = b.c_.size();
        const std::size_t n = std::max(na, nb);
        std::vector<T> r(n, T(0));
        for (std::size_t i = 0; i < na; ++i) r[n - na + i] = a.c_[i];
        for (std::size_t i = 0; i < nb; ++i) r[n - nb + i] = r[n - nb + i] + b.c_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Polynomial& a, const T& s) {
        if (s == 0) return zero();
        std::vector<T> r(a.c_);
        for (auto& v : r) v = v * s;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, const Polynomial& a) { return a * s; }

private:
    void normalize() {
        std::size_t lead = 0;
        while (lead + 1 < c_.size() && c_[lead] == 0) ++lead;
        if (lead > 0) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    }

    std::vector<T> c_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RatPolynomial = Polynomial<mpq_class>;

// Canonicalized rational (mpq_class's two-argument constructor does not
// canonicalize on its own).
inline mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<mpq_class> c;
    c.reserve(static_cast<std::size_t>(p.degree()) + 1);
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPolynomial(std::move(c));
}

// Exact conversion back to integer coefficients; all denominators must be 1.
inline IntPolynomial to_integer(const RatPolynomial& p) {
    std::vector<mpz_class> c;
    c.reserve(static_cast<std::size_t>(p.degree()) + 1);
    for (const auto& v : p.coeffs()) {
        if (v.get_den() != 1) throw ValidationError("polynomial has a fractional coefficient");
        c.push_back(v.get_num());
    }
    return IntPolynomial(std::move(c));
}

// L(p): sum of the absolute values of all coefficients.
inline mpz_class poly_length(const IntPolynomial& p) {
    mpz_class s = 0;
    for (const auto& c : p.coeffs()) s += abs(c);
    return s;
}

// Quotient and remainder over a field (exact for T = mpq_class).
template <typename T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (b.is_zero()) throw ValidationError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial<T>::zero(), a};
    std::vector<T> rem(a.coeffs());
    const int db = b.degree();
    const int dq = a.degree() - db;
    std::vector<T> quo(static_cast<std::size_t>(dq) + 1, T(0));
    for (int i = 0; i <= dq; ++i) {
        T f = rem[static_cast<std::size_t>(i)] / b.leading();
        quo[static_cast<std::size_t>(i)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i + j)] =
                rem[static_cast<std::size_t>(i + j)] - f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    std::vector<T> tail(rem.begin() + dq + 1, rem.end());
    if (tail.empty()) tail.push_back(T(0));
    return {Polynomial<T>(std::move(quo)), Polynomial<T>(std::move(tail))};
}

// Exact division; throws if the remainder is nonzero.
template <typename T>
Polynomial<T> exact_divide(const Polynomial<T>& a, const Polynomial<T>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ValidationError("exact polynomial division left a remainder");
    return q;
}

// Division of integer polynomials by a monic divisor stays in Z[X]; returns
// nothing when the division is not exact.
inline bool try_divide_monic(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial* quotient) {
    if (!b.is_monic()) throw ValidationError("divisor must be monic");
    if (a.degree() < b.degree()) return false;
    std::vector<mpz_class> rem(a.coeffs());
    const int db = b.degree();
    const int dq = a.degree() - db;
    std::vector<mpz_class> quo(static_cast<std::size_t>(dq) + 1, mpz_class(0));
    for (int i = 0; i <= dq; ++i) {
        mpz_class f = rem[static_cast<std::size_t>(i)];
        quo[static_cast<std::size_t>(i)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    for (int j = dq + 1; j <= a.degree(); ++j)
        if (rem[static_cast<std::size_t>(j)] != 0) return false;
    if (quotient) *quotient = IntPolynomial(std::move(quo));
    return true;
}

// Positive gcd of all coefficients (content); content of the zero polynomial is 0.
inline mpz_class content(const IntPolynomial& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    mpz_class g = content(p);
    if (sgn(p.leading()) < 0) g = -g;
    std::vector<mpz_class> c;
    c.reserve(static_cast<std::size_t>(p.degree()) + 1);
    for (const auto& v : p.coeffs()) c.push_back(v / g);
    return IntPolynomial(std::move(c));
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, computed without
// fractions. Requires deg a >= deg b.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    assert(!b.is_zero() && a.degree() >= b.degree());
    std::vector<mpz_class> r(a.coeffs());
    const mpz_class& lb = b.leading();
    const int db = b.degree();
    int dr = a.degree();
    int steps = a.degree() - db + 1;
    while (dr >= db && !(r.size() == 1 && r[0] == 0)) {
        mpz_class f = r[0];
        // r <- lb * r - f * X^(dr-db) * b
        for (auto& v : r) v *= lb;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
        // leading term cancels by construction
        std::size_t lead = 0;
        while (lead + 1 < r.size() && r[lead] == 0) ++lead;
        r.erase(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(lead));
        dr = static_cast<int>(r.size()) - 1;
        --steps;
    }
    // pad the deferred lc multiplications so the result equals lc^(da-db+1) a mod b
    IntPolynomial rem(std::move(r));
    if (steps > 0) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
        rem = rem * scale;
    }
    return rem;
}

// Exact gcd in Z[X] via the primitive PRS; result is primitive with positive
// leading coefficient (or the gcd of contents when one side is constant).
inline IntPolynomial gcd(const IntPolynomial& a0, const IntPolynomial& b0) {
    if (a0.is_zero()) return sgn(b0.leading()) < 0 ? -b0 : b0;
    if (b0.is_zero()) return sgn(a0.leading()) < 0 ? -a0 : a0;
    mpz_class cont_gcd;
    mpz_gcd(cont_gcd.get_mpz_t(), content(a0).get_mpz_t(), content(b0).get_mpz_t());
    IntPolynomial a = primitive_part(a0), b = primitive_part(b0);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.is_constant()) return IntPolynomial({cont_gcd});
        IntPolynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPolynomial::zero() : primitive_part(r);
    }
    return IntPolynomial({cont_gcd}) * a;
}

// Clear denominators: smallest positive multiplier making the polynomial integral.
inline IntPolynomial clear_denominators(const RatPolynomial& p) {
    mpz_class lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(static_cast<std::size_t>(p.degree()) + 1);
    for (const auto& c : p.coeffs()) {
        mpq_class v = c * mpq_class(lcm);
        out.push_back(v.get_num());
    }
    return IntPolynomial(std::move(out));
}

// Monic gcd over Q, computed through the exact integer PRS.
inline RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return RatPolynomial::zero();
    IntPolynomial g = gcd(clear_denominators(a.is_zero() ? b : a),
                          clear_denominators(a.is_zero() ? a : b));
    RatPolynomial m = to_rational(g);
    mpq_class inv_lead = mpq_class(1) / m.leading();
    return m * inv_lead;
}

inline RatPolynomial make_monic(const RatPolynomial& p) {
    if (p.is_zero()) throw ValidationError("cannot normalize the zero polynomial to monic");
    mpq_class inv = mpq_class(1) / p.leading();
    return p * inv;
}

// Yun's square-free decomposition of a monic rational polynomial:
// p = prod factors[i]^(i+1), each factor monic and square-free.
inline std::vector<RatPolynomial> squarefree_decomposition(const RatPolynomial& p) {
    if (p.is_zero() || p.degree() < 1) throw ValidationError("square-free decomposition needs degree >= 1");
    RatPolynomial f = make_monic(p);
    RatPolynomial fp = f.derivative();
    RatPolynomial u = gcd(f, fp);
    std::vector<RatPolynomial> factors;
    if (u.is_constant()) {
        factors.push_back(f);
        return factors;
    }
    RatPolynomial v = exact_divide(f, u);
    RatPolynomial w = exact_divide(fp, u);
    while (v.degree() > 0) {
        RatPolynomial wm = w - v.derivative();
        RatPolynomial a = gcd(v, wm); // gcd(v, 0) = monic v
        factors.push_back(a);
        v = exact_divide(v, a);
        w = exact_divide(wm, a);
    }
    return factors;
}

// Square-free part: product of the distinct irreducible factors.
inline RatPolynomial squarefree_part(const RatPolynomial& p) {
    RatPolynomial out = RatPolynomial::one();
    for (const auto& f : squarefree_decomposition(p)) out = out * f;
    return out;
}

inline bool is_squarefree(const IntPolynomial& p) {
    if (p.degree() < 1) return true;
    return gcd(p, p.derivative()).is_constant();
}

} // namespace mahler

#endif
