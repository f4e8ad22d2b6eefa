#include "mahler/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mahler/errors.hpp"
#include "mahler/subresultant.hpp"
#include "mahler/text_formats.hpp"

namespace mahler {

namespace {

// Interval product of max(1, |a_i| +- r_i); |lc| enters exactly.
struct MeasureInterval {
    double value, lo, hi;
};

MeasureInterval measure_from_roots(const RootSet& rs, double abs_lead) {
    double v = abs_lead, lo = abs_lead, hi = abs_lead;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        const double m = std::abs(rs.roots[i]);
        const double r = rs.radii[i];
        v *= std::max(1.0, m);
        lo *= std::max(1.0, m - r);
        hi *= std::max(1.0, m + r);
    }
    // double-rounding slack for the products themselves
    const double n = static_cast<double>(rs.roots.size()) + 2.0;
    lo *= 1.0 - n * 1e-16;
    hi *= 1.0 + n * 1e-16;
    return {v, lo, hi};
}

struct LengthInterval {
    double value, lo, hi;
};

// sqrt(sum 2 (log|a_i|)^2) with endpoint analysis: (log x)^2 on [lo, hi]
// attains its max at an endpoint and its min at 1 when the interval
// straddles 1.
LengthInterval length_from_roots(const RootSet& rs) {
    double s = 0, s_lo = 0, s_hi = 0;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        const double m = std::abs(rs.roots[i]);
        const double r = rs.radii[i];
        if (m <= r)
            throw PrecisionExhausted("a root is indistinguishable from zero at this precision");
        const double l = std::log(m);
        const double l_lo = std::log(m - r);
        const double l_hi = std::log(m + r);
        s += 2.0 * l * l;
        s_hi += 2.0 * std::max(l_lo * l_lo, l_hi * l_hi);
        if (l_lo <= 0.0 && l_hi >= 0.0)
            s_lo += 0.0;
        else
            s_lo += 2.0 * std::min(l_lo * l_lo, l_hi * l_hi);
    }
    const double slack = 1.0 + (static_cast<double>(rs.roots.size()) + 4.0) * 1e-16;
    return {std::sqrt(s), std::sqrt(s_lo) / slack, std::sqrt(s_hi) * slack};
}

double max_radius(const RootSet& rs) {
    double r = 0;
    for (double x : rs.radii) r = std::max(r, x);
    return r;
}

// log of |q| through mantissa/exponent so huge integers cannot overflow
double log_abs(const mpq_class& q) {
    if (q == 0) return -std::numeric_limits<double>::infinity();
    signed long en = 0, ed = 0;
    const double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
    const double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
    return std::log(std::abs(mn)) - std::log(std::abs(md)) +
           (static_cast<double>(en) - static_cast<double>(ed)) * std::log(2.0);
}

void require_bound_preconditions(const RatPolynomial& p, const MeasureOptions& options) {
    if (!p.is_monic()) throw ValidationError("Mahler-length bounds require a monic polynomial");
    const int n = p.degree();
    if (n < 1) throw ValidationError("degree must be >= 1");
    // product of the roots is (-1)^n * constant for monic p
    mpq_class prod = p.constant();
    if (n % 2 == 1) prod = -prod;
    const double pd = prod.get_d();
    if (options.strict_product_one) {
        if (std::abs(pd - 1.0) > options.tolerance)
            throw ValidationError("strict mode requires the roots to multiply to 1");
    } else {
        if (std::abs(std::abs(pd) - 1.0) > options.tolerance)
            throw ValidationError("roots must multiply to +-1 (constant coefficient of absolute value 1)");
    }
}

} // namespace

const char* to_string(EqualityCase c) {
    switch (c) {
        case EqualityCase::lower_tight: return "lower_tight";
        case EqualityCase::upper_tight: return "upper_tight";
        case EqualityCase::both_tight: return "both_tight";
        default: return "neither";
    }
}

EqualityCase equality_case_from_string(const std::string& s) {
    if (s == "lower_tight") return EqualityCase::lower_tight;
    if (s == "upper_tight") return EqualityCase::upper_tight;
    if (s == "both_tight") return EqualityCase::both_tight;
    if (s == "neither") return EqualityCase::neither;
    throw ValidationError("unknown equality case '" + s + "'");
}

std::pair<double, double> mahler_measure(const RatPolynomial& p, const RootOptions& options) {
    if (p.degree() < 1) throw ValidationError("Mahler measure needs degree >= 1");
    const RootSet rs = find_roots(p, options);
    const double abs_lead = std::abs(p.leading().get_d());
    const MeasureInterval mi = measure_from_roots(rs, abs_lead);
    return {mi.value, std::max(mi.hi - mi.value, mi.value - mi.lo)};
}

std::pair<double, double> mahler_measure(const IntPolynomial& p, const RootOptions& options) {
    return mahler_measure(to_rational(p), options);
}

std::pair<double, double> translation_length(const RatPolynomial& p, const RootOptions& options) {
    if (p.degree() < 1) throw ValidationError("translation length needs degree >= 1");
    if (p.constant() == 0)
        throw ValidationError("translation length rejects a zero constant coefficient (root at 0)");
    const RootSet rs = find_roots(p, options);
    const LengthInterval li = length_from_roots(rs);
    return {li.value, std::max(li.hi - li.value, li.value - li.lo)};
}

std::pair<double, double> translation_length(const IntPolynomial& p, const RootOptions& options) {
    return translation_length(to_rational(p), options);
}

MeasureReport check_bounds(const RatPolynomial& p, const MeasureOptions& options) {
    require_bound_preconditions(p, options);
    const int n = p.degree();
    const RootSet rs = find_roots(p, options.roots);

    MeasureReport rep;
    rep.degree = n;
    rep.inputs_echo = to_comma_string(p);

    const MeasureInterval mi = measure_from_roots(rs, 1.0);
    rep.mahler = mi.value;
    rep.mahler_err = std::max(mi.hi - mi.value, mi.value - mi.lo);
    rep.log_mahler = std::log(mi.value);

    const LengthInterval li = length_from_roots(rs);
    rep.translation_length = li.value;
    rep.length_err = std::max(li.hi - li.value, li.value - li.lo);

    rep.lower_bound = 2.0 * std::sqrt(2.0 / n) * rep.log_mahler;
    rep.upper_bound = 2.0 * rep.log_mahler;

    const double tol = std::max(options.tolerance, 10.0 * max_radius(rs));
    int off_circle = 0;
    double r_max = 0;
    for (const auto& z : rs.roots) r_max = std::max(r_max, std::abs(z));
    bool lower_tight = true;
    for (const auto& z : rs.roots) {
        const double m = std::abs(z);
        if (std::abs(m - 1.0) > tol) ++off_circle;
        if (std::min(std::abs(m - r_max), std::abs(m - 1.0 / r_max)) > tol) lower_tight = false;
    }
    const bool upper_tight = off_circle <= 2;
    if (lower_tight && upper_tight)
        rep.equality_case = EqualityCase::both_tight;
    else if (lower_tight)
        rep.equality_case = EqualityCase::lower_tight;
    else if (upper_tight)
        rep.equality_case = EqualityCase::upper_tight;
    else
        rep.equality_case = EqualityCase::neither;
    return rep;
}

MeasureReport check_bounds(const IntPolynomial& p, const MeasureOptions& options) {
    return check_bounds(to_rational(p), options);
}

const IntPolynomial& lehmer_polynomial() {
    static const IntPolynomial lehmer({mpz_class(1), mpz_class(1), mpz_class(0), mpz_class(-1), mpz_class(-1),
                                       mpz_class(-1), mpz_class(-1), mpz_class(-1), mpz_class(0), mpz_class(1),
                                       mpz_class(1)});
    return lehmer;
}

double lehmer_log_mahler() {
    static const double value = [] {
        RootOptions opts;
        opts.radius_goal = 1e-14;
        return std::log(mahler_measure(lehmer_polynomial(), opts).first);
    }();
    return value;
}

double voutier_bound(long n) {
    if (n < 3) throw ValidationError("the Voutier expression needs n >= 3");
    const double ln = std::log(static_cast<double>(n));
    const double r = std::log(ln) / ln;
    return 0.25 * r * r * r;
}

BoundFunctionValue lower_bound_function(long n) {
    if (n < 2) throw ValidationError("f(n) is defined for n >= 2");
    if (n <= 20) return {n, lehmer_log_mahler(), BoundBranch::lehmer_branch};
    return {n, voutier_bound(n), BoundBranch::voutier_branch};
}

double systole_lower_bound(long n) {
    const BoundFunctionValue f = lower_bound_function(n);
    return 2.0 * std::sqrt(2.0) / std::sqrt(static_cast<double>(n)) * f.value;
}

CorollaryBounds corollary_bounds(const IntPolynomial& p, const MeasureOptions& options) {
    const int n = p.degree();
    if (n < 2) throw ValidationError("the length/discriminant bounds need degree >= 2");
    require_bound_preconditions(to_rational(p), options);

    const double length = poly_length(p).get_d();
    CorollaryBounds out;
    out.length_lower = 2.0 * std::sqrt(2.0 / n) *
                       std::max(0.0, std::log(length) - n * std::log(2.0));
    out.length_upper = 2.0 * std::log(length);

    const mpq_class disc = discriminant(p);
    const double log_disc = log_abs(disc);
    const double log_plus = std::max(0.0, log_disc - n * std::log(static_cast<double>(n)));
    out.disc_lower = std::sqrt(2.0 / n) * log_plus / (n - 1);
    return out;
}

ClassicalInequalities mahler_classical_inequalities(const IntPolynomial& p, const RootOptions& options) {
    const int n = p.degree();
    if (n < 1) throw ValidationError("degree must be >= 1");
    if (p.leading() == 0) throw ValidationError("leading coefficient must be nonzero");

    ClassicalInequalities out;
    out.length = poly_length(p);
    out.disc = discriminant(p);
    const auto [m, merr] = mahler_measure(p, options);
    out.mahler = m;
    out.mahler_err = merr;

    const double length = out.length.get_d();
    const double two_n_m = std::ldexp(m, n);
    const double two_n_m_hi = std::ldexp(m + merr, n);
    out.length_vs_measure_margin = two_n_m - length;
    out.length_vs_measure_holds = length <= two_n_m_hi * (1.0 + 1e-12);

    out.measure_vs_length_margin = length - m;
    out.measure_vs_length_holds = m - merr <= length * (1.0 + 1e-12);

    const double log_disc = log_abs(out.disc);
    const double rhs = n * std::log(static_cast<double>(n)) + (2.0 * n - 2.0) * std::log(m);
    const double rhs_hi = n * std::log(static_cast<double>(n)) + (2.0 * n - 2.0) * std::log(m + merr);
    out.disc_vs_measure_log_margin = rhs - log_disc;
    out.disc_vs_measure_holds = log_disc <= rhs_hi + 1e-9;
    return out;
}

double silverman_disc_bound(long prime_p, double log_mahler) {
    if (prime_p < 3 || prime_p % 2 == 0) throw ValidationError("p must be an odd prime >= 3");
    for (long d = 3; d * d <= prime_p; d += 2)
        if (prime_p % d == 0) throw ValidationError("p must be prime");
    if (log_mahler < 0) throw ValidationError("log Mahler measure must be >= 0");
    const double pd = static_cast<double>(prime_p);
    return 2.0 * pd * (pd - 1.0) * log_mahler + pd * pd * std::log(pd);
}

} // namespace mahler
