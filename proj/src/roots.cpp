#include "mahler/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "mahler/errors.hpp"
#include "mahler/precision.hpp"

namespace mahler {

namespace {

struct CertifiedRoot {
    std::complex<double> z;
    double radius;
};

// One Horner pass evaluating p and p' together.
template <typename C>
void horner_pair(const std::vector<C>& coeffs, const C& z, C* value, C* derivative) {
    C s = coeffs[0];
    C q(0);
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        q = q * z + s;
        s = s * z + coeffs[k];
    }
    *value = s;
    *derivative = q;
}

// Horner with an a posteriori rounding bound: |computed - exact| <= err,
// where err also absorbs the rounding of the exact rational coefficients
// into the working precision.
template <unsigned Bits>
void horner_certified(const std::vector<ComplexOf<Bits>>& coeffs, const std::vector<RealOf<Bits>>& abs_coeffs,
                      const ComplexOf<Bits>& z, ComplexOf<Bits>* value, RealOf<Bits>* err) {
    using R = RealOf<Bits>;
    const R az = abs(z);
    ComplexOf<Bits> s = coeffs[0];
    R mu = abs_coeffs[0];
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        s = s * z + coeffs[k];
        mu = mu * az + abs_coeffs[k];
    }
    const R eps = std::numeric_limits<R>::epsilon();
    *value = s;
    *err = mu * eps * R(4 * coeffs.size() + 8);
}

double fujiwara_bound(const RatPolynomial& monic) {
    const int n = monic.degree();
    double best = 0.0;
    for (int k = 1; k <= n; ++k) {
        double ck = std::abs(monic.coeffs()[static_cast<std::size_t>(k)].get_d());
        if (k == n) ck *= 0.5;
        if (ck == 0.0) continue;
        best = std::max(best, std::pow(ck, 1.0 / k));
    }
    return best > 0.0 ? 2.0 * best : 1.0;
}

// Aberth-Ehrlich on a square-free monic polynomial at one working precision.
// Returns false when certification misses the radius goal (caller escalates).
template <unsigned Bits>
bool solve_squarefree(const RatPolynomial& f, double radius_goal, std::vector<CertifiedRoot>* out) {
    using R = RealOf<Bits>;
    using C = ComplexOf<Bits>;
    const int n = f.degree();

    std::vector<C> coeffs, dcoeffs;
    std::vector<R> abs_coeffs, abs_dcoeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (const auto& c : f.coeffs()) {
        R v = to_real<Bits>(c);
        coeffs.emplace_back(v, R(0));
        abs_coeffs.push_back(abs(v));
    }
    const RatPolynomial fd = f.derivative();
    dcoeffs.reserve(static_cast<std::size_t>(n));
    for (const auto& c : fd.coeffs()) {
        R v = to_real<Bits>(c);
        dcoeffs.emplace_back(v, R(0));
        abs_dcoeffs.push_back(abs(v));
    }

    // seeds on a staggered circle around the Fujiwara bound
    const double bound = fujiwara_bound(f);
    std::vector<C> z(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * 3.14159265358979323846 * (j + 0.26) / n + 0.4;
        const double rj = bound * (0.55 + 0.5 * (j + 0.5) / n);
        z[static_cast<std::size_t>(j)] = C(R(rj * std::cos(theta)), R(rj * std::sin(theta)));
    }

    const R stop = ldexp(R(1), -static_cast<int>(Bits) + 8);
    const int max_iters = 600;
    for (int it = 0; it < max_iters; ++it) {
        R max_step(0);
        for (int i = 0; i < n; ++i) {
            C val, der;
            horner_pair(coeffs, z[static_cast<std::size_t>(i)], &val, &der);
            if (abs(val) == 0) continue; // landed exactly on a root
            if (abs(der) == 0) {
                z[static_cast<std::size_t>(i)] += C(R(1e-3 * (bound + 1.0) * (i + 1) / n), R(1e-3 * (bound + 1.0)));
                max_step = R(1);
                continue;
            }
            const C newton = val / der;
            C sum(0);
            bool collision = false;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const C diff = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
                if (abs(diff) == 0) {
                    collision = true;
                    break;
                }
                sum += C(R(1), R(0)) / diff;
            }
            if (collision) {
                z[static_cast<std::size_t>(i)] += C(R(1e-4 * (bound + 1.0)), R(3e-4 * (bound + 1.0) * (i + 1)));
                max_step = R(1);
                continue;
            }
            const C denom = C(R(1), R(0)) - newton * sum;
            const C w = (abs(denom) == 0) ? newton : newton / denom;
            z[static_cast<std::size_t>(i)] -= w;
            const R rel = abs(w) / (R(1) + abs(z[static_cast<std::size_t>(i)]));
            if (rel > max_step) max_step = rel;
        }
        if (max_step < stop) break;
    }

    // Newton polish
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < 2; ++k) {
            C val, der;
            horner_pair(coeffs, z[static_cast<std::size_t>(i)], &val, &der);
            if (abs(der) == 0 || abs(val) == 0) break;
            z[static_cast<std::size_t>(i)] -= val / der;
        }
    }

    // a posteriori certification against the exact polynomial
    out->clear();
    out->reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        C val, der;
        R val_err, der_err;
        horner_certified<Bits>(coeffs, abs_coeffs, z[static_cast<std::size_t>(i)], &val, &val_err);
        horner_certified<Bits>(dcoeffs, abs_dcoeffs, z[static_cast<std::size_t>(i)], &der, &der_err);
        const R der_abs = abs(der);
        if (der_abs <= der_err) return false;
        const R radius = R(n) * (abs(val) + val_err) / (der_abs - der_err);
        const double zr = static_cast<double>(real(z[static_cast<std::size_t>(i)]));
        const double zi = static_cast<double>(imag(z[static_cast<std::size_t>(i)]));
        const double zmag = std::hypot(zr, zi);
        // slop for rounding the center to double precision
        double rad = static_cast<double>(radius) * (1.0 + 1e-9) + zmag * 0x1p-51 + 1e-300;
        if (!(rad <= radius_goal)) return false;
        out->push_back({{zr, zi}, rad});
    }
    return true;
}

std::vector<CertifiedRoot> solve_with_escalation(const RatPolynomial& f, const RootOptions& options) {
    std::vector<CertifiedRoot> roots;
    const auto rung_at_least = [](unsigned v) {
        for (unsigned b = 64; b <= 1024; b *= 2)
            if (b >= v) return b;
        return 1024u;
    };
    const unsigned first = rung_at_least(std::max(64u, std::min(options.precision_bits, 1024u)));
    const unsigned limit = rung_at_least(std::max(first, std::min(options.max_precision_bits, 1024u)));
    for (unsigned bits = first; bits <= limit; bits *= 2) {
        bool ok = false;
        switch (bits) {
            case 64: ok = solve_squarefree<64>(f, options.radius_goal, &roots); break;
            case 128: ok = solve_squarefree<128>(f, options.radius_goal, &roots); break;
            case 256: ok = solve_squarefree<256>(f, options.radius_goal, &roots); break;
            case 512: ok = solve_squarefree<512>(f, options.radius_goal, &roots); break;
            default: ok = solve_squarefree<1024>(f, options.radius_goal, &roots); break;
        }
        if (ok) return roots;
    }
    throw PrecisionExhausted("root certification failed at maximum working precision (" +
                             std::to_string(limit) + " bits)");
}

} // namespace

RootSet find_roots(const RatPolynomial& p, const RootOptions& options) {
    if (p.degree() < 1) throw ValidationError("root finding needs degree >= 1");
    if (p.leading() == 0) throw ValidationError("leading coefficient must be nonzero");
    RootSet rs;
    rs.source_degree = p.degree();

    RatPolynomial q = make_monic(p);
    // exact zero roots
    int zero_mult = 0;
    while (q.degree() > 0 && q.constant() == 0) {
        std::vector<mpq_class> c(q.coeffs().begin(), q.coeffs().end() - 1);
        q = RatPolynomial(std::move(c));
        ++zero_mult;
    }
    for (int i = 0; i < zero_mult; ++i) {
        rs.roots.emplace_back(0.0, 0.0);
        rs.radii.push_back(0.0);
    }
    if (q.degree() == 0) return rs;

    // exact square-free decomposition; iterate only on simple roots
    const std::vector<RatPolynomial> factors = squarefree_decomposition(q);
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
        const RatPolynomial& f = factors[fi];
        if (f.degree() < 1) continue;
        const std::vector<CertifiedRoot> roots = solve_with_escalation(f, options);
        const int multiplicity = static_cast<int>(fi) + 1;
        for (const auto& r : roots) {
            for (int m = 0; m < multiplicity; ++m) {
                rs.roots.push_back(r.z);
                rs.radii.push_back(r.radius);
            }
        }
    }
    return rs;
}

RootSet find_roots(const IntPolynomial& p, const RootOptions& options) {
    return find_roots(to_rational(p), options);
}

std::vector<std::pair<double, double>> moduli(const RootSet& rs) {
    std::vector<std::pair<double, double>> out;
    out.reserve(rs.roots.size());
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        out.emplace_back(std::abs(rs.roots[i]), rs.radii[i]);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

} // namespace mahler
