#include "mahler/number_field.hpp"

#include <algorithm>
#include <cmath>

#include "mahler/errors.hpp"
#include "mahler/text_formats.hpp"

namespace mahler {

namespace {

// extended Euclid over Q[X]: returns (g, u, v) with u*a + v*b = g
struct EGcd {
    RatPolynomial g, u, v;
};

EGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
    RatPolynomial r0 = a, r1 = b;
    RatPolynomial s0 = RatPolynomial::one(), s1 = RatPolynomial::zero();
    RatPolynomial t0 = RatPolynomial::zero(), t1 = RatPolynomial::one();
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        RatPolynomial s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        RatPolynomial t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    return {r0, s0, t0};
}

std::vector<mpz_class> signed_divisors(const mpz_class& v) {
    std::vector<mpz_class> out;
    const mpz_class a = abs(v);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        mpz_class e = a / d;
        out.push_back(d);
        out.push_back(-d);
        if (e != d) {
            out.push_back(e);
            out.push_back(-e);
        }
    }
    return out;
}

// Kronecker factor search: does p (monic, squarefree, degree n) have a monic
// factor of degree in [1, n/2]? Candidate factors are interpolated through
// divisor choices at the integer nodes 0..d; a candidate with integer Newton
// coefficients at every level is the only kind that can be in Z[X] (falling
// factorials are a Z-basis), which prunes the search hard.
// Returns true when a factor was found, false when provably irreducible;
// sets *budget_exhausted if the node budget ran out.
bool kronecker_has_factor(const IntPolynomial& p, bool* budget_exhausted) {
    *budget_exhausted = false;
    const int n = p.degree();
    if (p.constant() == 0) return n > 1; // X divides

    // degree-1 factors: integer roots divide the constant term
    for (const auto& r : signed_divisors(p.constant()))
        if (p.evaluate(mpz_class(r)) == 0) return true;

    long budget = 5'000'000;
    for (int d = 2; d <= n / 2; ++d) {
        std::vector<std::vector<mpz_class>> divisor_sets;
        bool root_found = false;
        for (int i = 0; i <= d; ++i) {
            mpz_class v = p.evaluate(mpz_class(i));
            if (v == 0) {
                root_found = true; // integer root at i
                break;
            }
            divisor_sets.push_back(signed_divisors(v));
        }
        if (root_found) return true;

        // DFS over divisor choices with incremental divided differences.
        // newton[k] holds [x_{l-k}, ..., x_l] for the current prefix; for the
        // consecutive nodes 0..l the recurrence divides by (l - j).
        std::vector<std::vector<mpq_class>> newton(static_cast<std::size_t>(d) + 1);
        std::vector<std::size_t> choice(static_cast<std::size_t>(d) + 1, 0);
        int level = 0;
        while (level >= 0) {
            if (budget-- <= 0) {
                *budget_exhausted = true;
                return false;
            }
            auto& opts = divisor_sets[static_cast<std::size_t>(level)];
            if (choice[static_cast<std::size_t>(level)] >= opts.size()) {
                choice[static_cast<std::size_t>(level)] = 0;
                --level;
                if (level >= 0) ++choice[static_cast<std::size_t>(level)];
                continue;
            }
            const mpz_class& w = opts[choice[static_cast<std::size_t>(level)]];
            // build the divided-difference column for node `level`
            auto& col = newton[static_cast<std::size_t>(level)];
            col.assign(1, mpq_class(w));
            bool ok = true;
            for (int k = 1; k <= level; ++k) {
                const mpq_class diff = col[static_cast<std::size_t>(k - 1)] -
                                       newton[static_cast<std::size_t>(level - 1)][static_cast<std::size_t>(k - 1)];
                col.push_back(diff / mpq_class(k));
                if (col.back().get_den() != 1) {
                    ok = false;
                    break;
                }
            }
            // a monic (up to sign) degree-d factor has top Newton coefficient +-1
            if (ok && level == d && abs(col.back()) != 1) ok = false;
            if (!ok) {
                ++choice[static_cast<std::size_t>(level)];
                continue;
            }
            if (level < d) {
                ++level;
                continue;
            }
            // full candidate: expand the Newton form and try the division
            RatPolynomial g({newton[0][0]});
            RatPolynomial basis = RatPolynomial::one();
            for (int k = 1; k <= d; ++k) {
                basis = basis * RatPolynomial({mpq_class(1), mpq_class(-(k - 1))});
                g = g + newton[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] * basis;
            }
            if (g.degree() == d) {
                IntPolynomial gz = to_integer(g.leading() < 0 ? -g : g);
                IntPolynomial q;
                if (try_divide_monic(p, gz, &q)) return true;
            }
            ++choice[static_cast<std::size_t>(level)];
        }
    }
    return false;
}

Real128 refine_real_root(const IntPolynomial& p, double seed) {
    const IntPolynomial dp = p.derivative();
    Real128 x(seed);
    for (int it = 0; it < 6; ++it) {
        Real128 v(0), d(0);
        for (const auto& c : p.coeffs()) v = v * x + to_real<128>(c);
        for (const auto& c : dp.coeffs()) d = d * x + to_real<128>(c);
        if (d == 0) break;
        x -= v / d;
    }
    return x;
}

} // namespace

NumberField NumberField::make(const IntPolynomial& min_poly, const RootOptions& options) {
    if (!min_poly.is_monic()) throw ValidationError("minimal polynomial must be monic");
    const int n = min_poly.degree();
    if (n < 1) throw ValidationError("minimal polynomial must have degree >= 1");
    if (!is_squarefree(min_poly)) throw ValidationError("minimal polynomial is not squarefree");

    NumberField f;
    f.min_poly_ = min_poly;
    f.irreducibility_verified_ = true;
    if (n > 1) {
        if (n <= 8) {
            bool budget_exhausted = false;
            if (kronecker_has_factor(min_poly, &budget_exhausted))
                throw ValidationError("minimal polynomial is reducible");
            f.irreducibility_verified_ = !budget_exhausted;
        } else {
            f.irreducibility_verified_ = false; // asserted by caller
        }
    }

    const RootSet rs = find_roots(min_poly, options);
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        if (std::abs(rs.roots[i].imag()) > 10.0 * rs.radii[i] + 1e-13)
            throw ValidationError("minimal polynomial is not totally real");
        f.embeddings_.push_back(refine_real_root(min_poly, rs.roots[i].real()));
    }
    std::sort(f.embeddings_.begin(), f.embeddings_.end());
    return f;
}

std::vector<double> NumberField::embeddings_double() const {
    std::vector<double> out;
    out.reserve(embeddings_.size());
    for (const auto& e : embeddings_) out.push_back(static_cast<double>(e));
    return out;
}

FieldElement NumberField::element(std::vector<mpq_class> coords) const {
    const std::size_t d = static_cast<std::size_t>(degree());
    if (coords.size() > d) {
        // reduce mod the minimal polynomial
        std::vector<mpq_class> desc(coords.rbegin(), coords.rend());
        auto [q, r] = divmod(RatPolynomial(std::move(desc)), to_rational(min_poly_));
        (void)q;
        std::vector<mpq_class> red(d, mpq_class(0));
        for (int k = 0; k <= r.degree(); ++k) red[static_cast<std::size_t>(k)] = r.coefficient(k);
        return {std::move(red)};
    }
    coords.resize(d, mpq_class(0));
    return {std::move(coords)};
}

FieldElement NumberField::rational_element(const mpq_class& q) const {
    std::vector<mpq_class> c(static_cast<std::size_t>(degree()), mpq_class(0));
    c[0] = q;
    return {std::move(c)};
}

FieldElement NumberField::generator() const {
    if (degree() < 2) return rational_element(mpq_class(-min_poly_.constant()));
    std::vector<mpq_class> c(static_cast<std::size_t>(degree()), mpq_class(0));
    c[1] = 1;
    return {std::move(c)};
}

bool NumberField::is_zero(const FieldElement& a) const {
    for (const auto& c : a.coords)
        if (c != 0) return false;
    return true;
}

bool NumberField::is_integral(const FieldElement& a) const {
    for (const auto& c : a.coords)
        if (c.get_den() != 1) return false;
    return true;
}

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

FieldElement NumberField::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
    return out;
}

FieldElement NumberField::neg(const FieldElement& a) const {
    FieldElement out = a;
    for (auto& c : out.coords) c = -c;
    return out;
}

FieldElement NumberField::scalar_mul(const mpq_class& c, const FieldElement& a) const {
    FieldElement out = a;
    for (auto& v : out.coords) v *= c;
    return out;
}

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
    const std::size_t d = static_cast<std::size_t>(degree());
    std::vector<mpq_class> conv(2 * d - 1, mpq_class(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) conv[i + j] += a.coords[i] * b.coords[j];
    }
    return element(std::move(conv));
}

FieldElement NumberField::inverse(const FieldElement& a) const {
    if (is_zero(a)) throw ValidationError("division by zero in the number field");
    std::vector<mpq_class> desc(a.coords.rbegin(), a.coords.rend());
    const EGcd e = extended_gcd(RatPolynomial(std::move(desc)), to_rational(min_poly_));
    if (e.g.degree() != 0)
        throw ValidationError("element is a zero divisor; the minimal polynomial is reducible");
    const mpq_class inv_g = mpq_class(1) / e.g.constant();
    RatPolynomial u = e.u * inv_g;
    std::vector<mpq_class> asc(static_cast<std::size_t>(degree()), mpq_class(0));
    for (int k = 0; k <= u.degree(); ++k) asc[static_cast<std::size_t>(k)] = u.coefficient(k);
    return element(std::move(asc));
}

RatMatrix NumberField::regular_representation(const FieldElement& a) const {
    const int d = degree();
    RatMatrix m(d, d);
    FieldElement col = a;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m(i, j) = col.coords[static_cast<std::size_t>(i)];
        if (j + 1 < d) col = mul(col, generator());
    }
    return m;
}

mpq_class NumberField::norm(const FieldElement& a) const { return exact_determinant(regular_representation(a)); }

double NumberField::embed(const FieldElement& a, int embedding_index) const {
    const Real128& theta = embeddings_.at(static_cast<std::size_t>(embedding_index));
    Real128 acc(0);
    for (std::size_t i = a.coords.size(); i-- > 0;) acc = acc * theta + to_real<128>(a.coords[i]);
    return static_cast<double>(acc);
}

FieldMatrix NumberField::matrix(int dim, std::vector<FieldElement> entries) const {
    if (dim < 1 || entries.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
        throw ValidationError("field matrix needs dim^2 entries");
    return {dim, std::move(entries)};
}

FieldMatrix NumberField::identity_matrix(int dim) const {
    FieldMatrix m{dim, std::vector<FieldElement>(static_cast<std::size_t>(dim * dim), zero())};
    for (int i = 0; i < dim; ++i) m.at(i, i) = one();
    return m;
}

FieldMatrix NumberField::mat_mul(const FieldMatrix& a, const FieldMatrix& b) const {
    if (a.dim != b.dim) throw ValidationError("field matrix dimensions differ");
    FieldMatrix out{a.dim, std::vector<FieldElement>(static_cast<std::size_t>(a.dim * a.dim), zero())};
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            if (is_zero(a.at(i, k))) continue;
            for (int j = 0; j < a.dim; ++j)
                out.at(i, j) = add(out.at(i, j), mul(a.at(i, k), b.at(k, j)));
        }
    return out;
}

FieldElement NumberField::mat_trace(const FieldMatrix& a) const {
    FieldElement t = zero();
    for (int i = 0; i < a.dim; ++i) t = add(t, a.at(i, i));
    return t;
}

FieldElement NumberField::determinant(const FieldMatrix& a) const {
    FieldMatrix m = a;
    FieldElement det = one();
    for (int col = 0; col < m.dim; ++col) {
        int pivot = -1;
        for (int r = col; r < m.dim; ++r)
            if (!is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        if (pivot < 0) return zero();
        if (pivot != col) {
            for (int c = 0; c < m.dim; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = neg(det);
        }
        det = mul(det, m.at(col, col));
        const FieldElement inv = inverse(m.at(col, col));
        for (int r = col + 1; r < m.dim; ++r) {
            if (is_zero(m.at(r, col))) continue;
            const FieldElement f = mul(m.at(r, col), inv);
            for (int c = col; c < m.dim; ++c) m.at(r, c) = sub(m.at(r, c), mul(f, m.at(col, c)));
        }
    }
    return det;
}

std::vector<FieldElement> NumberField::char_poly_field(const FieldMatrix& a) const {
    const int n = a.dim;
    std::vector<FieldElement> power_sums;
    FieldMatrix p = a;
    for (int k = 0; k < n; ++k) {
        if (k > 0) p = mat_mul(p, a);
        power_sums.push_back(mat_trace(p));
    }
    // Newton's identities over k
    std::vector<FieldElement> s;
    s.push_back(one());
    for (int j = 1; j <= n; ++j) {
        FieldElement acc = zero();
        for (int i = 1; i <= j; ++i) {
            FieldElement term = mul(s[static_cast<std::size_t>(j - i)], power_sums[static_cast<std::size_t>(i - 1)]);
            if (i % 2 == 0) term = neg(term);
            acc = add(acc, term);
        }
        s.push_back(scalar_mul(make_rational(1, j), acc));
    }
    std::vector<FieldElement> coeffs; // descending, monic
    for (int j = 0; j <= n; ++j) {
        FieldElement c = s[static_cast<std::size_t>(j)];
        if (j % 2 == 1) c = neg(c);
        coeffs.push_back(c);
    }
    return coeffs;
}

RatMatrix NumberField::iota1(const FieldMatrix& y) const {
    const int d1 = degree(), d2 = y.dim;
    RatMatrix out(d1 * d2, d1 * d2);
    for (int i = 0; i < d2; ++i)
        for (int j = 0; j < d2; ++j) {
            const RatMatrix block = regular_representation(y.at(i, j));
            for (int r = 0; r < d1; ++r)
                for (int c = 0; c < d1; ++c) out(i * d1 + r, j * d1 + c) = block(r, c);
        }
    return out;
}

Polynomial<double> NumberField::iota2_char_poly(const FieldMatrix& y) const {
    const std::vector<FieldElement> cs = char_poly_field(y);
    std::vector<Real128> acc{Real128(1)};
    for (const auto& theta : embeddings_) {
        // sigma applied to each coefficient: evaluate its coordinates at theta
        std::vector<Real128> factor;
        factor.reserve(cs.size());
        for (const auto& c : cs) {
            Real128 v(0);
            for (std::size_t i = c.coords.size(); i-- > 0;) v = v * theta + to_real<128>(c.coords[i]);
            factor.push_back(v);
        }
        std::vector<Real128> next(acc.size() + factor.size() - 1, Real128(0));
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += acc[i] * factor[j];
        acc = std::move(next);
    }
    std::vector<double> out;
    out.reserve(acc.size());
    for (const auto& v : acc) out.push_back(static_cast<double>(v));
    return Polynomial<double>(std::move(out));
}

IntegralityReport NumberField::verify_integrality(const FieldMatrix& y) const {
    IntegralityReport rep;
    rep.char_poly = char_poly_exact(iota1(y));
    for (int k = 0; k <= rep.char_poly.degree(); ++k)
        if (rep.char_poly.coefficient(k).get_den() != 1) rep.fractional_powers.push_back(k);
    rep.pass = rep.fractional_powers.empty();
    return rep;
}

FieldMatrix NumberField::random_sl2(std::mt19937_64& rng, int factors, long coord_height) const {
    std::uniform_int_distribution<long> coord(-coord_height, coord_height);
    std::uniform_int_distribution<int> side(0, 1);
    FieldMatrix m = identity_matrix(2);
    for (int t = 0; t < factors; ++t) {
        std::vector<mpq_class> coords;
        for (int i = 0; i < degree(); ++i) coords.emplace_back(coord(rng));
        const FieldElement e = element(std::move(coords));
        FieldMatrix el = identity_matrix(2);
        if (side(rng))
            el.at(0, 1) = e;
        else
            el.at(1, 0) = e;
        m = mat_mul(m, el);
    }
    return m;
}

} // namespace mahler
