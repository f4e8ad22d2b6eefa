#include <doctest.h>

#include <algorithm>
#include <complex>
#include <random>

#include "mahler/errors.hpp"
#include "mahler/roots.hpp"
#include "mahler/text_formats.hpp"

using namespace mahler;

namespace {
IntPolynomial ip(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

// reconstruct the monic polynomial from the computed roots and compare
double reconstruction_gap(const IntPolynomial& p, const RootSet& rs) {
    std::vector<std::complex<double>> coeffs{1.0};
    for (const auto& r : rs.roots) {
        std::vector<std::complex<double>> next(coeffs.size() + 1, 0.0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += coeffs[i];
            next[i + 1] -= coeffs[i] * r;
        }
        coeffs = std::move(next);
    }
    const double lead = p.leading().get_d();
    double gap = 0, scale = 1;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const double want = p.coeffs()[i].get_d() / lead;
        gap = std::max(gap, std::abs(coeffs[i] - want));
        scale = std::max(scale, std::abs(want));
    }
    return gap / scale;
}
} // namespace

TEST_CASE("quadratic roots against the closed form") {
    const RootSet rs = find_roots(ip({1, -3, 1}));
    REQUIRE(rs.roots.size() == 2);
    auto mods = moduli(rs);
    CHECK(mods[0].first == doctest::Approx(2.6180339887498949).epsilon(1e-12));
    CHECK(mods[1].first == doctest::Approx(0.3819660112501051).epsilon(1e-12));
    CHECK(mods[0].second <= 1e-12);
    CHECK(mods[1].second <= 1e-12);
    CHECK(rs.source_degree == 2);
}

TEST_CASE("cyclotomic roots sit on the unit circle") {
    const RootSet rs = find_roots(ip({1, 0, -1, 0, 1}));
    REQUIRE(rs.roots.size() == 4);
    for (const auto& z : rs.roots) CHECK(std::abs(std::abs(z) - 1.0) <= 1e-12);
}

TEST_CASE("Lehmer polynomial root structure") {
    const IntPolynomial lehmer = parse_int_polynomial("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
    const RootSet rs = find_roots(lehmer);
    REQUIRE(rs.roots.size() == 10);
    const auto mods = moduli(rs);
    CHECK(mods[0].first == doctest::Approx(1.1762808182599175).epsilon(1e-10));
    for (std::size_t i = 1; i + 1 < mods.size(); ++i) CHECK(std::abs(mods[i].first - 1.0) <= 1e-9);
    CHECK(mods.back().first == doctest::Approx(1.0 / 1.1762808182599175).epsilon(1e-10));
    int above = 0;
    for (const auto& [m, err] : mods)
        if (m > 1.0 + 1e-9) ++above;
    CHECK(above == 1);
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(find_roots(ip({5})), ValidationError);
    const RootSet one = find_roots(ip({1, -1}));
    REQUIRE(one.roots.size() == 1);
    CHECK(moduli(one)[0].first == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("multiple roots are recovered exactly via the square-free part") {
    const IntPolynomial q = ip({1, -3, 1});
    const RootSet rs = find_roots(q * q);
    REQUIRE(rs.roots.size() == 4);
    auto mods = moduli(rs);
    CHECK(mods[0].first == doctest::Approx(2.6180339887498949).epsilon(1e-11));
    CHECK(mods[1].first == doctest::Approx(2.6180339887498949).epsilon(1e-11));

    const RootSet cubed = find_roots(ip({1, -1}) * ip({1, -1}) * ip({1, -1}));
    REQUIRE(cubed.roots.size() == 3);
    for (const auto& z : cubed.roots) CHECK(std::abs(z - 1.0) <= 1e-12);
}

TEST_CASE("zero roots are exact") {
    const RootSet rs = find_roots(ip({1, 0, -1, 0})); // X(X-1)(X+1)
    REQUIRE(rs.roots.size() == 3);
    int zeros = 0;
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        if (rs.roots[i] == std::complex<double>(0, 0)) {
            ++zeros;
            CHECK(rs.radii[i] == 0.0);
        }
    CHECK(zeros == 1);
}

TEST_CASE("random polynomials: reconstruction, conjugate pairing, root sums") {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<int> deg_dist(2, 9), coeff_dist(-8, 8);
    for (int i = 0; i < 40; ++i) {
        const int d = deg_dist(rng);
        std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
        do {
            c[0] = coeff_dist(rng);
        } while (c[0] == 0);
        for (int k = 1; k <= d; ++k) c[static_cast<std::size_t>(k)] = coeff_dist(rng);
        const IntPolynomial p(std::move(c));
        const RootSet rs = find_roots(p);
        REQUIRE(static_cast<int>(rs.roots.size()) == p.degree());

        CHECK(reconstruction_gap(p, rs) <= 1e-8);

        // conjugate pairing
        for (std::size_t a = 0; a < rs.roots.size(); ++a) {
            if (std::abs(rs.roots[a].imag()) <= 2 * rs.radii[a] + 1e-14) continue;
            const std::complex<double> conj_a = std::conj(rs.roots[a]);
            double best = 1e300;
            for (std::size_t b = 0; b < rs.roots.size(); ++b)
                best = std::min(best, std::abs(rs.roots[b] - conj_a));
            CHECK(best <= 2 * rs.radii[a] + 1e-10);
        }

        // sum of roots = -c1/c0
        std::complex<double> sum(0, 0);
        double acc_rad = 1e-12;
        for (std::size_t a = 0; a < rs.roots.size(); ++a) {
            sum += rs.roots[a];
            acc_rad += rs.radii[a];
        }
        const double want = -mpq_class(p.coefficient(p.degree() - 1), p.leading()).get_d();
        CHECK(std::abs(sum.real() - want) <= acc_rad + 1e-9);
        CHECK(std::abs(sum.imag()) <= acc_rad + 1e-9);

        // product of roots = (-1)^n c_0 / lead
        std::complex<double> prod(1, 0);
        for (const auto& z : rs.roots) prod *= z;
        double want_prod = mpq_class(p.constant(), p.leading()).get_d();
        if (p.degree() % 2 == 1) want_prod = -want_prod;
        CHECK(std::abs(prod.real() - want_prod) <= 1e-6 * std::max(1.0, std::abs(want_prod)));
    }
}

TEST_CASE("large height stays certified at default precision") {
    // degree 12, coefficients up to 10^6
    const IntPolynomial p = ip({1, -999983, 31415, -123456, 654321, 1, -1000000, 999999, -31337, 42, -7, 1000003});
    const RootSet rs = find_roots(p);
    for (double r : rs.radii) CHECK(r <= 1e-10);
    CHECK(reconstruction_gap(p, rs) <= 1e-8);
}

TEST_CASE("moduli are sorted descending with propagated errors") {
    const RootSet rs = find_roots(ip({1, 0, -3, 1}));
    const auto mods = moduli(rs);
    REQUIRE(mods.size() == 3);
    CHECK(mods[0].first >= mods[1].first);
    CHECK(mods[1].first >= mods[2].first);
}
