#include <doctest.h>

#include <random>

#include "mahler/cyclotomic.hpp"
#include "mahler/errors.hpp"
#include "mahler/newton_identities.hpp"
#include "mahler/polynomial.hpp"
#include "mahler/subresultant.hpp"
#include "mahler/text_formats.hpp"

using namespace mahler;

namespace {
IntPolynomial ip(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

std::vector<mpq_class> rats(std::initializer_list<long> cs) {
    std::vector<mpq_class> v;
    for (long c : cs) v.emplace_back(c);
    return v;
}

IntPolynomial random_poly(std::mt19937_64& rng, int max_deg, int height, bool monic) {
    std::uniform_int_distribution<int> deg_dist(1, max_deg), coeff_dist(-height, height);
    const int d = deg_dist(rng);
    std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
    do {
        c[0] = monic ? 1 : coeff_dist(rng);
    } while (c[0] == 0);
    for (int k = 1; k <= d; ++k) c[static_cast<std::size_t>(k)] = coeff_dist(rng);
    return IntPolynomial(std::move(c));
}
} // namespace

TEST_CASE("polynomial basics and arithmetic") {
    const IntPolynomial p = ip({1, 0, -3, 1}); // X^3 - 3X + 1
    CHECK(p.degree() == 3);
    CHECK(p.is_monic());
    CHECK(p.coefficient(3) == 1);
    CHECK(p.coefficient(1) == -3);
    CHECK(p.coefficient(7) == 0);
    CHECK(p.evaluate(mpz_class(2)) == 3);

    CHECK(IntPolynomial({mpz_class(0), mpz_class(0), mpz_class(5)}).degree() == 0); // leading zeros stripped
    CHECK(IntPolynomial::zero().is_zero());

    const IntPolynomial a = ip({1, -1}), b = ip({1, -3, 1});
    CHECK(a * b == ip({1, -4, 4, -1}));
    CHECK(a + b == ip({1, -2, 0}));
    CHECK(b - b == IntPolynomial::zero());
    CHECK(p.derivative() == ip({3, 0, -3}));
    CHECK(ip({1, 2, 3}).reversed() == ip({3, 2, 1}));
}

TEST_CASE("division, gcd, squarefree decomposition") {
    const RatPolynomial a = to_rational(ip({1, -4, 4, -1}));
    const RatPolynomial b = to_rational(ip({1, -1}));
    const auto [q, r] = divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == to_rational(ip({1, -3, 1})));

    IntPolynomial quo;
    CHECK(try_divide_monic(ip({1, -4, 4, -1}), ip({1, -3, 1}), &quo));
    CHECK(quo == ip({1, -1}));
    CHECK_FALSE(try_divide_monic(ip({1, 0, 1}), ip({1, -1}), nullptr));

    CHECK(gcd(ip({1, -2, 1}), ip({1, -1})) == ip({1, -1}));
    CHECK(gcd(ip({1, 0, 1}), ip({1, -1})).is_constant());
    CHECK(gcd(ip({2, -2}), ip({4, -4})) == ip({2, -2}));

    // (X-1)^2 (X^2-3X+1)
    const IntPolynomial f = ip({1, -1}) * ip({1, -1}) * ip({1, -3, 1});
    const auto factors = squarefree_decomposition(to_rational(f));
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == to_rational(ip({1, -3, 1})));
    CHECK(factors[1] == to_rational(ip({1, -1})));
    CHECK_FALSE(is_squarefree(f));
    CHECK(is_squarefree(ip({1, -3, 1})));
}

TEST_CASE("newton identities: elementary symmetric from power sums") {
    CHECK(elementary_symmetric_from_power_sums(rats({3, 7})) == rats({3, 1}));
    CHECK(elementary_symmetric_from_power_sums(rats({0, 0, 0})) == rats({0, 0, 0}));
    CHECK(elementary_symmetric_from_power_sums(rats({2, 2})) == rats({2, 1}));
    CHECK_THROWS_AS(elementary_symmetric_from_power_sums({}), ValidationError);
}

TEST_CASE("newton identities: power sums from coefficients") {
    CHECK(power_sums_from_coeffs(ip({1, -3, 1}), 2) == rats({3, 7}));
    CHECK(power_sums_from_coeffs(ip({1, 0, 0, -1}), 3) == rats({0, 0, 3}));
    CHECK(power_sums_from_coeffs(ip({1, -2, 1}), 2) == rats({2, 2}));
    CHECK_THROWS_AS(power_sums_from_coeffs(ip({2, -3, 1}), 2), ValidationError); // non-monic
}

TEST_CASE("newton round trip is exact on random polynomials") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        const IntPolynomial p = random_poly(rng, 12, 10, true);
        const auto sums = power_sums_from_coeffs(p, p.degree());
        CHECK(monic_from_power_sums(sums) == to_rational(p));
    }
}

TEST_CASE("poly_length") {
    CHECK(poly_length(ip({1, -3, 1})) == 5);
    CHECK(poly_length(parse_int_polynomial("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1")) == 9);
    CHECK(poly_length(ip({1, -1})) == 2);
}

TEST_CASE("discriminant: pinned values") {
    CHECK(discriminant(ip({1, -3, 1})) == 5);
    CHECK(discriminant(ip({1, -2, 1})) == 0);
    CHECK(discriminant(ip({1, -1, -2, 1})) == 49);
    CHECK(discriminant(ip({1, 0, -3, 1})) == 81);
    CHECK_THROWS_AS(discriminant(ip({5})), ValidationError);

    // cross-checked against an independent computer algebra system
    CHECK(discriminant(ip({2, -5, 2})) == 9);
    CHECK(discriminant(ip({1, 0, 0, -1, 1})) == 229);
    CHECK(discriminant(ip({3, 1, -4, 1})) == 321);
    CHECK(discriminant(ip({-5, 3, -8, -7, 8})) == mpq_class(-40401071));
    CHECK(discriminant(ip({2, 9, -8})) == 145);
    CHECK(discriminant(ip({-3, -8, -7, 4, 4, -7, -2})) == mpq_class("44899850097"));
    CHECK(discriminant(ip({8, 4, -8})) == 272);
    CHECK(discriminant(ip({9, -6, -2, 9, -8, 9, 9, 3, -8})) == mpq_class("-2186774418051605708496"));
    CHECK(discriminant(ip({-8, 8, -5, 0})) == -2400);
    CHECK(discriminant(ip({-5, 8, -6, 9, 0, 8})) == mpq_class("7463451744"));
    CHECK(discriminant(ip({-4, -6, 9, 9, -3, 2, -6, 8, -7})) == mpq_class("-547849750926914956"));
    CHECK(discriminant(parse_int_polynomial("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1")) == mpq_class("1332031009"));
}

TEST_CASE("resultant: pinned values") {
    CHECK(resultant(ip({3, -3, 1, 4, 2, 0}), ip({6, -1})) == -3477);
    CHECK(resultant(ip({1, -1, -2, -3, 6}), ip({-4, 5, 6, -3, -5, 3})) == -245784);
    CHECK(resultant(ip({1, -1, 5, 1}), ip({-2, 3, -5, -5, 2, 0})) == 2631);
    CHECK(resultant(ip({-4, 1, 0}), ip({-6, 4, -5, 6})) == -1884);
    CHECK(resultant(ip({6, -1, -1, 5, -1, 3}), ip({1, 3, 6, 1, -5, -5})) == mpz_class("-280055709"));
}

TEST_CASE("discriminant vanishes exactly on repeated factors") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 60; ++i) {
        const IntPolynomial p = random_poly(rng, 6, 5, false);
        if (p.degree() < 1) continue;
        const bool disc_zero = discriminant(p) == 0;
        const bool gcd_nonconstant = !gcd(p, p.derivative()).is_constant();
        CHECK(disc_zero == gcd_nonconstant);
    }
    // forced repeated factor
    const IntPolynomial sq = ip({1, -1}) * ip({1, -1}) * ip({3, 1});
    CHECK(discriminant(sq) == 0);
}

TEST_CASE("discriminant is multiplicative up to the resultant squared") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const IntPolynomial p = random_poly(rng, 4, 4, false);
        const IntPolynomial q = random_poly(rng, 4, 4, false);
        if (p.degree() < 1 || q.degree() < 1) continue;
        const mpz_class res = resultant(p, q);
        CHECK(discriminant(p * q) == discriminant(p) * discriminant(q) * mpq_class(res * res));
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == ip({1, -1}));
    CHECK(cyclotomic_polynomial(2) == ip({1, 1}));
    CHECK(cyclotomic_polynomial(4) == ip({1, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == ip({1, 0, -1, 0, 1}));
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(97) == 96);
}

TEST_CASE("cyclotomic split") {
    const auto c12 = cyclotomic_part(ip({1, 0, -1, 0, 1}));
    CHECK(c12.cyclotomic == ip({1, 0, -1, 0, 1}));
    CHECK(c12.noncyclotomic == IntPolynomial::one());

    const IntPolynomial lehmer = parse_int_polynomial("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
    const auto cl = cyclotomic_part(lehmer);
    CHECK(cl.cyclotomic == IntPolynomial::one());
    CHECK(cl.noncyclotomic == lehmer);

    const auto mix = cyclotomic_part(ip({1, -4, 4, -1})); // (X-1)(X^2-3X+1)
    CHECK(mix.cyclotomic == ip({1, -1}));
    CHECK(mix.noncyclotomic == ip({1, -3, 1}));

    // multiplicity: (X-1)^2 (X+1)
    const auto rep = cyclotomic_part(ip({1, -1}) * ip({1, -1}) * ip({1, 1}));
    CHECK(rep.noncyclotomic == IntPolynomial::one());
    CHECK(rep.cyclotomic == ip({1, -1}) * ip({1, -1}) * ip({1, 1}));

    CHECK_THROWS_AS(cyclotomic_part(ip({2, -2})), ValidationError);
}

TEST_CASE("cyclotomic split multiplies back exactly on random products") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) {
        IntPolynomial p = random_poly(rng, 5, 3, true);
        if (std::uniform_int_distribution<int>(0, 1)(rng)) p = p * cyclotomic_polynomial(1 + (i % 8));
        const auto split = cyclotomic_part(p);
        CHECK(split.cyclotomic * split.noncyclotomic == p);
    }
}

TEST_CASE("polynomial text formats") {
    CHECK(to_comma_string(ip({1, 0, -3, 1})) == "1,0,-3,1");
    CHECK(parse_int_polynomial("1,0,-3,1") == ip({1, 0, -3, 1}));
    CHECK(parse_int_polynomial(" 1 , 0 , -3 , 1 ") == ip({1, 0, -3, 1}));
    CHECK(parse_int_polynomial("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1") ==
          ip({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}));
    CHECK(parse_int_polynomial("x^2 - 3x + 1") == ip({1, -3, 1}));
    CHECK(parse_int_polynomial("-x^2+2") == ip({-1, 0, 2}));
    CHECK(parse_int_polynomial("7") == ip({7}));
    CHECK(to_human_string(ip({1, -3, 1})) == "x^2 - 3x + 1");

    CHECK_THROWS_WITH_AS(parse_int_polynomial("1,0,a,1"), doctest::Contains("'a'"), ValidationError);
    CHECK_THROWS_AS(parse_int_polynomial("x^"), ValidationError);
    CHECK_THROWS_AS(parse_int_polynomial("x2"), ValidationError); // powers need '^'
    CHECK_THROWS_AS(parse_int_polynomial(""), ValidationError);
    CHECK_THROWS_AS(parse_int_polynomial("1,,2"), ValidationError);

    CHECK(parse_rat_polynomial("1,-5/2,1") == RatPolynomial({mpq_class(1), make_rational(-5, 2), mpq_class(1)}));
}
