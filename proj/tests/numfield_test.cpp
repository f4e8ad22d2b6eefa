#include <doctest.h>

#include <cmath>
#include <random>

#include "mahler/errors.hpp"
#include "mahler/number_field.hpp"
#include "mahler/text_formats.hpp"

using namespace mahler;

namespace {
IntPolynomial ip(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

FieldElement el(const NumberField& f, std::initializer_list<long> coords) {
    std::vector<mpq_class> c;
    for (long v : coords) c.emplace_back(v);
    return f.element(std::move(c));
}
} // namespace

TEST_CASE("field construction: the three shipped fields") {
    const NumberField sqrt2 = NumberField::make(ip({1, 0, -2}));
    CHECK(sqrt2.degree() == 2);
    CHECK(sqrt2.irreducibility_verified());
    const auto e2 = sqrt2.embeddings_double();
    CHECK(e2[0] == doctest::Approx(-1.4142135623730951).epsilon(1e-14));
    CHECK(e2[1] == doctest::Approx(1.4142135623730951).epsilon(1e-14));

    const NumberField golden = NumberField::make(ip({1, -1, -1}));
    CHECK(golden.embeddings_double()[1] == doctest::Approx(1.618033988749895).epsilon(1e-14));

    const NumberField cubic = NumberField::make(ip({1, -1, -2, 1}));
    CHECK(cubic.degree() == 3);
    const auto e3 = cubic.embeddings_double();
    CHECK(e3[0] == doctest::Approx(-1.2469796037174670).epsilon(1e-13));
    CHECK(e3[1] == doctest::Approx(0.4450418679126288).epsilon(1e-13));
    CHECK(e3[2] == doctest::Approx(1.8019377358048383).epsilon(1e-13));
}

TEST_CASE("field construction: rejections") {
    CHECK_THROWS_AS(NumberField::make(ip({1, 0, 1})), ValidationError);      // not totally real
    CHECK_THROWS_AS(NumberField::make(ip({2, 0, -2})), ValidationError);     // not monic
    CHECK_THROWS_AS(NumberField::make(ip({1, -2, 1})), ValidationError);     // not squarefree
    CHECK_THROWS_AS(NumberField::make(ip({1, 0, -4})), ValidationError);     // reducible (X-2)(X+2)
    CHECK_THROWS_AS(NumberField::make(ip({1, -4, 4, -1})), ValidationError); // reducible cubic
    // reducible with no rational root: (X^2-2)(X^2-3)
    CHECK_THROWS_AS(NumberField::make(ip({1, 0, -5, 0, 6})), ValidationError);
}

TEST_CASE("element arithmetic in Q(sqrt2)") {
    const NumberField f = NumberField::make(ip({1, 0, -2}));
    const FieldElement theta = f.generator();
    const FieldElement a = el(f, {3, 2}); // 3 + 2 sqrt2
    CHECK(f.mul(theta, theta) == f.rational_element(2));
    CHECK(f.mul(a, f.inverse(a)) == f.one());
    CHECK(f.add(a, f.neg(a)) == f.zero());
    CHECK(f.is_integral(a));
    CHECK_FALSE(f.is_integral(f.element({make_rational(1, 2), mpq_class(1)})));
    CHECK_THROWS_AS(f.inverse(f.zero()), ValidationError);

    // norm(3 + 2 sqrt2) = 9 - 8 = 1
    CHECK(f.norm(a) == 1);
    CHECK(f.norm(theta) == -2);
    // numeric embedding of 3 + 2 sqrt2 under the positive square root
    CHECK(f.embed(a, 1) == doctest::Approx(3 + 2 * 1.4142135623730951).epsilon(1e-14));
}

TEST_CASE("regular representation") {
    const NumberField f = NumberField::make(ip({1, 0, -2}));
    const RatMatrix reg_theta = f.regular_representation(f.generator());
    CHECK(reg_theta(0, 0) == 0);
    CHECK(reg_theta(0, 1) == 2);
    CHECK(reg_theta(1, 0) == 1);
    CHECK(reg_theta(1, 1) == 0);

    const RatMatrix reg_a = f.regular_representation(el(f, {3, 2}));
    CHECK(reg_a(0, 0) == 3);
    CHECK(reg_a(0, 1) == 4);
    CHECK(reg_a(1, 0) == 2);
    CHECK(reg_a(1, 1) == 3);

    const RatMatrix reg_one = f.regular_representation(f.one());
    CHECK(reg_one(0, 0) == 1);
    CHECK(reg_one(0, 1) == 0);

    // ring homomorphism, exactly
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int i = 0; i < 25; ++i) {
        const FieldElement x = el(f, {c(rng), c(rng)});
        const FieldElement y = el(f, {c(rng), c(rng)});
        CHECK(f.regular_representation(f.mul(x, y)) ==
              (f.regular_representation(x) * f.regular_representation(y)).eval());
        CHECK(f.regular_representation(f.add(x, y)) ==
              (f.regular_representation(x) + f.regular_representation(y)).eval());
    }
}

TEST_CASE("char_poly_exact on pinned matrices") {
    RatMatrix m(2, 2);
    m << mpq_class(3), mpq_class(4), mpq_class(2), mpq_class(3);
    CHECK(char_poly_exact(m) == to_rational(ip({1, -6, 1})));
    CHECK(char_poly_exact(rat_identity(4)) == to_rational(ip({1, -4, 6, -4, 1})));
    RatMatrix r(2, 2);
    r << mpq_class(0), mpq_class(2), mpq_class(1), mpq_class(0);
    CHECK(char_poly_exact(r) == to_rational(ip({1, 0, -2})));
}

TEST_CASE("iota1 block structure and homomorphism") {
    const NumberField f = NumberField::make(ip({1, 0, -2}));

    // d2 = 1: iota1 is the regular representation itself
    FieldMatrix y1 = f.matrix(1, {el(f, {3, 2})});
    const RatMatrix m1 = f.iota1(y1);
    CHECK(m1.rows() == 2);
    CHECK(m1(0, 0) == 3);
    CHECK(m1(0, 1) == 4);

    // identity maps to the identity of size d1 d2
    const RatMatrix id = f.iota1(f.identity_matrix(2));
    CHECK(id == rat_identity(4));

    // [[1, sqrt2], [0, 1]] -> [[I2, Reg(sqrt2)], [0, I2]]
    FieldMatrix u = f.identity_matrix(2);
    u.at(0, 1) = f.generator();
    const RatMatrix mu = f.iota1(u);
    CHECK(mu(0, 2) == 0);
    CHECK(mu(0, 3) == 2);
    CHECK(mu(1, 2) == 1);
    CHECK(mu(1, 3) == 0);
    CHECK(mu(2, 2) == 1);
    CHECK(mu(0, 0) == 1);

    // iota1(y z) = iota1(y) iota1(z) exactly, over the cubic field too
    std::mt19937_64 rng(5);
    for (const char* fp : {"1,0,-2", "1,-1,-2,1"}) {
        const NumberField field = NumberField::make(parse_int_polynomial(fp));
        for (int i = 0; i < 10; ++i) {
            const FieldMatrix y = field.random_sl2(rng, 4, 2);
            const FieldMatrix z = field.random_sl2(rng, 4, 2);
            const RatMatrix lhs = field.iota1(field.mat_mul(y, z));
            const RatMatrix rhs = (field.iota1(y) * field.iota1(z)).eval();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("iota2 char poly matches the exact side") {
    std::mt19937_64 rng(6);
    for (const char* fp : {"1,0,-2", "1,-1,-1", "1,-1,-2,1"}) {
        const NumberField field = NumberField::make(parse_int_polynomial(fp));
        // d2 = 1 pinned case: y = 3 + 2 theta over Q(sqrt2) -> X^2 - 6X + 1
        if (std::string(fp) == "1,0,-2") {
            FieldMatrix y = field.matrix(1, {el(field, {3, 2})});
            const Polynomial<double> num = field.iota2_char_poly(y);
            CHECK(num.degree() == 2);
            CHECK(num.coefficient(1) == doctest::Approx(-6.0).epsilon(1e-12));
            CHECK(num.coefficient(0) == doctest::Approx(1.0).epsilon(1e-12));
        }
        for (int i = 0; i < 10; ++i) {
            const FieldMatrix y = field.random_sl2(rng, 5, 2);
            const RatPolynomial exact = char_poly_exact(field.iota1(y));
            const Polynomial<double> numeric = field.iota2_char_poly(y);
            REQUIRE(numeric.degree() == exact.degree());
            for (int k = 0; k <= exact.degree(); ++k)
                CHECK(std::abs(exact.coefficient(k).get_d() - numeric.coefficient(k)) <=
                      1e-8 * std::max(1.0, std::abs(exact.coefficient(k).get_d())));
        }
    }
}

TEST_CASE("integrality verification") {
    const NumberField f = NumberField::make(ip({1, 0, -2}));

    const IntegralityReport unit = f.verify_integrality(f.matrix(1, {el(f, {3, 2})}));
    CHECK(unit.pass);
    CHECK(unit.char_poly == to_rational(ip({1, -6, 1})));

    // (1/2)(1 + sqrt2) is not an algebraic integer here
    const IntegralityReport frac =
        f.verify_integrality(f.matrix(1, {f.element({make_rational(1, 2), make_rational(1, 2)})}));
    CHECK_FALSE(frac.pass);
    CHECK_FALSE(frac.fractional_powers.empty());

    const IntegralityReport id = f.verify_integrality(f.identity_matrix(2));
    CHECK(id.pass);
}

TEST_CASE("prop 3.2 style check and norm compatibility on random SL2 elements") {
    std::mt19937_64 rng(7);
    for (const char* fp : {"1,0,-2", "1,-1,-1", "1,-1,-2,1"}) {
        const NumberField field = NumberField::make(parse_int_polynomial(fp));
        for (int i = 0; i < 25; ++i) {
            const FieldMatrix y = field.random_sl2(rng, 6, 2);
            // determinant over k is exactly 1 by construction
            CHECK(field.determinant(y) == field.one());
            // hence det iota1(y) = N(det y) = 1
            CHECK(exact_determinant(field.iota1(y)) == 1);
            const IntegralityReport rep = field.verify_integrality(y);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("char_poly_field round-trips through the regular representation") {
    // for d2 = 1, char poly over k of (a) is X - a; iota1 gives the min poly of a over Q
    const NumberField f = NumberField::make(ip({1, -1, -2, 1}));
    const FieldElement theta = f.generator();
    const auto cs = f.char_poly_field(f.matrix(1, {theta}));
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == f.one());
    CHECK(cs[1] == f.neg(theta));
    // char poly of iota1(theta) is the minimal polynomial itself
    CHECK(char_poly_exact(f.iota1(f.matrix(1, {theta}))) == to_rational(f.min_poly()));
}

TEST_CASE("degree > 8 fields carry the asserted-irreducibility flag") {
    // X^9 - 2 is Eisenstein-irreducible but not totally real, so use a
    // degree-9 totally real one: the minimal polynomial of 2cos(2pi/19)
    const IntPolynomial cos19 = ip({1, 1, -8, -7, 21, 15, -20, -10, 5, 1});
    const NumberField f = NumberField::make(cos19);
    CHECK(f.degree() == 9);
    CHECK_FALSE(f.irreducibility_verified());
}
