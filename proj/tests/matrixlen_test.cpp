#include <doctest.h>

#include <cmath>
#include <random>

#include "mahler/errors.hpp"
#include "mahler/matrix_length.hpp"
#include "mahler/text_formats.hpp"

using namespace mahler;

namespace {
Eigen::MatrixXd m2(double a, double b, double c, double d) {
    Eigen::MatrixXd m(2, 2);
    m << a, b, c, d;
    return m;
}

IntPolynomial ip(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}
} // namespace

TEST_CASE("exact characteristic polynomials of real matrices") {
    CHECK(char_poly(m2(0, 2, 1, 0)) == to_rational(ip({1, 0, -2})));
    CHECK(char_poly(m2(3, 4, 2, 3)) == to_rational(ip({1, -6, 1})));
    CHECK(char_poly(Eigen::MatrixXd::Identity(3, 3)) == to_rational(ip({1, -3, 3, -1})));
    // diag(2, 1/2) -> X^2 - (5/2)X + 1, exactly (0.5 is dyadic)
    CHECK(char_poly(m2(2, 0, 0, 0.5)) ==
          RatPolynomial({mpq_class(1), make_rational(-5, 2), mpq_class(1)}));
}

TEST_CASE("exact rational determinant and char poly agree") {
    RatMatrix m(3, 3);
    m << mpq_class(1), make_rational(1, 2), mpq_class(0),
         mpq_class(2), mpq_class(1), mpq_class(3),
         mpq_class(0), make_rational(-1, 3), mpq_class(1);
    const mpq_class det = exact_determinant(m);
    const RatPolynomial cp = char_poly_exact(m);
    // det = (-1)^n * constant coefficient
    mpq_class c0 = cp.constant();
    if (m.rows() % 2 == 1) c0 = -c0;
    CHECK(det == c0);
}

TEST_CASE("semisimplicity certificates") {
    const SemisimpleCertificate diag = check_semisimple(m2(2, 0, 0, 0.5));
    CHECK(diag.is_semisimple);
    CHECK(diag.min_geometric_defect == 0);

    const SemisimpleCertificate jordan = check_semisimple(m2(1, 1, 0, 1));
    CHECK_FALSE(jordan.is_semisimple);
    CHECK(jordan.min_geometric_defect == 1);

    const double c = std::cos(3.14159265358979 / 4), s = std::sin(3.14159265358979 / 4);
    const SemisimpleCertificate rot = check_semisimple(m2(c, -s, s, c));
    CHECK(rot.is_semisimple);

    CHECK_THROWS_AS(check_semisimple(Eigen::MatrixXd(2, 3)), ValidationError);
}

TEST_CASE("translation length of matrices") {
    const double e = std::exp(1.0);
    const auto [v1, e1] = translation_length_matrix(m2(e, 0, 0, 1 / e));
    CHECK(v1 == doctest::Approx(2.0).epsilon(1e-12));

    Eigen::MatrixXd d3 = Eigen::MatrixXd::Zero(3, 3);
    d3(0, 0) = 2;
    d3(1, 1) = 2;
    d3(2, 2) = 0.25;
    const auto [v2, e2] = translation_length_matrix(d3);
    CHECK(v2 == doctest::Approx(2.401132267705887).epsilon(1e-12)); // sqrt(12) log 2

    const double c = std::cos(0.7), s = std::sin(0.7);
    const auto [v3, e3] = translation_length_matrix(m2(c, -s, s, c));
    CHECK(v3 == doctest::Approx(0.0).epsilon(1e-10));

    CHECK_THROWS_AS(translation_length_matrix(m2(1, 1, 0, 1)), ValidationError);  // not semisimple
    CHECK_THROWS_AS(translation_length_matrix(m2(2, 0, 0, 2)), ValidationError);  // det far from 1
    // det = -1 passes relaxed, fails strict
    CHECK(translation_length_matrix(m2(2, 0, 0, -0.5)).first == doctest::Approx(2 * std::log(2.0)));
    CHECK_THROWS_AS(translation_length_matrix(m2(2, 0, 0, -0.5), 1e-6, true), ValidationError);
}

TEST_CASE("verify_theorem_a on the pinned examples") {
    const TheoremAReport diag = verify_theorem_a(m2(2, 0, 0, 0.5));
    CHECK(diag.report.equality_case == EqualityCase::both_tight);
    CHECK(diag.matrix_length == doctest::Approx(2 * std::log(2.0)).epsilon(1e-12));
    CHECK(diag.cross_check_gap <= 1e-10);

    const TheoremAReport lehmer = verify_theorem_a(companion_matrix(lehmer_polynomial()));
    CHECK(lehmer.report.equality_case == EqualityCase::upper_tight);
    CHECK(lehmer.matrix_length == doctest::Approx(2 * lehmer_log_mahler()).epsilon(1e-9));
    CHECK(lehmer.cross_check_gap <= 1e-8);

    Eigen::MatrixXd d4 = Eigen::MatrixXd::Zero(4, 4);
    d4(0, 0) = 3;
    d4(1, 1) = 3;
    d4(2, 2) = 1.0 / 3.0;
    d4(3, 3) = 1.0 / 3.0;
    const TheoremAReport spread = verify_theorem_a(d4);
    CHECK(spread.report.equality_case == EqualityCase::lower_tight);
    CHECK(spread.matrix_length == doctest::Approx(2 * std::sqrt(2.0) * std::log(3.0)).epsilon(1e-10));
}

TEST_CASE("companion matrix realizes the polynomial") {
    const IntPolynomial p = ip({1, -3, 1});
    CHECK(char_poly(companion_matrix(p)) == to_rational(p));
    CHECK(char_poly_exact(companion_matrix_exact(lehmer_polynomial())) == to_rational(lehmer_polynomial()));
}

TEST_CASE("translation length invariances") {
    std::mt19937_64 rng(777001);
    for (int i = 0; i < 25; ++i) {
        const int n = 2 + (i % 5);
        const SemisimpleSample s = random_semisimple_sl(n, rng);
        const auto [len, err] = translation_length_matrix(s.approx);

        // l(x) = l(x^-1)
        const auto [len_inv, err_inv] = translation_length_matrix(s.approx.inverse());
        CHECK(std::abs(len - len_inv) <= 1e-8);

        // l(g x g^-1) = l(x) for a mild conjugator
        Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
        std::uniform_real_distribution<double> small(-0.5, 0.5);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (r != c) g(r, c) = small(rng);
        const Eigen::MatrixXd conj = g * s.approx * g.inverse();
        const auto [len_conj, err_conj] = translation_length_matrix(conj);
        CHECK(std::abs(len - len_conj) <= 1e-7);
    }

    // l(x^k) = |k| l(x) for diagonal x
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
    d(0, 0) = 2;
    d(1, 1) = 3;
    d(2, 2) = 1.0 / 6.0;
    const double l1 = translation_length_matrix(d).first;
    const double l3 = translation_length_matrix((d * d * d).eval()).first;
    CHECK(l3 == doctest::Approx(3.0 * l1).epsilon(1e-10));
}

TEST_CASE("matrix-side and polynomial-side lengths agree on random samples") {
    std::mt19937_64 rng(424243);
    int checked = 0;
    for (int i = 0; i < 120; ++i) {
        const int n = 2 + (i % 9);
        const SemisimpleSample s = random_semisimple_sl(n, rng);
        const TheoremAReport rep = verify_theorem_a(s.approx);
        CHECK(rep.cross_check_gap <= 1e-8);
        const double slack = rep.report.length_err + rep.matrix_length_err +
                             2.0 * rep.report.mahler_err / std::max(rep.report.mahler - rep.report.mahler_err, 0.5) +
                             1e-12;
        CHECK(rep.report.lower_bound <= rep.matrix_length + slack);
        CHECK(rep.matrix_length <= rep.report.upper_bound + slack);
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("random SL_n samples have determinant exactly one") {
    std::mt19937_64 rng(314159);
    for (int i = 0; i < 30; ++i) {
        const SemisimpleSample s = random_semisimple_sl(2 + (i % 9), rng);
        CHECK(exact_determinant(s.exact) == 1);
        const RatPolynomial cp = char_poly_exact(s.exact);
        mpq_class c0 = cp.constant();
        if (cp.degree() % 2 == 1) c0 = -c0;
        CHECK(c0 == 1);
    }
}

TEST_CASE("matrix text parsing") {
    const Eigen::MatrixXd m = parse_real_matrix("3,4;2,3");
    CHECK(m.rows() == 2);
    CHECK(m(0, 1) == 4);
    const Eigen::MatrixXd j = parse_real_matrix("[[3,4],[2,3]]");
    CHECK((m - j).norm() == 0.0);
    CHECK_THROWS_AS(parse_real_matrix("3,4;2"), ValidationError);
    CHECK_THROWS_AS(parse_real_matrix("3,x;2,3"), ValidationError);
    CHECK_THROWS_AS(parse_real_matrix(""), ValidationError);
}
