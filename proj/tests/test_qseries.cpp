#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "vvmf/qseries.hpp"

using namespace vvmf;
using vvmf::testing::random_homogeneous;

TEST_SUITE("qseries") {

TEST_CASE("eisenstein expansions") {
    QSeries e4 = eisenstein_e4(6);
    CHECK(e4.coeffs[0] == 1);
    CHECK(e4.coeffs[1] == 240);
    CHECK(e4.coeffs[2] == 2160);  // 240 * sigma_3(2) = 240 * 9
    QSeries e6 = eisenstein_e6(6);
    CHECK(e6.coeffs[0] == 1);
    CHECK(e6.coeffs[1] == -504);
    CHECK(e6.coeffs[2] == -16632);  // -504 * sigma_5(2) = -504 * 33
    CHECK(e4.truncation() == 6);
}

TEST_CASE("E2 pinned by the E4 derivation identity") {
    QSeries e2 = derive_e2(8);
    CHECK(e2.coeffs[0] == 1);
    CHECK(e2.coeffs[1] == -24);
    CHECK(e2.coeffs[2] == -72);
    CHECK(e2.coeffs[3] == -96);
    CHECK(derive_e2(1) == QSeries(std::vector<Rational>{Rational(1)}));
    // The same E2 satisfies the E6 identity it was not solved from:
    // q dE6/dq - (1/2) E2 E6 = -(1/2) E4^2.
    int n = 40;
    QSeries e4 = eisenstein_e4(n), e6 = eisenstein_e6(n);
    QSeries lhs = q_theta(e6) - Rational(1, 2) * (derive_e2(n) * e6);
    CHECK(lhs == Rational(-1, 2) * (e4 * e4));
}

TEST_CASE("serre derivative on generators") {
    int n = 50;
    QSeries e4 = eisenstein_e4(n), e6 = eisenstein_e6(n);
    CHECK(serre_derivative(e4, 4) == Rational(-1, 3) * e6);
    CHECK(serre_derivative(e6, 6) == Rational(-1, 2) * (e4 * e4));
    QSeries one = QSeries::constant(Rational(1), n);
    CHECK(serre_derivative(one, 0) == QSeries::constant(Rational(0), n));
}

TEST_CASE("mixed truncation shortens") {
    QSeries a = eisenstein_e4(10), b = eisenstein_e4(4);
    CHECK((a + b).truncation() == 4);
    CHECK((a * b).truncation() == 4);
    CHECK((a - a).truncation() == 10);
}

TEST_CASE("division inverts multiplication") {
    int n = 30;
    QSeries e4 = eisenstein_e4(n), e6 = eisenstein_e6(n);
    CHECK(qseries_divide(e4 * e6, e4) == e6);
    CHECK_THROWS_AS(qseries_divide(e4, q_theta(e4)), std::domain_error);
}

TEST_CASE("graded substitution is a ring homomorphism") {
    int n = 25;
    GradedPoly e4 = GradedPoly::monomial(1, 0, Rational(1));
    GradedPoly e6 = GradedPoly::monomial(0, 1, Rational(1));
    CHECK(graded_to_qseries(e4, n) == eisenstein_e4(n));
    CHECK(graded_to_qseries(e4 * e6, n) == eisenstein_e4(n) * eisenstein_e6(n));
    CHECK(graded_to_qseries(GradedPoly(), n) == QSeries::constant(Rational(0), n));
    std::mt19937_64 rng(3);
    GradedPoly x = random_homogeneous(20, rng);
    GradedPoly y = random_homogeneous(16, rng);
    CHECK(graded_to_qseries(x * y, n) ==
          graded_to_qseries(x, n) * graded_to_qseries(y, n));
    CHECK(graded_to_qseries(x + x, n) ==
          Rational(2) * graded_to_qseries(x, n));
}

TEST_CASE("the two derivative implementations agree") {
    std::mt19937_64 rng(17);
    int n = 40;
    for (int trial = 0; trial < 30; ++trial) {
        int w = 2 * static_cast<int>(rng() % 19);  // 0..36
        GradedPoly x = random_homogeneous(w, rng);
        QSeries lhs = graded_to_qseries(serre_derive(x), n);
        QSeries rhs = serre_derivative(graded_to_qseries(x, n), w);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("leibniz for the series operator") {
    int n = 35;
    QSeries e4 = eisenstein_e4(n), e6 = eisenstein_e6(n);
    QSeries lhs = serre_derivative(e4 * e6, 10);
    QSeries rhs = serre_derivative(e4, 4) * e6 + e4 * serre_derivative(e6, 6);
    CHECK(lhs == rhs);
}

}  // TEST_SUITE
