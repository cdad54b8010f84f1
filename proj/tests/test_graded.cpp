#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "vvmf/errors.hpp"
#include "vvmf/graded.hpp"

using namespace vvmf;
using vvmf::testing::random_homogeneous;

namespace {

GradedPoly E4() { return GradedPoly::monomial(1, 0, Rational(1)); }
GradedPoly E6() { return GradedPoly::monomial(0, 1, Rational(1)); }

}  // namespace

TEST_SUITE("graded") {

TEST_CASE("ring arithmetic") {
    GradedPoly p = E4() * E6();
    CHECK(p == GradedPoly::monomial(1, 1, Rational(1)));
    CHECK(p.weight() == 10);

    CHECK((E4() + GradedPoly()) * GradedPoly() == GradedPoly());

    GradedPoly q = (Rational(2) * E4()) * (Rational(3) * (E4() * E4()));
    CHECK(q == GradedPoly::monomial(3, 0, Rational(6)));
    CHECK(q.weight() == 12);

    // Cancellation erases the slot entirely.
    GradedPoly z = E4() - E4();
    CHECK(z.is_zero());
    CHECK(z.terms.empty());
}

TEST_CASE("declared weight bookkeeping") {
    GradedPoly z;
    z.set_declared_weight(8);
    CHECK(z.weight() == 8);
    CHECK(z.homogeneous());
    CHECK_THROWS_AS(
        [] {
            GradedPoly p = E4();
            p.set_declared_weight(6);
        }(),
        WeightMismatch);
    GradedPoly mixed = E4() + E6();
    CHECK(!mixed.homogeneous());
    CHECK(!mixed.weight().has_value());
}

TEST_CASE("derivation on generators") {
    CHECK(serre_derive(E4()) == Rational(-1, 3) * E6());
    CHECK(serre_derive(E6()) == Rational(-1, 2) * (E4() * E4()));
    // Leibniz on E4 E6.
    GradedPoly want = Rational(-1, 3) * (E6() * E6()) +
                      Rational(-1, 2) * (E4() * E4() * E4());
    CHECK(serre_derive(E4() * E6()) == want);
    CHECK_THROWS_AS(serre_derive(E4() + E6()), WeightMismatch);
    // Zero with a declared weight maps to zero one weight up.
    GradedPoly z;
    z.set_declared_weight(4);
    GradedPoly dz = serre_derive(z);
    CHECK(dz.is_zero());
    CHECK(dz.weight() == 6);
}

TEST_CASE("derivation properties") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int wx = 4 + 2 * static_cast<int>(rng() % 12);
        int wy = 4 + 2 * static_cast<int>(rng() % 12);
        if (wx == 2 || wy == 2) continue;
        GradedPoly x = random_homogeneous(wx, rng);
        GradedPoly y = random_homogeneous(wy, rng);
        GradedPoly xy = x * y;
        xy.set_declared_weight(wx + wy);
        CHECK(serre_derive(xy) == serre_derive(x) * y + x * serre_derive(y));
        if (!x.is_zero()) CHECK(serre_derive(x).weight() == wx + 2);
    }
}

TEST_CASE("e6 degree") {
    GradedPoly e4cubed = E4() * E4() * E4();
    CHECK(e6_degree(e4cubed) == 0);
    CHECK(e6_degree(E4() * E6() * E6()) == 2);
    CHECK(e6_degree(GradedPoly()) == kE6DegreeNegInf);
    // d(serre_derive(E4^a E6^b)) <= b+1 with equality iff a >= 1.
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            GradedPoly m = GradedPoly::monomial(a, b, Rational(5));
            int db = e6_degree(serre_derive(m));
            if (a >= 1)
                CHECK(db == b + 1);
            else
                CHECK(db <= b + 1);
        }
}

TEST_CASE("weight basis") {
    CHECK(weight_basis(0) == std::vector<std::pair<int, int>>{{0, 0}});
    CHECK(weight_basis(2).empty());
    CHECK(weight_basis(12) == std::vector<std::pair<int, int>>{{3, 0}, {0, 2}});
    CHECK(weight_basis(-4).empty());
    CHECK(weight_basis(7).empty());
    // e6 ascending, all weights correct.
    for (int k = 0; k <= 40; k += 2) {
        auto basis = weight_basis(k);
        for (size_t i = 0; i < basis.size(); ++i) {
            CHECK(4 * basis[i].first + 6 * basis[i].second == k);
            if (i > 0) CHECK(basis[i - 1].second < basis[i].second);
        }
    }
}

}  // TEST_SUITE
