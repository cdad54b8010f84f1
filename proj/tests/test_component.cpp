#include <doctest.h>

#include <map>
#include <string>

#include "support/oracles.hpp"
#include "vvmf/component.hpp"
#include "vvmf/euler.hpp"

using namespace vvmf;
using vvmf::testing::chi_series_oracle;

namespace {

ComponentParams comp(Parity parity, int a, int b, int x, int y, int z) {
    ComponentParams p;
    p.parity = parity;
    p.a = a;
    p.b = b;
    p.x = x;
    p.y = y;
    p.z = z;
    return p;
}

ChiContext trivial_context() {
    TraceData t{Cyc12(Rational(1)), Cyc12(Rational(1)), Cyc12(Rational(1))};
    return make_chi_context(1, t, 0, 0);
}

}  // namespace

TEST_SUITE("component") {

TEST_CASE("component counts") {
    CHECK(enumerate_components(1).size() == 12);   // 2 * 2 * 3
    CHECK(enumerate_components(2).size() == 36);   // 2 * 3 * 6
    for (int d = 1; d <= 6; ++d) {
        auto cs = enumerate_components(d);
        CHECK(static_cast<long>(cs.size()) ==
              2L * (d + 1) * ((d + 1) * (d + 2) / 2));
        for (const auto& c : cs) {
            CHECK(c.a + c.b == d);
            CHECK(c.x + c.y + c.z == d);
        }
    }
}

TEST_CASE("trace values") {
    Cyc12 one(Rational(1));
    Cyc12 zeta = cyc12_from_root(4);
    Cyc12 zeta_sq = cyc12_from_root(8);
    Cyc12 i = cyc12_from_root(3);

    TraceData t = traces_of(comp(Parity::Even, 1, 0, 1, 0, 0));
    CHECK(t.s == one);
    CHECK(t.r1 == one);
    CHECK(t.r2 == one);

    t = traces_of(comp(Parity::Even, 0, 1, 0, 1, 0));
    CHECK(t.s == -one);
    CHECK(t.r1 == zeta);
    CHECK(t.r2 == zeta_sq);

    t = traces_of(comp(Parity::Odd, 1, 0, 1, 0, 0));
    CHECK(t.s == i);
    CHECK(t.r1 == -one);
    CHECK(t.r2 == one);
}

TEST_CASE("conjugation symmetry of r1 and r2") {
    for (int d = 1; d <= 6; ++d)
        for (const auto& c : enumerate_components(d)) {
            ComponentParams swapped = c;
            std::swap(swapped.y, swapped.z);
            TraceData tc = traces_of(c), ts = traces_of(swapped);
            if (c.parity == Parity::Even)
                CHECK(tc.r2 == ts.r1);
            else
                CHECK(tc.r2 == -ts.r1);
        }
}

TEST_CASE("trace injectivity within a parity") {
    for (int d = 1; d <= 10; ++d) {
        std::map<std::string, ComponentParams> seen;
        for (const auto& c : enumerate_components(d)) {
            TraceData t = traces_of(c);
            std::string key = parity_name(c.parity);
            key += "|" + cyc12_str(t.s) + "|" + cyc12_str(t.r1) + "|" +
                   cyc12_str(t.r2);
            auto [it, fresh] = seen.emplace(key, c);
            CHECK(fresh);
        }
    }
}

TEST_CASE("trace of L candidates") {
    CHECK(trace_l_candidates(comp(Parity::Even, 1, 0, 1, 0, 0)) ==
          std::vector<int>{0});
    // Odd d=1: det S = i, det R = -1, so det T = -1/i = i = zeta12^3.
    CHECK(trace_l_candidates(comp(Parity::Odd, 1, 0, 1, 0, 0)) ==
          std::vector<int>{3});
    CHECK(trace_l_candidates(comp(Parity::Even, 2, 0, 2, 0, 0)) ==
          (std::vector<int>{0, 12}));
}

TEST_CASE("determinant consistency for every emitted trace") {
    for (int d = 1; d <= 6; ++d)
        for (const auto& c : enumerate_components(d)) {
            Cyc12 det_s, det_r;
            if (c.parity == Parity::Even) {
                det_s = cyc12_from_root(6L * c.b);
                det_r = cyc12_from_root(4L * c.y + 8L * c.z);
            } else {
                det_s = cyc12_from_root(3L * c.a + 9L * c.b);
                det_r = cyc12_from_root(6L * c.x + 10L * c.y + 2L * c.z);
            }
            for (int trl : trace_l_candidates(c)) {
                CHECK(trl >= 0);
                CHECK(trl < 12 * d);
                CHECK(cyc12_from_root(trl % 12) * det_s == det_r);
            }
        }
}

TEST_CASE("middle range") {
    MiddleRange m = middle_range(12, 0, Parity::Even);
    CHECK(m.ell_list == (std::vector<int>{-10, -8, -6, -4, -2, 0}));
    CHECK(m.ell_one == -10);

    m = middle_range(6, 36, Parity::Even);
    CHECK(m.ell_list.empty());
    CHECK(m.ell_one == 2);

    m = middle_range(1, 0, Parity::Even);
    CHECK(m.ell_list.empty());
    CHECK(m.ell_one == 0);

    m = middle_range(12, 0, Parity::Odd);
    CHECK(m.ell_list == (std::vector<int>{-11, -9, -7, -5, -3, -1, 1}));
    CHECK(m.ell_one == -11);
}

TEST_CASE("euler characteristic of the trivial data") {
    ChiContext ctx = trivial_context();
    CHECK(euler_coefficient(ctx, 0) == 1);   // weight 0
    CHECK(euler_coefficient(ctx, 1) == 0);   // weight 2
    CHECK(euler_coefficient(ctx, 6) == 2);   // weight 12
    // Matches the level-one dimension ladder through weight 20.
    std::vector<long> dims{1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2};
    for (size_t n = 0; n < dims.size(); ++n)
        CHECK(euler_coefficient(ctx, static_cast<int>(n)) == dims[n]);
}

TEST_CASE("closed form equals the series expansion") {
    ChiContext ctx = trivial_context();
    auto series = chi_series_oracle(ctx, 17);
    for (int n = 0; n <= 16; ++n)
        CHECK(series[static_cast<size_t>(n)] == euler_coefficient_cyc(ctx, n));
}

TEST_CASE("p polynomial on the trivial data") {
    IntPoly P = p_polynomial(trivial_context());
    CHECK(P == IntPoly(std::vector<Int>{Int(1)}));
}

TEST_CASE("p polynomial on d=2 contexts") {
    IntPoly one_plus_t2(std::vector<Int>{Int(1), Int(0), Int(1)});
    int survivors = 0;
    for (const auto& c : enumerate_components(2)) {
        TraceData t = traces_of(c);
        for (int trl : trace_l_candidates(c)) {
            MiddleRange m = middle_range(2, trl, c.parity);
            ChiContext ctx = make_chi_context(2, t, trl, m.ell_one);
            IntPoly P;
            try {
                P = p_polynomial(ctx);
            } catch (const NonIntegralChi&) {
                continue;
            }
            ++survivors;
            CHECK(poly_eval_one(P) == 2);
            if (c.parity == Parity::Even && c.a == 2 && c.x == 2 && trl == 0) {
                CHECK(P == IntPoly(std::vector<Int>{Int(2)}));
            }
        }
    }
    CHECK(survivors > 0);
}

TEST_CASE("dimension trichotomy") {
    ChiContext ctx = trivial_context();
    MiddleRange m = middle_range(1, 0, Parity::Even);
    DimensionAnswer below = dimension_M(ctx, m, -2);
    REQUIRE(below.value.has_value());
    CHECK(*below.value == 0);
    CHECK(!below.unknown_index.has_value());

    DimensionAnswer at0 = dimension_M(ctx, m, 0);
    REQUIRE(at0.value.has_value());
    CHECK(*at0.value == 1);

    // d=12 trivial-sum component: -10 lies inside the middle range, so the
    // answer stays symbolic (chi + a_1) unless a cusp dimension is supplied.
    TraceData t12{Cyc12(Rational(12)), Cyc12(Rational(12)), Cyc12(Rational(12))};
    MiddleRange m12 = middle_range(12, 0, Parity::Even);
    ChiContext ctx12 = make_chi_context(12, t12, 0, m12.ell_one);
    DimensionAnswer mid = dimension_M(ctx12, m12, -10);
    CHECK(!mid.value.has_value());
    REQUIRE(mid.unknown_index.has_value());
    CHECK(*mid.unknown_index == 0);

    DimensionAnswer pinned = dimension_M(ctx12, m12, -10, Int(0));
    CHECK(pinned.value.has_value());
}

}  // TEST_SUITE
