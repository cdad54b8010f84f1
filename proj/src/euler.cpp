#include "vvmf/euler.hpp"

#include <array>
#include <string>

namespace vvmf {

namespace {

// Smallest integer of the given parity >= num/den (exact).
int parity_ceil(const Int& num, const Int& den, Parity parity) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    long v = q.get_si();
    int want = parity == Parity::Even ? 0 : 1;
    if (((v % 2) + 2) % 2 != want) ++v;
    return static_cast<int>(v);
}

// Largest integer of the given parity <= num/den (exact).
int parity_floor(const Int& num, const Int& den, Parity parity) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    long v = q.get_si();
    int want = parity == Parity::Even ? 0 : 1;
    if (((v % 2) + 2) % 2 != want) --v;
    return static_cast<int>(v);
}

}  // namespace

MiddleRange middle_range(int d, int twelve_trL, Parity parity) {
    MiddleRange m;
    // Bounds 12TrL/d + 1 - d and 12TrL/d + d - 11 as exact fractions over d.
    Int lo_num = Int(twelve_trL) + Int(d) * (1 - d);
    Int hi_num = Int(twelve_trL) + Int(d) * (d - 11);
    m.ell_one = parity_ceil(lo_num, Int(d), parity);
    int hi = parity_floor(hi_num, Int(d), parity);
    for (int l = m.ell_one; l <= hi; l += 2) m.ell_list.push_back(l);
    return m;
}

namespace {

// z^k for k = 0..11, built once.
const Cyc12& root_table(long k) {
    static const std::array<Cyc12, 12> table = [] {
        std::array<Cyc12, 12> t;
        for (int j = 0; j < 12; ++j) t[j] = cyc12_from_root(j);
        return t;
    }();
    long m = k % 12;
    if (m < 0) m += 12;
    return table[m];
}

}  // namespace

ChiContext make_chi_context(int d, const TraceData& traces, int twelve_trL,
                            int ell_one) {
    // 1/(3(1-zeta3)) and 1/(3(1-zeta3^2)) do not depend on the context.
    static const Cyc12 inv_denom1 =
        cyc12_inverse(Rational(3) * (Cyc12(Rational(1)) - cyc12_from_root(4)));
    static const Cyc12 inv_denom2 =
        cyc12_inverse(Rational(3) * (Cyc12(Rational(1)) - cyc12_from_root(8)));
    ChiContext ctx;
    ctx.d = d;
    ctx.traces = traces;
    ctx.twelve_trL = twelve_trL;
    ctx.ell_one = ell_one;
    ctx.c1 = Cyc12(make_rational(5L * d - twelve_trL, 12));
    ctx.c2 = make_rational(1, 4) * traces.s;
    ctx.c3 = traces.r1 * inv_denom1;
    ctx.c4 = traces.r2 * inv_denom2;
    ctx.c5 = Cyc12(make_rational(d, 12));
    const long l1 = ell_one;
    ctx.c2r = ctx.c2 * root_table(3 * l1);
    ctx.c3r = ctx.c3 * root_table(2 * l1);
    ctx.c4r = ctx.c4 * root_table(4 * l1);
    return ctx;
}

Cyc12 euler_coefficient_cyc(const ChiContext& ctx, int n) {
    long k = ctx.ell_one + 2L * n;
    Cyc12 v = ctx.c1 + Rational(k) * ctx.c5;
    // i^l1 (-1)^n = zeta12^(3 l1 + 6 n), and the l1 parts live in c2r..c4r.
    v = n % 2 == 0 ? v + ctx.c2r : v - ctx.c2r;
    v = v + ctx.c3r * root_table(4L * n);
    v = v + ctx.c4r * root_table(8L * n);
    return v;
}

Int euler_coefficient(const ChiContext& ctx, int n) {
    Cyc12 v = euler_coefficient_cyc(ctx, n);
    auto z = cyc12_as_integer(v);
    if (!z)
        throw NonIntegralChi("chi(V_{" + std::to_string(ctx.ell_one + 2 * n) +
                             "}) = " + cyc12_str(v) + " is not an integer");
    return *z;
}

CycPoly p_polynomial_cyc(const ChiContext& ctx) {
    // The polynomial factors multiplying each closed-form term are fixed;
    // only the five scalars vary with the context. Build the factors once.
    struct Basis {
        CycPoly b1, b2, b3, b4, lin_const, lin_t2;
    };
    static const Basis basis = [] {
        const Cyc12 one(Rational(1));
        CycPoly t2_plus({one, Cyc12(), one});                      // 1 + T^2
        CycPoly t2_minus({one, Cyc12(), -one});                    // 1 - T^2
        CycPoly t4_minus({one, Cyc12(), Cyc12(), Cyc12(), -one});  // 1 - T^4
        CycPoly t6_minus(
            {one, Cyc12(), Cyc12(), Cyc12(), Cyc12(), Cyc12(), -one});
        CycPoly t24({one, Cyc12(), one, Cyc12(), one});        // 1 + T^2 + T^4
        const Cyc12 zeta = cyc12_from_root(4);
        const Cyc12 zeta2 = cyc12_from_root(8);
        CycPoly zeta2_t2({one, Cyc12(), -zeta2});              // 1 - zeta^2 T^2
        CycPoly zeta_t2({one, Cyc12(), -zeta});                // 1 - zeta T^2
        Basis b;
        b.b1 = t2_plus * t6_minus;
        b.b2 = t2_minus * t6_minus;
        b.b3 = t4_minus * t2_minus * zeta2_t2;
        b.b4 = t4_minus * t2_minus * zeta_t2;
        b.lin_const = t2_plus * t24;
        // T^2 * lin_const, the coefficient of -(l1-2) in lin * t2_plus * t24.
        std::vector<Cyc12> shifted(b.lin_const.a.size() + 2);
        for (size_t k = 0; k < b.lin_const.a.size(); ++k)
            shifted[k + 2] = b.lin_const.a[k];
        b.lin_t2 = CycPoly(std::move(shifted));
        return b;
    }();
    const long l1 = ctx.ell_one;
    CycPoly p = ctx.c1 * basis.b1;
    p = p + ctx.c2r * basis.b2;
    p = p + ctx.c3r * basis.b3;
    p = p + ctx.c4r * basis.b4;
    Cyc12 head = Rational(l1) * ctx.c5;
    Cyc12 tail = Rational(-(l1 - 2)) * ctx.c5;
    p = p + head * basis.lin_const + tail * basis.lin_t2;
    return p;
}

IntPoly p_polynomial(const ChiContext& ctx) {
    CycPoly p = p_polynomial_cyc(ctx);
    std::vector<Int> coeffs(p.a.size());
    for (size_t k = 0; k < p.a.size(); ++k) {
        auto z = cyc12_as_integer(p.a[k]);
        if (!z)
            throw NonIntegralChi("P coefficient at T^" + std::to_string(k) +
                                 " = " + cyc12_str(p.a[k]) +
                                 " is not an integer");
        coeffs[k] = *z;
    }
    IntPoly out(std::move(coeffs));
    if (out.degree() > 8)
        throw InternalInconsistency("P has degree " +
                                    std::to_string(out.degree()));
    for (int k = 1; k <= out.degree(); k += 2)
        if (out.coeff(k) != 0)
            throw InternalInconsistency("P has an odd-degree term");
    if (poly_eval_one(out) != ctx.d)
        throw InternalInconsistency("P(1) != d");
    return out;
}

DimensionAnswer dimension_M(const ChiContext& ctx, const MiddleRange& middle,
                            int k, std::optional<Int> cusp_dim) {
    DimensionAnswer ans;
    const Int d(ctx.d);
    // k < 12TrL/d + 1 - d  <=>  d*k < twelve_trL + d(1-d)
    Int lo_num = Int(ctx.twelve_trL) + d * (1 - ctx.d);
    Int hi_num = Int(ctx.twelve_trL) + d * (ctx.d - 11);
    Int dk = d * k;
    if (dk < lo_num) {
        ans.value = Int(0);
        return ans;
    }
    int n2 = k - ctx.ell_one;
    if (n2 < 0 || n2 % 2 != 0)
        throw InternalInconsistency("dimension_M: k off the parity grid");
    Int chi = euler_coefficient(ctx, n2 / 2);
    ans.chi = chi;
    if (dk > hi_num) {
        ans.value = chi;
        return ans;
    }
    if (cusp_dim) {
        ans.value = chi + *cusp_dim;
        return ans;
    }
    for (size_t j = 0; j < middle.ell_list.size(); ++j)
        if (middle.ell_list[j] == k) {
            ans.unknown_index = static_cast<int>(j);
            break;
        }
    if (!ans.unknown_index)
        throw InternalInconsistency("dimension_M: middle k not in ell_list");
    return ans;
}

}  // namespace vvmf
