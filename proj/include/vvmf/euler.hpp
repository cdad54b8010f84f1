#pragma once

#include <optional>
#include <vector>

#include "vvmf/component.hpp"
#include "vvmf/errors.hpp"
#include "vvmf/poly.hpp"

namespace vvmf {

// Admissible middle-range weights: parity-matching integers in
// [12TrL/d + 1 - d, 12TrL/d + d - 11]. ell_one is the series base point,
// the smallest parity-matching integer >= the lower bound; it equals
// ell_list[0] when the list is nonempty and is the minimal possible profile
// weight otherwise.
struct MiddleRange {
    std::vector<int> ell_list;
    int ell_one = 0;
    int r() const { return static_cast<int>(ell_list.size()); }
};

MiddleRange middle_range(int d, int twelve_trL, Parity parity);

// Everything needed to evaluate the Euler characteristic series
// chi(V_{ell_one + 2n}) in closed form.
struct ChiContext {
    int d = 0;
    TraceData traces;
    int twelve_trL = 0;
    int ell_one = 0;
    // c1 + c5*(l1+2n) + c2*i^l1*(-1)^n + c3*xi^l1*zeta3^n + c4*zeta3^l1*zeta3^2n
    Cyc12 c1, c2, c3, c4, c5;
    // c2..c4 with the fixed l1 root powers folded in; only the n-dependent
    // root remains to be applied per coefficient.
    Cyc12 c2r, c3r, c4r;
};

ChiContext make_chi_context(int d, const TraceData& traces, int twelve_trL,
                            int ell_one);

// Closed-form chi value as a field element (before the integrality gate).
Cyc12 euler_coefficient_cyc(const ChiContext& ctx, int n);

// Integer chi(V_{ell_one+2n}); NonIntegralChi when the tuple hosts no
// representation.
Int euler_coefficient(const ChiContext& ctx, int n);

// P(T) = T^{-l1} (sum_k chi(V_k) T^k) (1-T^4)(1-T^6) as an exact integer
// polynomial: degree <= 8, even powers only, P(1) = d. NonIntegralChi when
// a coefficient is not a rational integer.
IntPoly p_polynomial(const ChiContext& ctx);

// The same five closed-form terms before the integer gate; exposed so the
// series oracle can compare field values on non-surviving tuples too.
CycPoly p_polynomial_cyc(const ChiContext& ctx);

struct DimensionAnswer {
    std::optional<Int> value;        // engaged when the dimension is known
    std::optional<Int> chi;          // chi(V_k) when k is not below the range
    std::optional<int> unknown_index;  // index into ell_list for "chi + a_j"
};

// Prop 2.1 trichotomy: 0 below the middle range, chi(V_k) above it,
// chi(V_k) + dim S_{2-k}(dual) inside (symbolic unless cusp_dim is given).
DimensionAnswer dimension_M(const ChiContext& ctx, const MiddleRange& middle,
                            int k, std::optional<Int> cusp_dim = std::nullopt);

}  // namespace vvmf
