#pragma once

#include <vector>

#include "vvmf/cyc12.hpp"
#include "vvmf/rational.hpp"

namespace vvmf {

// Dense univariate polynomial, coefficient of T^k at index k. Trailing zero
// coefficients are trimmed so degree() is honest; the zero polynomial has
// empty storage and degree -1.
template <typename C>
struct DensePoly {
    std::vector<C> a;

    DensePoly() = default;
    explicit DensePoly(std::vector<C> coeffs) : a(std::move(coeffs)) { trim(); }

    static bool coeff_zero(const C& x) {
        if constexpr (requires(const C& v) { v.is_zero(); })
            return x.is_zero();
        else
            return x == 0;
    }

    void trim() {
        while (!a.empty() && coeff_zero(a.back())) a.pop_back();
    }

    int degree() const { return static_cast<int>(a.size()) - 1; }
    bool is_zero() const { return a.empty(); }

    C coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(a.size())) return C{};
        return a[k];
    }

    void add_to_coeff(int k, const C& v) {
        if (static_cast<int>(a.size()) <= k) a.resize(k + 1);
        a[k] = a[k] + v;
        trim();
    }

    bool operator==(const DensePoly& o) const { return a == o.a; }
};

template <typename C>
DensePoly<C> operator+(const DensePoly<C>& p, const DensePoly<C>& q) {
    std::vector<C> r(std::max(p.a.size(), q.a.size()));
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < p.a.size()) r[k] = r[k] + p.a[k];
        if (k < q.a.size()) r[k] = r[k] + q.a[k];
    }
    return DensePoly<C>(std::move(r));
}

template <typename C>
DensePoly<C> operator-(const DensePoly<C>& p, const DensePoly<C>& q) {
    std::vector<C> r(std::max(p.a.size(), q.a.size()));
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < p.a.size()) r[k] = r[k] + p.a[k];
        if (k < q.a.size()) r[k] = r[k] - q.a[k];
    }
    return DensePoly<C>(std::move(r));
}

template <typename C>
DensePoly<C> operator*(const DensePoly<C>& p, const DensePoly<C>& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<C> r(p.a.size() + q.a.size() - 1);
    for (size_t i = 0; i < p.a.size(); ++i)
        for (size_t j = 0; j < q.a.size(); ++j) r[i + j] = r[i + j] + p.a[i] * q.a[j];
    return DensePoly<C>(std::move(r));
}

template <typename C>
DensePoly<C> operator*(const C& s, const DensePoly<C>& p) {
    std::vector<C> r(p.a.size());
    for (size_t k = 0; k < r.size(); ++k) r[k] = s * p.a[k];
    return DensePoly<C>(std::move(r));
}

template <typename C>
C poly_eval_one(const DensePoly<C>& p) {
    C s{};
    for (const C& v : p.a) s = s + v;
    return s;
}

// Derivative evaluated at T = 1, i.e. sum k * a_k.
template <typename C>
C poly_derivative_at_one(const DensePoly<C>& p) {
    C s{};
    for (int k = 1; k <= p.degree(); ++k) s = s + C(k) * p.a[k];
    return s;
}

using IntPoly = DensePoly<Int>;
using CycPoly = DensePoly<Cyc12>;

inline Cyc12 cyc_poly_derivative_at_one(const CycPoly& p) {
    Cyc12 s;
    for (int k = 1; k <= p.degree(); ++k)
        s = s + Rational(k) * p.a[k];
    return s;
}

}  // namespace vvmf
