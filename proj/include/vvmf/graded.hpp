#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vvmf/errors.hpp"
#include "vvmf/rational.hpp"

namespace vvmf {

// Polynomial in the two Eisenstein generators g4 (weight 4) and g6
// (weight 6) with rational coefficients. Monomial g4^a g6^b has weight
// 4a + 6b. Keys are (e6, e4) so map order is the canonical term order:
// ascending g6 exponent, then ascending g4 exponent.
struct GradedPoly {
    std::map<std::pair<int, int>, Rational> terms;  // (e6, e4) -> coeff
    std::optional<int> declared_weight;

    GradedPoly() = default;

    static GradedPoly monomial(int e4, int e6, const Rational& c) {
        GradedPoly p;
        if (c != 0) p.terms[{e6, e4}] = c;
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    Rational coeff(int e4, int e6) const {
        auto it = terms.find({e6, e4});
        return it == terms.end() ? Rational(0) : it->second;
    }

    void set_declared_weight(int w);

    // Weight of the terms if homogeneous; declared weight wins for the zero
    // polynomial. nullopt for zero with no declaration.
    std::optional<int> weight() const;
    bool homogeneous() const;

    bool operator==(const GradedPoly& o) const { return terms == o.terms; }
};

GradedPoly operator+(const GradedPoly& p, const GradedPoly& q);
GradedPoly operator-(const GradedPoly& p, const GradedPoly& q);
GradedPoly operator-(const GradedPoly& p);
GradedPoly operator*(const GradedPoly& p, const GradedPoly& q);
GradedPoly operator*(const Rational& s, const GradedPoly& p);

// Degree in g6: max g6 exponent over nonzero terms, kE6DegreeNegInf on the
// zero polynomial. e6_degree(p) <= 0 means p is free of g6.
inline constexpr int kE6DegreeNegInf = INT_MIN;
int e6_degree(const GradedPoly& p);

// All (e4, e6) with 4*e4 + 6*e6 = k, sorted by e6 ascending. Empty for k < 0,
// k odd, and k = 2.
std::vector<std::pair<int, int>> weight_basis(int k);

// Derivation determined by g4 -> -(1/3) g6, g6 -> -(1/2) g4^2, extended by
// Leibniz; raises every weight by 2. Requires homogeneous input (or a
// declared weight on the zero polynomial).
GradedPoly serre_derive(const GradedPoly& p);

std::string graded_str(const GradedPoly& p);

}  // namespace vvmf
