#pragma once

#include <vector>

#include "vvmf/graded.hpp"
#include "vvmf/rational.hpp"

namespace vvmf {

// Truncated q-expansion with exact rational coefficients; coeffs[n] is the
// coefficient of q^n. Mixed-truncation arithmetic shortens to the smaller
// truncation.
struct QSeries {
    std::vector<Rational> coeffs;

    QSeries() = default;
    explicit QSeries(std::vector<Rational> c) : coeffs(std::move(c)) {}
    static QSeries constant(const Rational& c, int n_terms);

    int truncation() const { return static_cast<int>(coeffs.size()); }
    bool operator==(const QSeries& o) const { return coeffs == o.coeffs; }
};

QSeries operator+(const QSeries& f, const QSeries& g);
QSeries operator-(const QSeries& f, const QSeries& g);
QSeries operator*(const QSeries& f, const QSeries& g);
QSeries operator*(const Rational& s, const QSeries& f);

// f/g to the common truncation; g must have nonzero constant term.
QSeries qseries_divide(const QSeries& f, const QSeries& g);

// q * d/dq: multiplies the q^n coefficient by n.
QSeries q_theta(const QSeries& f);

QSeries eisenstein_e4(int n_terms);
QSeries eisenstein_e6(int n_terms);

// E2 pinned by q dE4/dq - (1/3) E2 E4 = -(1/3) E6, i.e.
// E2 = (3 q dE4/dq + E6) / E4, solved by series division.
QSeries derive_e2(int n_terms);

// D_k f = q df/dq - (k/12) E2 f at f's truncation.
QSeries serre_derivative(const QSeries& f, int k);

// Substitute the Eisenstein expansions; ring homomorphism to truncation.
QSeries graded_to_qseries(const GradedPoly& x, int n_terms);

}  // namespace vvmf
