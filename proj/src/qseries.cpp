#include "vvmf/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace vvmf {

QSeries QSeries::constant(const Rational& c, int n_terms) {
    QSeries r;
    r.coeffs.assign(std::max(n_terms, 0), Rational(0));
    if (!r.coeffs.empty()) r.coeffs[0] = c;
    return r;
}

QSeries operator+(const QSeries& f, const QSeries& g) {
    size_t n = std::min(f.coeffs.size(), g.coeffs.size());
    QSeries r;
    r.coeffs.resize(n);
    for (size_t i = 0; i < n; ++i) r.coeffs[i] = f.coeffs[i] + g.coeffs[i];
    return r;
}

QSeries operator-(const QSeries& f, const QSeries& g) {
    size_t n = std::min(f.coeffs.size(), g.coeffs.size());
    QSeries r;
    r.coeffs.resize(n);
    for (size_t i = 0; i < n; ++i) r.coeffs[i] = f.coeffs[i] - g.coeffs[i];
    return r;
}

QSeries operator*(const QSeries& f, const QSeries& g) {
    size_t n = std::min(f.coeffs.size(), g.coeffs.size());
    QSeries r;
    r.coeffs.assign(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (f.coeffs[i] == 0) continue;
        for (size_t j = 0; i + j < n; ++j)
            r.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
    }
    return r;
}

QSeries operator*(const Rational& s, const QSeries& f) {
    QSeries r = f;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

QSeries qseries_divide(const QSeries& f, const QSeries& g) {
    size_t n = std::min(f.coeffs.size(), g.coeffs.size());
    if (n == 0) return {};
    if (g.coeffs[0] == 0)
        throw std::domain_error("qseries division by series with zero constant term");
    QSeries r;
    r.coeffs.assign(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        Rational acc = f.coeffs[i];
        for (size_t j = 0; j < i; ++j) acc -= r.coeffs[j] * g.coeffs[i - j];
        r.coeffs[i] = acc / g.coeffs[0];
    }
    return r;
}

QSeries q_theta(const QSeries& f) {
    QSeries r = f;
    for (size_t n = 0; n < r.coeffs.size(); ++n)
        r.coeffs[n] *= Rational(static_cast<long>(n));
    return r;
}

namespace {
// sigma_k(n): sum of k-th powers of divisors.
Int sigma(int n, int k) {
    Int s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(k));
        s += p;
    }
    return s;
}

QSeries eisenstein(int n_terms, int power, long factor) {
    QSeries r;
    r.coeffs.assign(std::max(n_terms, 0), Rational(0));
    if (!r.coeffs.empty()) r.coeffs[0] = 1;
    for (int n = 1; n < n_terms; ++n)
        r.coeffs[n] = Rational(factor) * Rational(sigma(n, power));
    return r;
}
}  // namespace

QSeries eisenstein_e4(int n_terms) { return eisenstein(n_terms, 3, 240); }
QSeries eisenstein_e6(int n_terms) { return eisenstein(n_terms, 5, -504); }

QSeries derive_e2(int n_terms) {
    QSeries e4 = eisenstein_e4(n_terms);
    QSeries e6 = eisenstein_e6(n_terms);
    QSeries num = Rational(3) * q_theta(e4) + e6;
    return qseries_divide(num, e4);
}

QSeries serre_derivative(const QSeries& f, int k) {
    QSeries e2 = derive_e2(f.truncation());
    return q_theta(f) - make_rational(k, 12) * (e2 * f);
}

QSeries graded_to_qseries(const GradedPoly& x, int n_terms) {
    QSeries e4 = eisenstein_e4(n_terms);
    QSeries e6 = eisenstein_e6(n_terms);
    QSeries acc = QSeries::constant(0, n_terms);
    for (const auto& [key, c] : x.terms) {
        QSeries t = QSeries::constant(c, n_terms);
        for (int j = 0; j < key.second; ++j) t = t * e4;
        for (int j = 0; j < key.first; ++j) t = t * e6;
        acc = acc + t;
    }
    return acc;
}

}  // namespace vvmf
