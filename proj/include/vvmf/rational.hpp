#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace vvmf {

// Arbitrary-precision integers and rationals. mpq_class keeps the canonical
// form we rely on everywhere: denominator > 0, gcd(num, den) = 1.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Int(num), Int(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Floor/ceil of a rational as exact integers.
inline Int rat_floor(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int rat_ceil(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

}  // namespace vvmf
