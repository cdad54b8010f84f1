#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "vvmf/rational.hpp"

namespace vvmf {

// Element of Q(zeta12) in the power basis {1, z, z^2, z^3}, z = zeta12 a
// primitive 12th root of unity. Reduction rule: z^4 = z^2 - 1 (the minimal
// polynomial is z^4 - z^2 + 1). Useful aliases: i = z^3, zeta3 = z^4,
// zeta6 = z^2.
struct Cyc12 {
    std::array<Rational, 4> c{};  // c[k] multiplies z^k

    Cyc12() = default;
    explicit Cyc12(const Rational& rational_part) { c[0] = rational_part; }
    Cyc12(Rational a0, Rational a1, Rational a2, Rational a3)
        : c{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

    bool is_zero() const {
        return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
    }
    bool operator==(const Cyc12& o) const { return c == o.c; }
    bool operator!=(const Cyc12& o) const { return !(*this == o); }
};

Cyc12 operator+(const Cyc12& a, const Cyc12& b);
Cyc12 operator-(const Cyc12& a, const Cyc12& b);
Cyc12 operator-(const Cyc12& a);
Cyc12 operator*(const Cyc12& a, const Cyc12& b);
Cyc12 operator*(const Rational& s, const Cyc12& a);

// z^k for any integer k (negative allowed); z^6 = -1 gives the sign rule.
Cyc12 cyc12_from_root(long k);

// Multiplicative inverse via the 4x4 multiplication matrix in the power
// basis. Throws std::domain_error on zero.
Cyc12 cyc12_inverse(const Cyc12& x);

inline Cyc12 operator/(const Cyc12& a, const Cyc12& b) {
    return a * cyc12_inverse(b);
}

// Exact integer extraction: engaged iff x is a rational integer (c1 = c2 =
// c3 = 0 and c0 integral).
std::optional<Int> cyc12_as_integer(const Cyc12& x);

std::string cyc12_str(const Cyc12& x);
std::ostream& operator<<(std::ostream& os, const Cyc12& x);

}  // namespace vvmf
