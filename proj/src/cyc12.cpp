#include "vvmf/cyc12.hpp"

#include <sstream>

namespace vvmf {

Cyc12 operator+(const Cyc12& a, const Cyc12& b) {
    Cyc12 r;
    for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

Cyc12 operator-(const Cyc12& a, const Cyc12& b) {
    Cyc12 r;
    for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

Cyc12 operator-(const Cyc12& a) {
    Cyc12 r;
    for (int k = 0; k < 4; ++k) r.c[k] = -a.c[k];
    return r;
}

Cyc12 operator*(const Cyc12& a, const Cyc12& b) {
    // Convolve, then fold z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1. Operands
    // are usually sparse (roots of unity, rational scalars), so skip zero
    // entries before paying for an mpq multiply.
    std::array<Rational, 7> s{};
    for (int i = 0; i < 4; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (b.c[j] == 0) continue;
            s[i + j] += a.c[i] * b.c[j];
        }
    }
    Cyc12 r;
    r.c[0] = s[0] - s[4] - s[6];
    r.c[1] = s[1] - s[5];
    r.c[2] = s[2] + s[4];
    r.c[3] = s[3] + s[5];
    return r;
}

Cyc12 operator*(const Rational& s, const Cyc12& a) {
    Cyc12 r;
    if (s == 0) return r;
    for (int k = 0; k < 4; ++k)
        if (a.c[k] != 0) r.c[k] = s * a.c[k];
    return r;
}

Cyc12 cyc12_from_root(long k) {
    long m = k % 12;
    if (m < 0) m += 12;
    Rational sign(1);
    if (m >= 6) {
        m -= 6;
        sign = -1;
    }
    Cyc12 r;
    switch (m) {
        case 0: case 1: case 2: case 3:
            r.c[m] = sign;
            break;
        case 4:  // z^4 = z^2 - 1
            r.c[0] = -sign;
            r.c[2] = sign;
            break;
        case 5:  // z^5 = z^3 - z
            r.c[1] = -sign;
            r.c[3] = sign;
            break;
    }
    return r;
}

Cyc12 cyc12_inverse(const Cyc12& x) {
    if (x.is_zero()) throw std::domain_error("Cyc12 inverse of zero");
    // Columns of M are the coordinates of x * z^j; solve M v = e0.
    Rational M[4][5];
    Cyc12 pw(Rational(1));
    for (int j = 0; j < 4; ++j) {
        Cyc12 col = x * pw;
        for (int i = 0; i < 4; ++i) M[i][j] = col.c[i];
        pw = pw * cyc12_from_root(1);
    }
    for (int i = 0; i < 4; ++i) M[i][4] = (i == 0) ? Rational(1) : Rational(0);
    // Gaussian elimination with partial pivoting on nonzero entries.
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int i = col; i < 4; ++i)
            if (M[i][col] != 0) { piv = i; break; }
        if (piv < 0) throw std::domain_error("Cyc12 inverse: singular (zero divisor?)");
        if (piv != col)
            for (int j = 0; j < 5; ++j) std::swap(M[piv][j], M[col][j]);
        Rational d = M[col][col];
        for (int j = col; j < 5; ++j) M[col][j] /= d;
        for (int i = 0; i < 4; ++i) {
            if (i == col || M[i][col] == 0) continue;
            Rational f = M[i][col];
            for (int j = col; j < 5; ++j) M[i][j] -= f * M[col][j];
        }
    }
    return Cyc12(M[0][4], M[1][4], M[2][4], M[3][4]);
}

std::optional<Int> cyc12_as_integer(const Cyc12& x) {
    if (x.c[1] != 0 || x.c[2] != 0 || x.c[3] != 0) return std::nullopt;
    if (!is_integer(x.c[0])) return std::nullopt;
    return x.c[0].get_num();
}

std::string cyc12_str(const Cyc12& x) {
    std::ostringstream os;
    os << "(" << x.c[0] << ", " << x.c[1] << ", " << x.c[2] << ", " << x.c[3]
       << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc12& x) {
    return os << cyc12_str(x);
}

}  // namespace vvmf
