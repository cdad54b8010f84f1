#include "vvmf/component.hpp"

#include <sstream>

#include "vvmf/errors.hpp"

namespace vvmf {

std::vector<ComponentParams> enumerate_components(int d) {
    std::vector<ComponentParams> out;
    out.reserve(2 * (d + 1) * ((d + 1) * (d + 2) / 2));
    for (Parity parity : {Parity::Even, Parity::Odd})
        for (int a = 0; a <= d; ++a)
            for (int x = 0; x <= d; ++x)
                for (int y = 0; x + y <= d; ++y)
                    out.push_back({parity, a, d - a, x, y, d - x - y});
    return out;
}

TraceData traces_of(const ComponentParams& p) {
    const Cyc12 zeta = cyc12_from_root(4);    // primitive cube root
    const Cyc12 zeta2 = cyc12_from_root(8);
    const Cyc12 i = cyc12_from_root(3);
    Cyc12 rx(Rational(p.x)), ry(Rational(p.y)), rz(Rational(p.z));
    Cyc12 sum1 = rx + ry * zeta + rz * zeta2;   // multiplicity-weighted cube roots
    Cyc12 sum2 = rx + ry * zeta2 + rz * zeta;   // same with squared eigenvalues
    TraceData t;
    Cyc12 ab(Rational(p.a - p.b));
    if (p.parity == Parity::Even) {
        t.s = ab;
        t.r1 = sum1;
        t.r2 = sum2;
    } else {
        // rho(S) eigenvalues +/- i; rho(R) eigenvalues -1, -zeta, -zeta^2,
        // whose squares are 1, zeta^2, zeta.
        t.s = ab * i;
        t.r1 = -sum1;
        t.r2 = sum2;
    }
    return t;
}

std::vector<int> trace_l_candidates(const ComponentParams& p) {
    const int d = p.dimension();
    // det rho(S) and det rho(R) as powers of zeta12.
    long det_s_exp, det_r_exp;
    if (p.parity == Parity::Even) {
        det_s_exp = 6L * p.b;                    // (-1)^b
        det_r_exp = 4L * p.y + 8L * p.z;         // zeta3^(y+2z)
    } else {
        det_s_exp = 3L * p.a + 9L * p.b;         // i^a (-i)^b
        det_r_exp = 6L * p.x + 10L * p.y + 2L * p.z;  // (-1)^x(-zeta)^y(-zeta^2)^z
    }
    Cyc12 ratio = cyc12_from_root(det_r_exp - det_s_exp);
    int m = -1;
    for (int k = 0; k < 12; ++k)
        if (ratio == cyc12_from_root(k)) { m = k; break; }
    if (m < 0)
        throw InternalInconsistency("det rho(T) is not a 12th root of unity");
    std::vector<int> out;
    out.reserve(d);
    for (int j = 0; j < d; ++j) out.push_back(m + 12 * j);
    return out;
}

std::string component_str(const ComponentParams& p) {
    std::ostringstream os;
    os << parity_name(p.parity) << " (" << p.a << "," << p.b << ";" << p.x
       << "," << p.y << "," << p.z << ")";
    return os.str();
}

}  // namespace vvmf
