#pragma once

#include <string>
#include <vector>

#include "vvmf/cyc12.hpp"

namespace vvmf {

// Parity of a representation: even means rho(S^2) = +I (all profile weights
// even), odd means rho(S^2) = -I (all weights odd). The sign of rho(S^2) is
// what matters here, not rho(S) itself.
enum class Parity { Even, Odd };

inline const char* parity_name(Parity p) {
    return p == Parity::Even ? "even" : "odd";
}

// One character-variety component: eigenvalue multiplicities of rho(S) and
// rho(R). Even: rho(S) has eigenvalues +1 (a times), -1 (b times) and rho(R)
// has 1, zeta3, zeta3^2 with multiplicities (x,y,z). Odd: rho(S) has +i
// (a times), -i (b times) and rho(R) has -1, -zeta3, -zeta3^2.
struct ComponentParams {
    Parity parity = Parity::Even;
    int a = 0, b = 0;     // a + b = d
    int x = 0, y = 0, z = 0;  // x + y + z = d

    int dimension() const { return a + b; }
    bool operator==(const ComponentParams&) const = default;
};

struct TraceData {
    Cyc12 s;   // Tr rho(S)
    Cyc12 r1;  // Tr rho(R)
    Cyc12 r2;  // Tr rho(R^2)
};

// All components of dimension d, lexicographic in (parity, a, x, y);
// count = 2 * (d+1) * (d+1)(d+2)/2.
std::vector<ComponentParams> enumerate_components(int d);

TraceData traces_of(const ComponentParams& p);

// The d admissible values of 12*Tr(L) on a component: the residue m in
// [0,12) with zeta12^m = det rho(T) = det rho(R)/det rho(S), then
// {m, m+12, ..., m+12(d-1)}. Standard exponents put 12 Tr(L) in [0, 12d).
std::vector<int> trace_l_candidates(const ComponentParams& p);

std::string component_str(const ComponentParams& p);

}  // namespace vvmf
