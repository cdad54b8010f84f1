#include "vvmf/graded.hpp"

#include <sstream>

namespace vvmf {

namespace {
int term_weight(const std::pair<int, int>& key) {
    return 6 * key.first + 4 * key.second;
}
}  // namespace

void GradedPoly::set_declared_weight(int w) {
    for (const auto& [key, c] : terms)
        if (term_weight(key) != w)
            throw WeightMismatch("declared weight " + std::to_string(w) +
                                 " does not match term of weight " +
                                 std::to_string(term_weight(key)));
    declared_weight = w;
}

std::optional<int> GradedPoly::weight() const {
    if (terms.empty()) return declared_weight;
    int w = term_weight(terms.begin()->first);
    for (const auto& [key, c] : terms)
        if (term_weight(key) != w) return std::nullopt;
    return w;
}

bool GradedPoly::homogeneous() const {
    return terms.empty() || weight().has_value();
}

GradedPoly operator+(const GradedPoly& p, const GradedPoly& q) {
    GradedPoly r = p;
    r.declared_weight.reset();
    for (const auto& [key, c] : q.terms) {
        auto it = r.terms.find(key);
        if (it == r.terms.end()) {
            r.terms[key] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

GradedPoly operator-(const GradedPoly& p) {
    GradedPoly r;
    for (const auto& [key, c] : p.terms) r.terms[key] = -c;
    return r;
}

GradedPoly operator-(const GradedPoly& p, const GradedPoly& q) {
    return p + (-q);
}

GradedPoly operator*(const GradedPoly& p, const GradedPoly& q) {
    GradedPoly r;
    for (const auto& [kp, cp] : p.terms)
        for (const auto& [kq, cq] : q.terms) {
            std::pair<int, int> key{kp.first + kq.first, kp.second + kq.second};
            Rational& slot = r.terms[key];
            slot += cp * cq;
            if (slot == 0) r.terms.erase(key);
        }
    return r;
}

GradedPoly operator*(const Rational& s, const GradedPoly& p) {
    GradedPoly r;
    if (s == 0) return r;
    for (const auto& [key, c] : p.terms) r.terms[key] = s * c;
    return r;
}

int e6_degree(const GradedPoly& p) {
    if (p.terms.empty()) return kE6DegreeNegInf;
    return p.terms.rbegin()->first.first;  // keys ordered by e6 first
}

std::vector<std::pair<int, int>> weight_basis(int k) {
    std::vector<std::pair<int, int>> basis;
    if (k < 0) return basis;
    for (int b = 0; 6 * b <= k; ++b) {
        int rem = k - 6 * b;
        if (rem % 4 == 0) basis.push_back({rem / 4, b});
    }
    return basis;
}

GradedPoly serre_derive(const GradedPoly& p) {
    if (!p.homogeneous())
        throw WeightMismatch("serre_derive needs homogeneous input");
    GradedPoly r;
    for (const auto& [key, c] : p.terms) {
        int b = key.first, a = key.second;
        // d(g4^a g6^b) = -(a/3) g4^(a-1) g6^(b+1) - (b/2) g4^(a+2) g6^(b-1)
        if (a > 0)
            r = r + GradedPoly::monomial(a - 1, b + 1,
                                         c * make_rational(-a, 3));
        if (b > 0)
            r = r + GradedPoly::monomial(a + 2, b - 1,
                                         c * make_rational(-b, 2));
    }
    if (auto w = p.weight()) r.set_declared_weight(*w + 2);
    return r;
}

std::string graded_str(const GradedPoly& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : p.terms) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (key.second > 0) os << "*g4^" << key.second;
        if (key.first > 0) os << "*g6^" << key.first;
    }
    return os.str();
}

}  // namespace vvmf
