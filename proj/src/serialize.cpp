#include "vvmf/serialize.hpp"

#include <stdexcept>

namespace vvmf {

namespace {
Int int_from_json(const json& v) {
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_integer()) return Int(v.get<long>());
    throw std::invalid_argument("expected integer or decimal string");
}
}  // namespace

json graded_to_json(const GradedPoly& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms)
        terms.push_back({key.second, key.first, c.get_num().get_str(),
                         c.get_den().get_str()});
    return terms;
}

GradedPoly graded_from_json(const json& j, std::optional<int> declared_weight) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
    GradedPoly p;
    for (const json& t : j) {
        if (!t.is_array() || t.size() != 4)
            throw std::invalid_argument("polynomial term must be a quadruple");
        int e4 = t[0].get<int>();
        int e6 = t[1].get<int>();
        if (e4 < 0 || e6 < 0) throw std::invalid_argument("negative exponent");
        Rational c = make_rational(int_from_json(t[2]), int_from_json(t[3]));
        if (c != 0) p = p + GradedPoly::monomial(e4, e6, c);
    }
    if (declared_weight) p.set_declared_weight(*declared_weight);
    return p;
}

json dmatrix_to_json(const DMatrix& A) {
    json j;
    j["mults"] = A.shape.mults;
    j["k1"] = A.shape.k1;
    json rows = json::array();
    for (const auto& row : A.entries) {
        json r = json::array();
        for (const GradedPoly& e : row) r.push_back(graded_to_json(e));
        rows.push_back(std::move(r));
    }
    j["entries"] = std::move(rows);
    return j;
}

DMatrix dmatrix_from_json(const json& j) {
    BlockShape shape;
    shape.mults = j.at("mults").get<std::vector<int>>();
    shape.k1 = j.at("k1").get<int>();
    if (shape.mults.empty())
        throw std::invalid_argument("shape needs at least one block");
    for (int m : shape.mults)
        if (m < 1) throw std::invalid_argument("block sizes must be positive");
    DMatrix A = DMatrix::zero(shape);
    const json& rows = j.at("entries");
    int d = shape.dimension();
    if (static_cast<int>(rows.size()) != d)
        throw std::invalid_argument("entry grid does not match dimension");
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(rows[i].size()) != d)
            throw std::invalid_argument("entry grid does not match dimension");
        for (int c = 0; c < d; ++c) {
            int w = shape.entry_weight(i, c);
            std::optional<int> dw;
            if (!weight_basis(w).empty()) dw = w;
            GradedPoly e = graded_from_json(rows[i][c], dw);
            A.entries[i][c] = std::move(e);
        }
    }
    A.validate();
    return A;
}

json transformation_to_json(const Transformation& P) {
    json j;
    j["mults"] = P.shape.mults;
    j["k1"] = P.shape.k1;
    json rows = json::array();
    for (const auto& row : P.entries) {
        json r = json::array();
        for (const GradedPoly& e : row) r.push_back(graded_to_json(e));
        rows.push_back(std::move(r));
    }
    j["entries"] = std::move(rows);
    return j;
}

json enumerate_to_json(const EnumerateResult& res) {
    json j;
    j["dimension"] = res.dimension;
    j["total"] = res.types.size();
    json types = json::array();
    for (const CandidateType& t : res.types) {
        json rec;
        rec["dimension"] = res.dimension;
        rec["type"] = t.type_tuple;
        rec["mults"] = t.mults;
        json reals = json::array();
        for (const Realization& r : t.realizations) {
            json rr;
            rr["parity"] = parity_name(r.component.parity);
            rr["a"] = r.component.a;
            rr["b"] = r.component.b;
            rr["x"] = r.component.x;
            rr["y"] = r.component.y;
            rr["z"] = r.component.z;
            rr["twelve_trL"] = r.twelve_trL;
            rr["k1"] = r.k1;
            rr["a_vector"] = r.a_vector;
            reals.push_back(std::move(rr));
        }
        rec["realizations"] = std::move(reals);
        types.push_back(std::move(rec));
    }
    j["types"] = std::move(types);
    return j;
}

Fixture fixture_from_json(const json& j) {
    Fixture f;
    f.dimension = j.at("dimension").get<int>();
    f.total = j.at("total").get<long>();
    for (const json& p : j.at("profiles"))
        f.profiles.push_back(p.get<std::vector<int>>());
    return f;
}

std::vector<std::vector<int>> omitted_tuples(int d) {
    std::vector<std::vector<int>> out;
    if (d < 7) return out;
    out.push_back(std::vector<int>(d, 1));
    // Single 2 in positions 2..d-2 of a length-(d-1) tuple.
    for (int pos = 2; pos <= d - 2; ++pos) {
        std::vector<int> t(d - 1, 1);
        t[pos - 1] = 2;
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace vvmf
