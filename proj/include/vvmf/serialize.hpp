#pragma once

#include <json.hpp>

#include "vvmf/dmatrix.hpp"
#include "vvmf/profile.hpp"

namespace vvmf {

using nlohmann::json;

// GradedPoly wire format: list of [e4_exp, e6_exp, numerator, denominator]
// quadruples in canonical term order. Numerators/denominators are written as
// decimal strings to stay exact; plain JSON integers are accepted on input.
json graded_to_json(const GradedPoly& p);
GradedPoly graded_from_json(const json& j, std::optional<int> declared_weight);

// Matrix file format: {"mults": [...], "k1": int, "entries": [[poly...]]}.
json dmatrix_to_json(const DMatrix& A);
DMatrix dmatrix_from_json(const json& j);
json transformation_to_json(const Transformation& P);

// Enumeration output: {"dimension", "total", "types": [{"type", "mults",
// "realizations": [...]}]}.
json enumerate_to_json(const EnumerateResult& res);

// Fixture files: {"dimension": d, "profiles": [[m...]], "total": n}.
struct Fixture {
    int dimension = 0;
    std::vector<std::vector<int>> profiles;
    long total = 0;
};
Fixture fixture_from_json(const json& j);

// The multiplicity tuples a printed table leaves out by convention when
// d >= 7: the all-ones length-d tuple and the length-(d-1) tuples with a
// single 2 in positions 2..d-2. Empty for d < 7 (nothing is omitted).
std::vector<std::vector<int>> omitted_tuples(int d);

}  // namespace vvmf
