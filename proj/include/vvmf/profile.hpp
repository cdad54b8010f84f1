#pragma once

#include <optional>
#include <vector>

#include "vvmf/component.hpp"
#include "vvmf/euler.hpp"
#include "vvmf/poly.hpp"

namespace vvmf {

// Weight profile k1 <= ... <= kd plus its derived views. Weights all share
// one parity; mults are the multiplicities of the distinct weights.
struct Profile {
    std::vector<int> weights;

    std::vector<int> type_tuple() const;        // (0, k2-k1, ..., kd-k1)
    std::vector<int> mults() const;             // run lengths of distinct weights
    std::vector<int> distinct_weights() const;
    int k1() const { return weights.front(); }
    int kd() const { return weights.back(); }
    int dimension() const { return static_cast<int>(weights.size()); }
    bool operator==(const Profile&) const = default;
};

// Weight polynomial with integer exponent offset: coefficient of T^(shift+e)
// is poly[e]. Lets W carry negative weights.
struct WeightPoly {
    int shift = 0;
    IntPoly poly;
};

using AVector = std::vector<int>;

// Depth-first solve of W(T) = T^{l1} P(T) + sum_j a_j T^{l_j} (1-T^4-T^6+T^10)
// over nonnegative a-vectors; a candidate survives iff every coefficient of
// W lies in [0, d]. The coefficient at l_j is final once a_1..a_j are fixed,
// which gives the per-level range a_j in [max(0,-base_j), d-base_j].
std::vector<std::pair<AVector, WeightPoly>> enumerate_a_vectors(
    const IntPoly& P, const MiddleRange& middle, int d);

// Reads a profile off nonnegative coefficients; none when W(1) != d.
std::optional<Profile> profile_from_poly(const WeightPoly& W, int d);

// Paper filters. filter_no_gap: every parity step between k1 and kd is hit.
bool filter_no_gap(const Profile& p);
// Thm 4.1: m_j <= sum_{t>=0} m_{j+1-2t} and m_j <= sum_{t>=0} m_{j-1+2t}.
bool filter_mult_bounds(const std::vector<int>& mults);
// Lemma 2.5 refined window (exact rational comparison).
bool filter_weight_bounds(const Profile& p, int d, int twelve_trL);
// Opt-in refinements (Lemmas on two-position profiles, d/2 multiplicities,
// and the length bound l <= 8e+7).
bool filter_advanced(const std::vector<int>& mults, int d);
bool is_cyclic_profile(const std::vector<int>& mults);
// Opt-in unitarity range [1, 11].
bool unitary_weight_filter(const Profile& p);
bool weight_sum_check(const Profile& p, int twelve_trL);

// Combinators.
Profile dual_cuspidal_profile(const Profile& p);            // (12-kd, ..., 12-k1)
std::vector<int> tensor_standard(const std::vector<int>& mults);

struct Realization {
    ComponentParams component;
    int twelve_trL = 0;
    int k1 = 0;
    AVector a_vector;
};

struct CandidateType {
    std::vector<int> type_tuple;
    std::vector<int> mults;
    std::vector<Realization> realizations;
};

struct EnumerateOptions {
    bool advanced = false;  // Lemmas 4.4-4.6
    bool unitary = false;   // weight range [1, 11]
    int threads = 1;        // fan-out over (component, twelve_trL)
};

struct EnumerateStats {
    long contexts_total = 0;
    long contexts_nonintegral = 0;
    long contexts_weight_sum_skipped = 0;  // provably 0; counted anyway
    long candidates_raw = 0;
    long rejected_weight_bounds = 0;
    long rejected_weight_sum = 0;
    long rejected_gap = 0;
    long rejected_mult_bounds = 0;
    long rejected_optional = 0;
};

struct EnumerateResult {
    int dimension = 0;
    std::vector<CandidateType> types;  // sorted by (type_tuple, mults)
    EnumerateStats stats;
};

// Full pipeline: components -> TrL values -> P(T) -> a-vectors -> profiles
// -> filters -> dedup by (type_tuple, mults) -> lexicographic sort.
EnumerateResult enumerate_types(int d, const EnumerateOptions& opt = {});

}  // namespace vvmf
