#include "vvmf/profile.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "vvmf/errors.hpp"

namespace vvmf {

std::vector<int> Profile::type_tuple() const {
    std::vector<int> t(weights.size());
    for (size_t i = 0; i < weights.size(); ++i) t[i] = weights[i] - weights[0];
    return t;
}

std::vector<int> Profile::mults() const {
    std::vector<int> m;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (i > 0 && weights[i] == weights[i - 1])
            ++m.back();
        else
            m.push_back(1);
    }
    return m;
}

std::vector<int> Profile::distinct_weights() const {
    std::vector<int> w;
    for (size_t i = 0; i < weights.size(); ++i)
        if (i == 0 || weights[i] != weights[i - 1]) w.push_back(weights[i]);
    return w;
}

std::vector<std::pair<AVector, WeightPoly>> enumerate_a_vectors(
    const IntPoly& P, const MiddleRange& middle, int d) {
    // Work in the shifted variable: V(T) = T^{-l1} W(T), so the a_j term
    // sits at offset delta_j = l_j - l1 = 2(j-1).
    static const int g_off[4] = {0, 4, 6, 10};
    static const int g_val[4] = {1, -1, -1, 1};
    const int r = middle.r();

    std::vector<std::pair<AVector, WeightPoly>> out;
    std::vector<int> a(r, 0);

    int max_deg = std::max(P.degree(), r > 0 ? 2 * (r - 1) + 10 : 0);
    std::vector<Int> v(max_deg + 1);
    for (int k = 0; k <= P.degree(); ++k) v[k] = P.coeff(k);

    auto emit = [&]() {
        for (const Int& c : v)
            if (c < 0 || c > d) return;
        WeightPoly W;
        W.shift = middle.ell_one;
        W.poly = IntPoly(v);
        out.push_back({a, W});
    };

    auto dfs = [&](auto&& self, int j) -> void {
        if (j == r) {
            emit();
            return;
        }
        int delta = 2 * j;
        Int base = v[delta];
        // base + a_j must land in [0, d].
        long lo = 0, hi = d - base.get_si();
        if (base < 0) lo = -base.get_si();
        for (long val = lo; val <= hi; ++val) {
            a[j] = static_cast<int>(val);
            for (int t = 0; t < 4; ++t) v[delta + g_off[t]] += val * g_val[t];
            self(self, j + 1);
            for (int t = 0; t < 4; ++t) v[delta + g_off[t]] -= val * g_val[t];
        }
        a[j] = 0;
    };
    dfs(dfs, 0);
    return out;
}

std::optional<Profile> profile_from_poly(const WeightPoly& W, int d) {
    Int total = poly_eval_one(W.poly);
    if (total != d) return std::nullopt;
    Profile p;
    for (int e = 0; e <= W.poly.degree(); ++e) {
        Int c = W.poly.coeff(e);
        for (Int i = 0; i < c; ++i) p.weights.push_back(W.shift + e);
    }
    return p;
}

bool filter_no_gap(const Profile& p) {
    for (size_t i = 1; i < p.weights.size(); ++i)
        if (p.weights[i] - p.weights[i - 1] > 2) return false;
    return true;
}

bool filter_mult_bounds(const std::vector<int>& mults) {
    const int r = static_cast<int>(mults.size());
    auto m = [&](int j) { return (j >= 1 && j <= r) ? mults[j - 1] : 0; };
    for (int j = 1; j <= r; ++j) {
        long up = 0, down = 0;
        for (int i = j + 1; i >= 1; i -= 2) up += m(i);
        for (int i = j - 1; i <= r; i += 2) down += m(i);
        if (m(j) > up || m(j) > down) return false;
    }
    return true;
}

bool filter_weight_bounds(const Profile& p, int d, int twelve_trL) {
    // k1 >= 12TrL/d + 1 - d  and  kd <= 12TrL/d + d - 1, cleared of d.
    Int lo = Int(twelve_trL) + Int(d) * (1 - d);
    Int hi = Int(twelve_trL) + Int(d) * (d - 1);
    return Int(d) * p.k1() >= lo && Int(d) * p.kd() <= hi;
}

bool filter_advanced(const std::vector<int>& mults, int d) {
    const int r = static_cast<int>(mults.size());
    if (r == 2 && d != 2) return false;
    if (d % 2 == 0) {
        bool has_half = std::any_of(mults.begin(), mults.end(),
                                    [&](int m) { return 2 * m == d; });
        if (has_half && d != 2 && !(r == 3 && 2 * mults[1] == d)) return false;
    }
    int e = d / 2 - *std::max_element(mults.begin(), mults.end());
    if (r > 8 * e + 7) return false;
    return true;
}

bool is_cyclic_profile(const std::vector<int>& mults) {
    return std::all_of(mults.begin(), mults.end(), [](int m) { return m == 1; });
}

bool unitary_weight_filter(const Profile& p) {
    return p.k1() >= 1 && p.kd() <= 11;
}

bool weight_sum_check(const Profile& p, int twelve_trL) {
    long s = 0;
    for (int k : p.weights) s += k;
    return s == twelve_trL;
}

Profile dual_cuspidal_profile(const Profile& p) {
    Profile q;
    q.weights.reserve(p.weights.size());
    for (auto it = p.weights.rbegin(); it != p.weights.rend(); ++it)
        q.weights.push_back(12 - *it);
    return q;
}

std::vector<int> tensor_standard(const std::vector<int>& mults) {
    std::vector<int> out;
    out.reserve(mults.size() + 1);
    out.push_back(mults.front());
    for (size_t i = 1; i < mults.size(); ++i)
        out.push_back(mults[i - 1] + mults[i]);
    out.push_back(mults.back());
    return out;
}

namespace {

struct ContextWork {
    ComponentParams component;
    TraceData traces;
    int twelve_trL;
};

struct SlotResult {
    // Candidates surviving all filters, in deterministic generation order.
    std::vector<std::pair<std::vector<int>, Realization>> kept;  // key: mults
    std::vector<std::vector<int>> kept_types;
    EnumerateStats stats;
};

void process_context(const ContextWork& w, int d, const EnumerateOptions& opt,
                     SlotResult& slot) {
    slot.stats.contexts_total++;
    MiddleRange middle = middle_range(d, w.twelve_trL, w.component.parity);
    ChiContext ctx = make_chi_context(d, w.traces, w.twelve_trL, middle.ell_one);
    IntPoly P;
    try {
        P = p_polynomial(ctx);
    } catch (const NonIntegralChi&) {
        slot.stats.contexts_nonintegral++;
        return;
    }
    // Lemma 2.3 weight-sum consistency at context level. Provably always
    // true (the a-terms and terms 2-4 vanish at T=1 to second order); count
    // rather than assume.
    Int wsum = poly_derivative_at_one(P) + Int(d) * ctx.ell_one;
    if (wsum != w.twelve_trL) {
        slot.stats.contexts_weight_sum_skipped++;
        return;
    }
    for (auto& [avec, W] : enumerate_a_vectors(P, middle, d)) {
        slot.stats.candidates_raw++;
        auto prof = profile_from_poly(W, d);
        if (!prof) continue;  // unreachable: a-terms vanish at T=1
        bool ok = true;
        if (!filter_weight_bounds(*prof, d, w.twelve_trL)) {
            slot.stats.rejected_weight_bounds++;
            ok = false;
        } else if (!weight_sum_check(*prof, w.twelve_trL)) {
            slot.stats.rejected_weight_sum++;
            ok = false;
        } else if (!filter_no_gap(*prof)) {
            slot.stats.rejected_gap++;
            ok = false;
        } else if (d >= 2 && !filter_mult_bounds(prof->mults())) {
            slot.stats.rejected_mult_bounds++;
            ok = false;
        } else if (opt.advanced && !filter_advanced(prof->mults(), d)) {
            slot.stats.rejected_optional++;
            ok = false;
        } else if (opt.unitary && !unitary_weight_filter(*prof)) {
            slot.stats.rejected_optional++;
            ok = false;
        }
        if (!ok) continue;
        Realization real{w.component, w.twelve_trL, prof->k1(), avec};
        slot.kept.push_back({prof->mults(), real});
        slot.kept_types.push_back(prof->type_tuple());
    }
}

void accumulate(EnumerateStats& into, const EnumerateStats& from) {
    into.contexts_total += from.contexts_total;
    into.contexts_nonintegral += from.contexts_nonintegral;
    into.contexts_weight_sum_skipped += from.contexts_weight_sum_skipped;
    into.candidates_raw += from.candidates_raw;
    into.rejected_weight_bounds += from.rejected_weight_bounds;
    into.rejected_weight_sum += from.rejected_weight_sum;
    into.rejected_gap += from.rejected_gap;
    into.rejected_mult_bounds += from.rejected_mult_bounds;
    into.rejected_optional += from.rejected_optional;
}

}  // namespace

EnumerateResult enumerate_types(int d, const EnumerateOptions& opt) {
    std::vector<ContextWork> work;
    for (const ComponentParams& comp : enumerate_components(d)) {
        TraceData traces = traces_of(comp);
        for (int trl : trace_l_candidates(comp))
            work.push_back({comp, traces, trl});
    }

    std::vector<SlotResult> slots(work.size());
    int threads = std::max(1, opt.threads);
    if (threads == 1) {
        for (size_t i = 0; i < work.size(); ++i)
            process_context(work[i], d, opt, slots[i]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&]() {
                for (size_t i = next.fetch_add(1); i < work.size();
                     i = next.fetch_add(1))
                    process_context(work[i], d, opt, slots[i]);
            });
        for (auto& th : pool) th.join();
    }

    // Deterministic merge in slot order; dedup by (type_tuple, mults).
    EnumerateResult res;
    res.dimension = d;
    std::map<std::pair<std::vector<int>, std::vector<int>>, size_t> index;
    for (size_t i = 0; i < slots.size(); ++i) {
        accumulate(res.stats, slots[i].stats);
        for (size_t j = 0; j < slots[i].kept.size(); ++j) {
            auto key = std::make_pair(slots[i].kept_types[j],
                                      slots[i].kept[j].first);
            auto it = index.find(key);
            if (it == index.end()) {
                CandidateType ct;
                ct.type_tuple = key.first;
                ct.mults = key.second;
                ct.realizations.push_back(slots[i].kept[j].second);
                index[key] = res.types.size();
                res.types.push_back(std::move(ct));
            } else {
                res.types[it->second].realizations.push_back(
                    slots[i].kept[j].second);
            }
        }
    }
    std::sort(res.types.begin(), res.types.end(),
              [](const CandidateType& a, const CandidateType& b) {
                  if (a.type_tuple != b.type_tuple)
                      return a.type_tuple < b.type_tuple;
                  return a.mults < b.mults;
              });
    return res;
}

}  // namespace vvmf
