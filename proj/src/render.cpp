#include "vvmf/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace vvmf {

namespace {

std::string tuple_str(const std::vector<int>& t) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ", ";
        os << t[i];
    }
    os << "]";
    return os.str();
}

std::string column_header(size_t len) {
    if (len >= 4) return "[m1,...,m" + std::to_string(len) + "]";
    if (len == 3) return "[m1,m2,m3]";
    if (len == 2) return "[m1,m2]";
    return "[m1]";
}

// Columns of multiplicity tuples grouped by length, longest first.
std::vector<std::pair<size_t, std::vector<std::string>>> group_columns(
    const EnumerateResult& res) {
    std::map<size_t, std::vector<std::string>, std::greater<size_t>> groups;
    for (const CandidateType& t : res.types)
        groups[t.mults.size()].push_back(tuple_str(t.mults));
    return {groups.begin(), groups.end()};
}

}  // namespace

std::string render_markdown(const EnumerateResult& res) {
    auto cols = group_columns(res);
    std::ostringstream os;
    if (!cols.empty()) {
        size_t height = 0;
        os << "|";
        for (auto& [len, items] : cols) {
            os << " " << column_header(len) << " |";
            height = std::max(height, items.size());
        }
        os << "\n|";
        for (size_t c = 0; c < cols.size(); ++c) os << " --- |";
        os << "\n";
        for (size_t r = 0; r < height; ++r) {
            os << "|";
            for (auto& [len, items] : cols)
                os << " " << (r < items.size() ? items[r] : "") << " |";
            os << "\n";
        }
        os << "\n";
    }
    os << "Total number of types: " << res.types.size() << "\n";
    return os.str();
}

std::string render_csv(const EnumerateResult& res) {
    auto cols = group_columns(res);
    std::ostringstream os;
    size_t height = 0;
    for (size_t c = 0; c < cols.size(); ++c) {
        if (c) os << ",";
        os << "\"" << column_header(cols[c].first) << "\"";
        height = std::max(height, cols[c].second.size());
    }
    if (!cols.empty()) os << "\n";
    for (size_t r = 0; r < height; ++r) {
        for (size_t c = 0; c < cols.size(); ++c) {
            if (c) os << ",";
            if (r < cols[c].second.size()) os << "\"" << cols[c].second[r] << "\"";
        }
        os << "\n";
    }
    os << "total," << res.types.size() << "\n";
    return os.str();
}

std::string render_json(const EnumerateResult& res) {
    return enumerate_to_json(res).dump(2) + "\n";
}

FixtureCheck fixtures_check(const EnumerateResult& res, const Fixture& fixture) {
    FixtureCheck out;
    std::set<std::vector<int>> expected(fixture.profiles.begin(),
                                        fixture.profiles.end());
    size_t verbatim = expected.size();
    for (auto& t : omitted_tuples(fixture.dimension)) expected.insert(t);
    std::set<std::vector<int>> got;
    for (const CandidateType& t : res.types) got.insert(t.mults);

    std::ostringstream os;
    bool ok = true;
    if (res.dimension != fixture.dimension) {
        os << "dimension mismatch: enumerated " << res.dimension
           << ", fixture " << fixture.dimension << "\n";
        ok = false;
    }
    if (got.size() != res.types.size()) {
        os << "duplicate multiplicity tuples in enumeration output\n";
        ok = false;
    }
    if (expected.size() != verbatim + omitted_tuples(fixture.dimension).size()) {
        os << "fixture overlaps the conventional omissions\n";
        ok = false;
    }
    for (const auto& t : expected)
        if (!got.count(t)) {
            os << "missing from output: " << tuple_str(t) << "\n";
            ok = false;
        }
    for (const auto& t : got)
        if (!expected.count(t)) {
            os << "unexpected in output: " << tuple_str(t) << "\n";
            ok = false;
        }
    if (static_cast<long>(expected.size()) != fixture.total) {
        os << "fixture total " << fixture.total << " != expected set size "
           << expected.size() << "\n";
        ok = false;
    }
    os << "enumerated " << got.size() << " tuples, fixture expects "
       << fixture.total << (ok ? " -- match\n" : " -- MISMATCH\n");
    out.ok = ok;
    out.report = os.str();
    return out;
}

}  // namespace vvmf
