#pragma once

#include <string>

#include "vvmf/profile.hpp"
#include "vvmf/serialize.hpp"

namespace vvmf {

// Table layout used by the survey listings: one column per multiplicity
// tuple length, longest first, plus a trailing total line.
std::string render_markdown(const EnumerateResult& res);
std::string render_csv(const EnumerateResult& res);
std::string render_json(const EnumerateResult& res);

struct FixtureCheck {
    bool ok = false;
    std::string report;
};

// Compares enumerated multiplicity tuples against fixture profiles plus the
// conventional omissions for the fixture's dimension.
FixtureCheck fixtures_check(const EnumerateResult& res, const Fixture& fixture);

}  // namespace vvmf
