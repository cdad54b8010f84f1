#pragma once

#include <stdexcept>
#include <string>

namespace vvmf {

// Arithmetic said no: a Euler characteristic or candidate polynomial came
// out non-integral, so the parameter tuple hosts no representation and is
// skipped (not an internal bug).
struct NonIntegralChi : std::runtime_error {
    explicit NonIntegralChi(const std::string& what) : std::runtime_error(what) {}
};

// Homogeneity violation in graded-ring arguments.
struct WeightMismatch : std::invalid_argument {
    explicit WeightMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A reduction step left an entry above its scheduled degree cap. Always a
// bug, never a data condition.
struct CapViolation : std::logic_error {
    explicit CapViolation(const std::string& what) : std::logic_error(what) {}
};

// Broken internal assumption (quantities that are provably consistent
// disagreeing at runtime).
struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace vvmf
