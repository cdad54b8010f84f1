#pragma once

#include <random>
#include <set>
#include <vector>

#include "vvmf/cyc12.hpp"
#include "vvmf/euler.hpp"
#include "vvmf/graded.hpp"
#include "vvmf/poly.hpp"

namespace vvmf::testing {

// chi(V_{l1+2n}) for n = 0..n_terms-1 by a second computational path:
// each closed-form term numerator/(1 - alpha u) is expanded by truncated
// series division in u = T^2 instead of evaluating root powers per n.
std::vector<Cyc12> chi_series_oracle(const ChiContext& ctx, int n_terms);

// Truncated inverse of a CycPoly with invertible constant term.
CycPoly cyc_series_inverse(const CycPoly& den, int n_terms);

// Every nondecreasing weight tuple (k_1 <= ... <= k_d) of the context's
// parity with k_1 >= ell_one that solves
//   sum_j T^{k_j} = T^{l1} P(T) + sum_j a_j T^{l_j} (1-T^4)(1-T^6)
// in nonnegative integers a_j, found by direct triangular elimination over
// an exhaustive scan. No gap or window filtering: this is the raw solution
// set the depth-first search must match exactly.
std::set<std::vector<int>> brute_force_weight_tuples(const IntPoly& P,
                                                     const MiddleRange& middle,
                                                     int d);

Rational rand_rational(std::mt19937_64& rng);
Cyc12 rand_cyc(std::mt19937_64& rng);
GradedPoly random_homogeneous(int weight, std::mt19937_64& rng);

}  // namespace vvmf::testing
