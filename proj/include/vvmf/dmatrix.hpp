#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vvmf/graded.hpp"

namespace vvmf {

// Block shape of a modular-derivative matrix: r weight blocks of sizes
// mults[0..r-1] at weights k1, k1+2, ..., k1+2(r-1). The entry at global
// position (i,j) has weight k_j + 2 - k_i = 2*(block_j - block_i) + 2;
// negative-weight and weight-2 slots are identically zero.
struct BlockShape {
    std::vector<int> mults;
    int k1 = 0;

    int r() const { return static_cast<int>(mults.size()); }
    int dimension() const;
    int block_of(int idx) const;          // 0-based row/col -> 0-based block
    int row_weight(int idx) const { return k1 + 2 * block_of(idx); }
    int entry_weight(int i, int j) const {
        return 2 * (block_of(j) - block_of(i)) + 2;
    }
    // First global index of a block and the block's size.
    int block_start(int blk) const;
    bool operator==(const BlockShape&) const = default;
};

// Max e6 exponent possible in weight w, -1 when the weight has no monomials.
int natural_e6_cap(int w);

struct DMatrix {
    BlockShape shape;
    std::vector<std::vector<GradedPoly>> entries;

    static DMatrix zero(const BlockShape& shape);
    // Checks homogeneity of every entry against the block weight and zeroes
    // where no monomial exists. Throws WeightMismatch on violation.
    void validate() const;
    bool operator==(const DMatrix&) const = default;
};

// Weight-unipotent change of basis: identity diagonal; entry (i,j) nonzero
// only for k_i < k_j, homogeneous of weight k_j - k_i.
struct Transformation {
    BlockShape shape;
    std::vector<std::vector<GradedPoly>> entries;

    static Transformation identity(const BlockShape& shape);
    bool is_identity() const;
};

// Row/column replacement realizing conjugation by P = I - g E_{ij}:
// row i += g * row j; col j -= g * col i; entry (i,j) -= serre_derive(g).
// Requires i < j in weight order and wt(g) = k_j - k_i.
void elementary_replacement(DMatrix& A, int i, int j, const GradedPoly& g);

// Eliminates E6 from every entry by scheduled diagonal sweeps (stage t
// clears the weight-6t diagonal down two degrees, then walks the weights
// 6t-2 down to 4t+2 one degree step each), cancelling each top monomial
// alpha E4^u E6^v with h = -(3 alpha/(u+1)) E4^(u+1) E6^(v-1). Asserts the
// recorded per-diagonal caps after every batch (CapViolation on breach).
// Returns the reduced matrix and the accumulated transformation.
std::pair<DMatrix, Transformation> reduce_e6(const DMatrix& A);

// Verifies A' = P^{-1} A P + P^{-1} D(P) exactly (P^{-1} by back-substitution).
bool conjugation_check(const DMatrix& A, const DMatrix& A_prime,
                       const Transformation& P);

// Deterministic random matrix: every admissible monomial gets a small
// rational coefficient; subdiagonal constants are nonzero.
DMatrix random_dmatrix(const BlockShape& shape, std::uint64_t seed);

// Scalar kernel certificate for Thm 4.1: restrict block column j (1-based)
// of a reduced matrix to row blocks j+1, j-1, j-3, ..., read off the E4^e
// scalars, and return a nonzero rational kernel vector if one exists.
std::optional<std::vector<Rational>> kernel_flat_vector(const DMatrix& A_reduced,
                                                        int j);

}  // namespace vvmf
