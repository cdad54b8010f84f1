#include "vvmf/dmatrix.hpp"

#include <random>
#include <string>

#include "vvmf/errors.hpp"

namespace vvmf {

int BlockShape::dimension() const {
    int d = 0;
    for (int m : mults) d += m;
    return d;
}

int BlockShape::block_of(int idx) const {
    int acc = 0;
    for (int b = 0; b < r(); ++b) {
        acc += mults[b];
        if (idx < acc) return b;
    }
    throw InternalInconsistency("index outside shape");
}

int BlockShape::block_start(int blk) const {
    int acc = 0;
    for (int b = 0; b < blk; ++b) acc += mults[b];
    return acc;
}

int natural_e6_cap(int w) {
    if (w < 0) return -1;
    for (int b = w / 6; b >= 0; --b)
        if ((w - 6 * b) % 4 == 0) return b;
    return -1;
}

DMatrix DMatrix::zero(const BlockShape& shape) {
    DMatrix A;
    A.shape = shape;
    int d = shape.dimension();
    A.entries.assign(d, std::vector<GradedPoly>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int w = shape.entry_weight(i, j);
            if (!weight_basis(w).empty()) A.entries[i][j].set_declared_weight(w);
        }
    return A;
}

void DMatrix::validate() const {
    int d = shape.dimension();
    if (static_cast<int>(entries.size()) != d)
        throw WeightMismatch("entry grid does not match shape dimension");
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(entries[i].size()) != d)
            throw WeightMismatch("entry grid does not match shape dimension");
        for (int j = 0; j < d; ++j) {
            const GradedPoly& e = entries[i][j];
            int w = shape.entry_weight(i, j);
            if (e.is_zero()) continue;
            auto ew = e.weight();
            if (!ew || *ew != w)
                throw WeightMismatch("entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") not homogeneous of weight " +
                                     std::to_string(w));
        }
    }
}

Transformation Transformation::identity(const BlockShape& shape) {
    Transformation P;
    P.shape = shape;
    int d = shape.dimension();
    P.entries.assign(d, std::vector<GradedPoly>(d));
    for (int i = 0; i < d; ++i)
        P.entries[i][i] = GradedPoly::monomial(0, 0, Rational(1));
    return P;
}

bool Transformation::is_identity() const {
    int d = shape.dimension();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const GradedPoly& e = entries[i][j];
            if (i == j) {
                if (!(e == GradedPoly::monomial(0, 0, Rational(1)))) return false;
            } else if (!e.is_zero()) {
                return false;
            }
        }
    return true;
}

void elementary_replacement(DMatrix& A, int i, int j, const GradedPoly& g) {
    if (g.is_zero()) return;
    const BlockShape& sh = A.shape;
    int want = sh.row_weight(j) - sh.row_weight(i);
    auto gw = g.weight();
    if (want <= 0 || !gw || *gw != want)
        throw WeightMismatch("replacement polynomial has weight " +
                             (gw ? std::to_string(*gw) : std::string("mixed")) +
                             ", need " + std::to_string(want));
    int d = sh.dimension();
    for (int c = 0; c < d; ++c)
        A.entries[i][c] = A.entries[i][c] + g * A.entries[j][c];
    for (int r = 0; r < d; ++r)
        A.entries[r][j] = A.entries[r][j] - A.entries[r][i] * g;
    A.entries[i][j] = A.entries[i][j] - serre_derive(g);
}

namespace {

// Matrix helpers over GradedPoly grids.
using Grid = std::vector<std::vector<GradedPoly>>;

Grid grid_mul(const Grid& X, const Grid& Y) {
    int d = static_cast<int>(X.size());
    Grid Z(d, std::vector<GradedPoly>(d));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            if (X[i][k].is_zero()) continue;
            for (int j = 0; j < d; ++j)
                Z[i][j] = Z[i][j] + X[i][k] * Y[k][j];
        }
    return Z;
}

Grid grid_add(const Grid& X, const Grid& Y) {
    int d = static_cast<int>(X.size());
    Grid Z(d, std::vector<GradedPoly>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) Z[i][j] = X[i][j] + Y[i][j];
    return Z;
}

bool grid_equal(const Grid& X, const Grid& Y) {
    int d = static_cast<int>(X.size());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!(X[i][j] == Y[i][j])) return false;
    return true;
}

// Entrywise Serre derivative; P entries are homogeneous by construction.
Grid grid_derive(const Grid& X) {
    int d = static_cast<int>(X.size());
    Grid Z(d, std::vector<GradedPoly>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) Z[i][j] = serre_derive(X[i][j]);
    return Z;
}

// P = I + N with N nilpotent in weight order; P^{-1} = I - N + N^2 - ...
Grid grid_inverse_unipotent(const Grid& P, const BlockShape& sh) {
    int d = static_cast<int>(P.size());
    Grid N(d, std::vector<GradedPoly>(d));
    bool nonzero = false;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j) {
                N[i][j] = P[i][j];
                if (!N[i][j].is_zero()) nonzero = true;
            }
    Grid inv = Transformation::identity(sh).entries;
    if (!nonzero) return inv;
    Grid power = N;
    int sign = -1;
    for (int step = 0; step < sh.r(); ++step) {
        bool any = false;
        for (int i = 0; i < d && !any; ++i)
            for (int j = 0; j < d && !any; ++j)
                if (!power[i][j].is_zero()) any = true;
        if (!any) break;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                inv[i][j] = sign > 0 ? inv[i][j] + power[i][j]
                                     : inv[i][j] - power[i][j];
        power = grid_mul(power, N);
        sign = -sign;
    }
    return inv;
}

struct DiagonalScheduleState {
    // caps[g] for diagonals g = 1..r-1 (entry weight 2g+2); <= 0 means the
    // diagonal is already E6-free.
    std::vector<int> caps;
};

int diag_e6_degree(const DMatrix& A, int g) {
    int deg = kE6DegreeNegInf;
    const BlockShape& sh = A.shape;
    for (int p = 0; p + g < sh.r(); ++p) {
        int q = p + g;
        for (int i = sh.block_start(p); i < sh.block_start(p) + sh.mults[p]; ++i)
            for (int j = sh.block_start(q); j < sh.block_start(q) + sh.mults[q]; ++j)
                deg = std::max(deg, e6_degree(A.entries[i][j]));
    }
    return deg;
}

void assert_caps(const DMatrix& A, const DiagonalScheduleState& st) {
    for (int g = 1; g < A.shape.r(); ++g) {
        int deg = diag_e6_degree(A, g);
        int cap = std::max(st.caps[g], 0);
        if (deg > cap)
            throw CapViolation("diagonal of weight " + std::to_string(2 * g + 2) +
                               " has E6-degree " + std::to_string(deg) +
                               " above its cap " + std::to_string(cap));
    }
}

// One degree step on the weight-(2g+2) diagonal: cancel every top monomial
// E4^u E6^v with v = the diagonal's current cap.
void reduce_diagonal_step(DMatrix& A, Transformation& P, int g, int v) {
    const BlockShape sh = A.shape;
    int w = 2 * g + 2;
    int u4 = w - 6 * v;
    if (v < 1 || u4 < 0 || u4 % 4 != 0)
        throw InternalInconsistency("bad cancellation target");
    int u = u4 / 4;
    for (int p = 0; p + g < sh.r(); ++p) {
        int q = p + g;
        for (int i = sh.block_start(p); i < sh.block_start(p) + sh.mults[p]; ++i)
            for (int j = sh.block_start(q); j < sh.block_start(q) + sh.mults[q]; ++j) {
                Rational alpha = A.entries[i][j].coeff(u, v);
                if (alpha == 0) continue;
                Rational c = Rational(-3) * alpha / Rational(u + 1);
                GradedPoly h = GradedPoly::monomial(u + 1, v - 1, c);
                elementary_replacement(A, i, j, h);
                // P accumulates I - h E_{ij} on the right.
                for (int row = 0; row < sh.dimension(); ++row)
                    P.entries[row][j] = P.entries[row][j] - P.entries[row][i] * h;
            }
    }
}

}  // namespace

std::pair<DMatrix, Transformation> reduce_e6(const DMatrix& A) {
    A.validate();
    DMatrix work = A;
    Transformation P = Transformation::identity(A.shape);
    const int r = A.shape.r();
    DiagonalScheduleState st;
    st.caps.assign(std::max(r, 1), 0);
    bool anything = false;
    for (int g = 1; g < r; ++g) {
        st.caps[g] = natural_e6_cap(2 * g + 2);
        if (diag_e6_degree(work, g) > 0) anything = true;
    }
    if (!anything) return {work, P};

    const int wmax = 2 * (r - 1) + 2;
    for (int t = 1; 6 * t - 2 * t <= wmax + 6; ++t) {
        // Phase A: the weight-6t diagonal, from degree t to t-2.
        int wA = 6 * t;
        if (wA <= wmax) {
            int g = wA / 2 - 1;
            if (st.caps[g] >= 1) {
                if (st.caps[g] != t)
                    throw InternalInconsistency("phase A cap drift at weight " +
                                                std::to_string(wA));
                reduce_diagonal_step(work, P, g, st.caps[g]);
                st.caps[g] -= 2;
                assert_caps(work, st);
            }
        }
        // Phase B: weights 6t-2 down to 4t+2, one degree step each.
        for (int w = std::min(6 * t - 2, wmax); w >= 4 * t + 2; w -= 2) {
            int g = w / 2 - 1;
            if (g < 1 || g >= r) continue;
            if (st.caps[g] < 1) continue;
            reduce_diagonal_step(work, P, g, st.caps[g]);
            st.caps[g] -= 2;
            assert_caps(work, st);
        }
        bool done = true;
        for (int g = 1; g < r; ++g)
            if (st.caps[g] > 0) done = false;
        if (done) break;
    }
    for (int g = 1; g < r; ++g)
        if (diag_e6_degree(work, g) > 0)
            throw CapViolation("reduction finished with E6 left on the weight " +
                               std::to_string(2 * g + 2) + " diagonal");
    work.validate();
    return {work, P};
}

bool conjugation_check(const DMatrix& A, const DMatrix& A_prime,
                       const Transformation& P) {
    const BlockShape& sh = A.shape;
    Grid inv = grid_inverse_unipotent(P.entries, sh);
    Grid lhs = grid_add(grid_mul(inv, grid_mul(A.entries, P.entries)),
                        grid_mul(inv, grid_derive(P.entries)));
    return grid_equal(lhs, A_prime.entries);
}

DMatrix random_dmatrix(const BlockShape& shape, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    // Raw engine arithmetic keeps the stream platform-independent.
    auto draw = [&gen](long lo, long hi) {
        return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    DMatrix A = DMatrix::zero(shape);
    int d = shape.dimension();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int w = shape.entry_weight(i, j);
            if (w < 0) continue;
            bool subdiagonal = shape.block_of(i) == shape.block_of(j) + 1;
            for (auto [e4, e6] : weight_basis(w)) {
                long num = draw(-9, 9);
                if (subdiagonal && num == 0) num = draw(1, 9);
                long den = draw(1, 4);
                if (num == 0) continue;
                A.entries[i][j] =
                    A.entries[i][j] +
                    GradedPoly::monomial(e4, e6, make_rational(num, den));
            }
        }
    A.validate();
    return A;
}

std::optional<std::vector<Rational>> kernel_flat_vector(const DMatrix& A_reduced,
                                                        int j) {
    const BlockShape& sh = A_reduced.shape;
    if (j < 1 || j > sh.r())
        throw std::out_of_range("block index out of range");
    for (int a = 0; a < sh.dimension(); ++a)
        for (int b = 0; b < sh.dimension(); ++b)
            if (e6_degree(A_reduced.entries[a][b]) > 0)
                throw WeightMismatch("kernel check needs an E6-free matrix");
    std::vector<int> row_blocks;
    if (j + 1 <= sh.r()) row_blocks.push_back(j + 1);
    for (int p = j - 1; p >= 1; p -= 2) row_blocks.push_back(p);

    const int cols = sh.mults[j - 1];
    int rows = 0;
    for (int p : row_blocks) rows += sh.mults[p - 1];
    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols));
    int row = 0;
    for (int p : row_blocks) {
        int w = 2 * (j - p) + 2;
        int e4 = w / 4;  // weight divisible by 4 on all retained blocks
        for (int i = sh.block_start(p - 1);
             i < sh.block_start(p - 1) + sh.mults[p - 1]; ++i, ++row)
            for (int c = 0; c < cols; ++c)
                M[row][c] =
                    A_reduced.entries[i][sh.block_start(j - 1) + c].coeff(e4, 0);
    }

    // Gaussian elimination to reduced row echelon form.
    std::vector<int> pivot_col(rows, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int rr = rank; rr < rows; ++rr)
            if (M[rr][c] != 0) { piv = rr; break; }
        if (piv < 0) continue;
        std::swap(M[piv], M[rank]);
        Rational inv = M[rank][c];
        for (int cc = 0; cc < cols; ++cc) M[rank][cc] /= inv;
        for (int rr = 0; rr < rows; ++rr) {
            if (rr == rank || M[rr][c] == 0) continue;
            Rational f = M[rr][c];
            for (int cc = 0; cc < cols; ++cc) M[rr][cc] -= f * M[rank][cc];
        }
        pivot_col[rank] = c;
        ++rank;
    }
    if (rank >= cols) return std::nullopt;
    // First free column -> canonical kernel vector.
    std::vector<bool> is_pivot(cols, false);
    for (int rr = 0; rr < rank; ++rr) is_pivot[pivot_col[rr]] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = 1;
    for (int rr = 0; rr < rank; ++rr) v[pivot_col[rr]] = -M[rr][free_col];
    return v;
}

}  // namespace vvmf
