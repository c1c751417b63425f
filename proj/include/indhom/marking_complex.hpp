#pragma once

// The double complex of markings. A marking m : V -> {0,1,2} has an
// r-independent support V1 ∪ V2 and lives in T_{i,j}, i = |V1| + |V2|,
// j = |V2|. Both differentials act on one 1-marked vertex v with sign
// (-1)^{#{w in V1 : w < v}}: d sends it to 0 (bidegree (-1,0)), δ sends it
// to 2 (bidegree (0,+1)).

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "indhom/chain_complex.hpp"
#include "indhom/graph.hpp"
#include "indhom/int_matrix.hpp"

namespace indhom {

class Marking {
public:
    Marking() = default;
    Marking(int n, VertexMask ones, VertexMask twos);
    // Dense codes, one per vertex.
    explicit Marking(const std::vector<int>& codes);

    int vertex_count() const noexcept { return static_cast<int>(codes_.size()); }
    int value(Vertex v) const { return codes_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::uint8_t>& codes() const noexcept { return codes_; }
    VertexMask ones() const noexcept { return ones_; }
    VertexMask twos() const noexcept { return twos_; }
    VertexSet V1() const { return VertexSet::from_mask(ones_); }
    VertexSet V2() const { return VertexSet::from_mask(twos_); }
    VertexMask support() const noexcept { return ones_ | twos_; }
    int i() const noexcept;
    int j() const noexcept;

    std::string to_string() const;  // "(1,0,2)"

    friend bool operator==(const Marking& a, const Marking& b) { return a.ones_ == b.ones_ && a.twos_ == b.twos_; }

private:
    std::vector<std::uint8_t> codes_;
    VertexMask ones_ = 0, twos_ = 0;
};

// (-1)^{#{w in ones : w < v}}
inline int marking_sign(VertexMask ones, Vertex v) {
    const VertexMask below = ones & ((VertexMask{1} << v) - 1);
    return __builtin_popcountll(below) % 2 ? -1 : 1;
}

// Sparse images of a single marking.
std::vector<std::pair<Marking, int>> apply_d(const Marking& m);
std::vector<std::pair<Marking, int>> apply_delta(const Marking& m);

struct BuildOptions {
    bool verify_identities = true;
};

class BigradedComplex {
public:
    // Enumerates all bases T_{i,j}, 0 <= j <= i <= alpha_r, ordered
    // lexicographically by (V2, V1), and assembles d and δ. With
    // verify_identities, d² = δ² = dδ + δd = 0 is checked and a failure
    // throws ContractViolation naming the bidegree and basis labels.
    BigradedComplex(const Graph& g, int r, BuildOptions opts = {});

    const Graph& graph() const noexcept { return g_; }
    int r() const noexcept { return r_; }
    int top() const noexcept { return top_; }  // alpha_r(G)

    std::size_t dim(int i, int j) const;
    const std::vector<Marking>& basis(int i, int j) const;
    std::optional<std::size_t> index_of(int i, int j, const Marking& m) const;
    // Basis vector e_m of T_{i,j}.
    IntVector unit(const Marking& m) const;

    // T_{i,j} -> T_{i-1,j} and T_{i,j} -> T_{i,j+1}. Correctly shaped for
    // 0 <= i, j <= top + 1; further out both sides are zero and 0 x 0 is
    // returned.
    const IntMatrix& d(int i, int j) const;
    const IntMatrix& delta(int i, int j) const;

    // Empty when all three identities hold; otherwise a description of the
    // first violation.
    std::optional<std::string> identity_failure() const;

private:
    struct Cell {
        std::vector<Marking> basis;
        std::unordered_map<std::uint64_t, std::size_t> index;
        IntMatrix d, delta;
    };
    const Cell* cell(int i, int j) const;

    Graph g_;
    int r_ = 1;
    int top_ = 0;
    // [i][j] for 0 <= i, j <= top + 1; cells with j > i or i > top are
    // empty but keep correctly shaped matrices.
    std::vector<std::vector<Cell>> cells_;
};

// Total complex T_n = ⊕_{i-j=n} T_{i,j}, D = d + δ. Blocks within T_n are
// ordered by increasing j; ChainBlock names are "T(i,j)".
ChainComplex total_complex(const BigradedComplex& b);
// Offset of T_{i,j} inside T_{i-j} of total_complex.
std::size_t total_offset(const BigradedComplex& b, int i, int j);

// (T_{•,j}, d), graded by i.
ChainComplex column_complex(const BigradedComplex& b, int j);
// (T_{i,•}, δ), graded by i - j so that δ lowers degree.
ChainComplex row_complex(const BigradedComplex& b, int i);

// One summand of the r = 1 splitting: markings with V2 = U correspond to
// independent sets of G - N[U] via their 1-marked vertices.
struct SplittingSummand {
    VertexSet U;
    InducedSubgraph remainder;     // G - N[U]
    ChainComplex complex;          // augmented Ind complex of the remainder
    std::vector<std::size_t> offset_in_column;  // per summand degree
};

// Throws InputError for r >= 2 and ContractViolation if the column differential
// is not block diagonal over the summands or a block differs from the
// remainder's complex.
std::vector<SplittingSummand> splitting_decomposition(const BigradedComplex& b, int j);

struct RowCheck {
    int i = 0;
    bool pass = true;
    std::vector<std::pair<int, AbelianGroup>> groups;  // (j, H) nonzero only
    std::string detail;
};
// H(T_{i,•}, δ) must vanish except for Z at (0,0).
RowCheck delta_column_check(const BigradedComplex& b, int i);

}  // namespace indhom
