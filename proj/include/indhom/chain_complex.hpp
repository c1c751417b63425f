#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "indhom/graph.hpp"
#include "indhom/int_matrix.hpp"
#include "indhom/lattice.hpp"

namespace indhom {

// A summand of a direct sum: which degrees it occupies and where its basis
// starts inside each degree of the sum.
struct ChainBlock {
    std::string name;
    int min_degree = 0;
    std::vector<std::size_t> offsets;  // per degree of the block, from min_degree
    std::vector<std::size_t> sizes;
};

// Free Z-modules C_lo..C_hi with labeled bases and boundaries C_n -> C_{n-1}.
class ChainComplex {
public:
    ChainComplex() = default;
    // labels[k] is the basis of C_{min_degree+k}; boundaries[k] maps
    // C_{min_degree+k+1} to C_{min_degree+k}. With `verify`, dimensions
    // and the relation boundary(n-1) * boundary(n) = 0 are checked
    // (ContractViolation on failure).
    ChainComplex(int min_degree, std::vector<std::vector<std::string>> labels, std::vector<IntMatrix> boundaries,
                 bool verify = true);

    int min_degree() const noexcept { return min_; }
    int max_degree() const noexcept { return min_ + static_cast<int>(labels_.size()) - 1; }
    bool empty() const noexcept { return labels_.empty(); }
    std::size_t rank(int n) const;
    const std::vector<std::string>& labels(int n) const;
    // dim C_{n-1} x dim C_n, zero outside the stored range.
    IntMatrix boundary(int n) const;
    const IntMatrix& stored_boundary(int n) const;  // n in (min, max]

    const std::vector<ChainBlock>& blocks() const noexcept { return blocks_; }
    void set_blocks(std::vector<ChainBlock> b) { blocks_ = std::move(b); }

    // Throws ContractViolation naming the first degree where dd != 0.
    void verify() const;

private:
    int min_ = 0;
    std::vector<std::vector<std::string>> labels_;
    std::vector<IntMatrix> boundaries_;
    std::vector<ChainBlock> blocks_;
};

// H_n for each degree of a complex. When built with representatives,
// quotient(n) is ker / im with ambient cycles as generators.
struct GradedHomology {
    int min_degree = 0;
    std::vector<AbelianGroup> groups;
    std::vector<Subquotient> quotients;  // empty for the rank-only route

    int max_degree() const noexcept { return min_degree + static_cast<int>(groups.size()) - 1; }
    AbelianGroup at(int n) const;
    bool has_representatives() const noexcept { return !quotients.empty(); }
    const Subquotient& quotient(int n) const;
    // Degrees with nonzero homology.
    std::vector<int> support() const;
};

// With representatives (kernel lattices, subquotients).
GradedHomology homology(const ChainComplex& c);
// Ranks and torsion only, from elementary divisors of the boundaries.
GradedHomology homology_groups(const ChainComplex& c);
// One degree with representatives.
Subquotient homology_at(const ChainComplex& c, int n);

// Augmented complex of Ind_r(G), degree-shifted: degree i has the
// r-independent sets of size i (degree 0 is the empty set), boundary
// I -> sum over v in I of (-1)^{#{w in I : w < v}} (I - v).
// H_n of it is the reduced homology of Ind_r(G) in degree n-1.
ChainComplex independence_chain_complex(const Graph& g, int r);

// Matrix of H(f): source generators -> target generators. Throws
// ContractViolation if f sends a source cycle outside the target cycles.
IntMatrix induced_map_on_homology(const IntMatrix& f, const Subquotient& source, const Subquotient& target);
IntMatrix induced_map_on_homology(const IntMatrix& f, const GradedHomology& source, const GradedHomology& target,
                                  int degree, int target_degree);

// Block-diagonal sum; each summand becomes one ChainBlock.
ChainComplex direct_sum(const std::vector<ChainComplex>& parts, const std::vector<std::string>& names = {});

// Sum over k of (-1)^k dim C_k.
long long euler_characteristic(const ChainComplex& c);
long long euler_characteristic(const GradedHomology& h);

}  // namespace indhom
