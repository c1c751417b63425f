#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "indhom/int_matrix.hpp"

namespace indhom {

// A sublattice of Z^N held as an echelon basis. Each basis vector may carry a
// payload vector (for example the remaining members of a zig-zag) that is
// transformed along with it, so coordinates found for an ambient vector can
// be replayed on the payload.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    // Generators are the rows of `generators`; columns [0, ambient_dim) are
    // the lattice coordinates, the rest is payload.
    static Lattice from_rows(const IntMatrix& generators, std::size_t ambient_dim);
    // Generators are the columns of `generators`; no payload.
    static Lattice from_columns(const IntMatrix& generators);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t payload_dim() const noexcept { return payload_dim_; }
    std::size_t rank() const noexcept { return pivots_.size(); }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    // Basis vector i (ambient part) and its payload.
    IntVector basis_vector(std::size_t i) const;
    IntVector basis_payload(std::size_t i) const;
    // Rows are basis vectors, ambient part only.
    IntMatrix basis_matrix() const;

    std::optional<IntVector> coordinates(std::span<const Integer> x) const;
    bool contains(std::span<const Integer> x) const { return coordinates(x).has_value(); }
    bool contains(const Lattice& other) const;
    IntVector combine(std::span<const Integer> coords) const;
    IntVector combine_payload(std::span<const Integer> coords) const;

    // Sum of two lattices in the same ambient space (payload dropped).
    static Lattice sum(const Lattice& a, const Lattice& b);

private:
    std::size_t ambient_dim_ = 0;
    std::size_t payload_dim_ = 0;
    IntMatrix rows_;  // rank x (ambient + payload), echelon on the ambient part
    std::vector<std::size_t> pivots_;
};

// Finitely generated abelian group Z^free ⊕ Z/t1 ⊕ ... with t1 | t2 | ...,
// plus an ambient representative for each generator (torsion generators
// first, then free ones).
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    std::vector<IntVector> generators;
    std::size_t ambient_dim = 0;

    std::size_t generator_count() const noexcept { return free_rank + torsion.size(); }
    bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }
    // Same isomorphism type (generators ignored).
    bool isomorphic(const AbelianGroup& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
    // "0", "Z^2", "Z/2 + Z^3", ...
    std::string to_string() const;
    std::string to_unicode() const;
};

// numerator / denominator for a pair of lattices with denominator inside
// numerator, with maps in both directions between ambient vectors and
// coordinates in the quotient's generators.
class Subquotient {
public:
    Subquotient() = default;
    // Throws ContractViolation when a denominator generator is outside the
    // numerator lattice.
    Subquotient(Lattice numerator, const std::vector<IntVector>& denominator_generators);

    const AbelianGroup& group() const noexcept { return group_; }
    const Lattice& numerator() const noexcept { return numerator_; }
    std::size_t generator_count() const noexcept { return group_.generator_count(); }

    // Coordinates of the class of x (torsion coordinates reduced into
    // [0, t)). Throws ContractViolation if x is not in the numerator.
    IntVector project(std::span<const Integer> x) const;
    // True when x lies in the numerator and its class is zero.
    bool is_trivial_class(std::span<const Integer> x) const;
    // An ambient representative of the class with the given coordinates.
    IntVector lift(std::span<const Integer> coords) const;
    // The numerator payload carried by lift(coords).
    IntVector lift_payload(std::span<const Integer> coords) const;
    const IntVector& generator(std::size_t g) const { return group_.generators[g]; }
    const IntVector& generator_payload(std::size_t g) const { return payloads_[g]; }

    // Order of each generator; 0 for free ones.
    const std::vector<Integer>& moduli() const noexcept { return moduli_; }
    // Reduces torsion coordinates into canonical residues.
    IntVector normalize(IntVector coords) const;

private:
    Lattice numerator_;
    AbelianGroup group_;
    IntMatrix projector_;              // generator_count x numerator.rank()
    std::vector<Integer> moduli_;      // per generator; 0 for free
    std::vector<IntVector> lift_coords_;  // numerator coordinates of each generator
    std::vector<IntVector> payloads_;
};

// Invariant factors of a direct sum.
AbelianGroup direct_sum(const std::vector<AbelianGroup>& parts);

// K / B for generating matrices whose columns span the lattices.
Subquotient subquotient(const IntMatrix& numerator_columns, const IntMatrix& denominator_columns);

}  // namespace indhom
