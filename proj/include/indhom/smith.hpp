#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "indhom/echelon.hpp"
#include "indhom/int_matrix.hpp"

namespace indhom {

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , di >= 0.
// The inverses are tracked alongside so callers never invert unimodular
// matrices themselves.
struct SmithForm {
    IntMatrix U, D, V;
    IntMatrix U_inv, V_inv;
    std::vector<Integer> diagonal;  // the first `rank` entries, all positive
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);
// Same diagonal, tracking only U and U_inv (V and V_inv are left empty).
SmithForm smith_normal_form_left(const IntMatrix& m);

// Elementary divisors only (no transforms): the nonzero diagonal of the SNF.
// Runs the echelon kernel first, so it copes with the large sparse boundary
// matrices where a transform-tracking SNF would be wasteful.
std::vector<Integer> elementary_divisors(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

// Some integer x with A x = b, or nullopt if none exists. The returned
// solution is V z where z_i = (U b)_i / d_i on the first `rank` SNF
// coordinates and 0 on the free ones.
std::optional<IntVector> solve(const IntMatrix& a, std::span<const Integer> b);
std::optional<IntVector> solve(const SmithForm& snf, std::span<const Integer> b);

// Columns form a Z-basis of ker A.
IntMatrix kernel_basis(const IntMatrix& a);
// Same basis, one vector per row.
IntMatrix kernel_rows(const IntMatrix& a);
// Columns form a Z-basis of the image lattice A Z^n.
IntMatrix image_basis(const IntMatrix& a);

}  // namespace indhom
