#pragma once

// Integer row echelon reduction, the kernel every lattice computation in the
// library bottoms out in. Two implementations share one contract: the
// serial one is the reference, the OpenMP one distributes the row updates of
// each elimination round across threads. Both perform the same sequence of
// unimodular row operations, so their outputs are identical.

#include <cstddef>
#include <vector>

#include "indhom/int_matrix.hpp"

namespace indhom {

enum class Exec { serial, parallel };

struct EchelonResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

// Reduces `m` in place by unimodular row operations, choosing pivots only in
// the key columns [0, key_cols). Columns past key_cols are carried along as
// payload. Afterwards rows [0, rank) have a positive leading key entry at
// pivot_cols[i] (strictly increasing) and rows [rank, rows) vanish on the key
// columns. Pivot choice: smallest absolute value, ties to the lowest row.
EchelonResult echelon_reduce(IntMatrix& m, std::size_t key_cols, Exec exec = Exec::parallel);
inline EchelonResult echelon_reduce(IntMatrix& m, Exec exec = Exec::parallel) {
    return echelon_reduce(m, m.cols(), exec);
}

// Process-wide default used by the higher layers; the CLI's --jobs and the
// benchmark flip it.
void set_default_exec(Exec exec);
Exec default_exec();

}  // namespace indhom
