#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "indhom/graph.hpp"
#include "indhom/lattice.hpp"
#include "indhom/marking_complex.hpp"
#include "indhom/spectral.hpp"

namespace indhom {

// E^1_{p,p} ≅ Z^{n_p} for every p, n_p counting maximal r-independent sets
// of size p.
Verdict diagonal_census_check(const BigradedComplex& b);
Verdict diagonal_census_check(const Graph& g, int r = 1);

// Markings realizing [δ(m_z - m_x)] = [m_0] for a maximal, non-maximum
// independent set I (r = 1).
struct DiagonalWitness {
    VertexSet I;
    Vertex z = -1, x = -1, y = -1;
    Marking m0, mz, mx, mxy;
    bool d_closed = false;       // d(m_z - m_x) = 0
    bool class_nonzero = false;  // [m_z - m_x] != 0 in H_p(T_{•,p-1}, d)
    bool delta_m_x = false;      // δ m_x = d m_{x,y}
    bool hits_m0 = false;        // δ(m_z - m_x) - m_0 in im d
    bool ok() const { return d_closed && class_nonzero && delta_m_x && hits_m0; }
};

struct DiagonalE2Report {
    Verdict verdict;
    std::vector<DiagonalWitness> witnesses;
    // maximal non-maximum sets with no single-vertex swap z -> {x, y};
    // the vanishing itself is still checked on the page
    std::vector<VertexSet> no_witness;
    std::vector<int> nonzero;  // p < alpha with E^2_{p,p} != 0
};

// E^2_{p,p} = 0 for p < alpha plus one witness per maximal non-maximum I.
// Fails on any nonzero diagonal entry below alpha (K_{2,3} has one at (2,2)).
// Pass the page-2 data from a collapse run to avoid recomputing it.
DiagonalE2Report e2_diagonal_check(const ConvergenceReport& run);
DiagonalE2Report e2_diagonal_check(const Graph& g);
// The witness for one maximal set; nullopt if no admissible z, x, y exist.
std::optional<DiagonalWitness> diagonal_witness(const BigradedComplex& b, const VertexSet& maximal_set);

struct VanishingCheck {
    int p = 0, q = 0;
    VertexSet U;          // empty in the r >= 2 (E^1 side) mode
    int reduced_degree = 0;  // p - q - 1
    AbelianGroup group;
    bool zero = true;
};

struct VanishingReport {
    std::string graph;
    int r = 1;
    std::map<int, std::size_t> census;  // p -> n_p, p = 1..alpha
    std::vector<int> empty_sizes;       // p with n_p = 0
    std::vector<VanishingCheck> checks;
    std::vector<VanishingCheck> violations;
    bool pass() const { return violations.empty(); }
};

// For r = 1 and n_p = 0: every H~_{p-q-1}(Ind(G - N[U])), 0 < q <= p,
// |U| = q, should vanish. `applicable` is false when n_p != 0.
struct ColumnCheck {
    bool applicable = false;
    std::vector<VanishingCheck> checks;
    std::vector<VanishingCheck> violations;
};
ColumnCheck column_vanishing_check(const Graph& g, int p);

// Census plus column_vanishing_check for every p in 1..alpha with n_p = 0.
// For r >= 2 the predicate is checked on the E^1 side: E^1_{p,q} = 0 for
// 0 < q <= p (collected as data).
VanishingReport vanishing_report(const Graph& g, int r = 1);

struct Violation {
    Graph graph;
    int p = 0, q = 0;
    VertexSet U;
    AbelianGroup group;
    bool reverified = false;  // direct pipeline and E^1 side agree
};

struct SearchSpec {
    // "paths", "cycles", "disjoint-k1-cycles", "ladders", "cubic", "random"
    std::string family = "paths";
    int max_n = 12;
    int r = 1;
    // random mode
    int n = 8;
    double p = 0.3;
    std::uint64_t seed = 42;
    int budget = 100;
};

struct SearchResult {
    SearchSpec spec;
    std::size_t candidates = 0;
    std::vector<std::string> names;  // per candidate, in order
    std::vector<Violation> violations;  // ordered by candidate index
};

// Deterministic: candidates are generated in order, evaluated in
// parallel and merged by index. Every violation is re-checked with the
// representative-based homology of G - N[U] and with E^1_{p,q} of G before it
// is returned (ContractViolation if the two pipelines disagree).
SearchResult search_counterexamples(const SearchSpec& spec);
std::vector<Graph> search_candidates(const SearchSpec& spec);

struct TableRow {
    std::string family;  // "path" or "cycle"
    int n = 0;
    std::map<int, AbelianGroup> reduced;  // reduced degree -> nonzero group
    std::optional<bool> closed_form_ok;  // paths only
};

// Rows for P_1..P_nmax and C_3..C_nmax; throws ContractViolation if a path
// disagrees with the closed form (Z in reduced degree k-1 iff n = 3k-1 or 3k).
std::vector<TableRow> path_cycle_table(int n_max);
// The closed form itself.
std::map<int, AbelianGroup> path_closed_form(int n);

// Everything `verify` runs: bicomplex identities, δ rows, acyclicity,
// E^1 splitting, diagonal census, E^2 diagonal, and the collapse verdicts.
struct VerifyOptions {
    bool build_checks = true;
};
std::vector<Verdict> verification_suite(const Graph& g, int r, VerifyOptions opts = {});

}  // namespace indhom
