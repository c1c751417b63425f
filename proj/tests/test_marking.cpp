#include <doctest.h>

#include <random>

#include "indhom/chain_complex.hpp"
#include "indhom/error.hpp"
#include "indhom/families.hpp"
#include "indhom/marking_complex.hpp"
#include "oracles.hpp"

using namespace indhom;

namespace {

// d or δ of one marking from the definition: every 1-marked v is relabelled,
// sign (-1)^(number of 1-marked vertices before v).
std::vector<std::pair<std::vector<int>, int>> naive_apply(const std::vector<int>& codes, int to) {
    std::vector<std::pair<std::vector<int>, int>> out;
    int ones_before = 0;
    for (std::size_t v = 0; v < codes.size(); ++v) {
        if (codes[v] != 1) continue;
        std::vector<int> img = codes;
        img[v] = to;
        out.emplace_back(img, ones_before % 2 ? -1 : 1);
        ++ones_before;
    }
    return out;
}

IntVector column_of(const IntMatrix& m, std::size_t c) { return m.column(c); }

std::vector<Graph> instance_set() {
    std::vector<Graph> out;
    for (int n = 1; n <= 8; ++n) out.push_back(families::path(n));
    for (int n = 3; n <= 8; ++n) out.push_back(families::cycle(n));
    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) out.push_back(families::erdos_renyi(3 + static_cast<int>(rng() % 5), 0.45, rng));
    return out;
}

}  // namespace

TEST_CASE("Marking basics") {
    Marking m(std::vector<int>{1, 0, 2});
    CHECK(m.i() == 2);
    CHECK(m.j() == 1);
    CHECK(m.V1() == VertexSet{0});
    CHECK(m.V2() == VertexSet{2});
    CHECK(m.to_string() == "(1,0,2)");
    CHECK(Marking(3, 0b001, 0b100) == m);
    CHECK(marking_sign(0b0101, 3) == 1);
    CHECK(marking_sign(0b0101, 2) == -1);
}

TEST_CASE("differentials on P3 markings") {
    BigradedComplex b(families::path(3), 1);
    SUBCASE("(1,0,1)") {
        Marking m(std::vector<int>{1, 0, 1});
        IntVector want_d = sub(b.unit(Marking(std::vector<int>{0, 0, 1})), b.unit(Marking(std::vector<int>{1, 0, 0})));
        CHECK(b.d(2, 0) * std::span<const Integer>(b.unit(m)) == want_d);
        IntVector want_delta =
            sub(b.unit(Marking(std::vector<int>{2, 0, 1})), b.unit(Marking(std::vector<int>{1, 0, 2})));
        CHECK(b.delta(2, 0) * std::span<const Integer>(b.unit(m)) == want_delta);
    }
    SUBCASE("(0,2,0)") {
        Marking m(std::vector<int>{0, 2, 0});
        CHECK(is_zero(b.d(1, 1) * std::span<const Integer>(b.unit(m))));
        CHECK(is_zero(b.delta(1, 1) * std::span<const Integer>(b.unit(m))));
        CHECK(apply_d(m).empty());
        CHECK(apply_delta(m).empty());
    }
}

TEST_CASE("bases and matrices agree with the definition") {
    for (const Graph& g : instance_set()) {
        for (int r = 1; r <= 2; ++r) {
            BigradedComplex b(g, r);
            auto sets = oracle::independent_sets(g, r);
            for (int i = 0; i <= b.top(); ++i)
                for (int j = 0; j <= i; ++j) {
                    std::size_t n_i = 0;
                    for (auto s : sets) n_i += __builtin_popcountll(s) == i;
                    CHECK(b.dim(i, j) == oracle::binomial(static_cast<unsigned>(i), static_cast<unsigned>(j)) * n_i);
                    const auto& basis = b.basis(i, j);
                    for (std::size_t k = 1; k < basis.size(); ++k)
                        CHECK(std::pair(basis[k - 1].V2(), basis[k - 1].V1()) < std::pair(basis[k].V2(), basis[k].V1()));
                    for (std::size_t c = 0; c < basis.size(); ++c) {
                        std::vector<int> codes(basis[c].codes().begin(), basis[c].codes().end());
                        if (i >= 1 && j <= i - 1) {
                            IntVector want_d(b.dim(i - 1, j));
                            for (auto& [img, s] : naive_apply(codes, 0)) want_d[*b.index_of(i - 1, j, Marking(img))] += s;
                            CHECK(column_of(b.d(i, j), c) == want_d);
                        }
                        if (j + 1 <= i) {
                            IntVector want(b.dim(i, j + 1));
                            for (auto& [img, s] : naive_apply(codes, 2)) want[*b.index_of(i, j + 1, Marking(img))] += s;
                            CHECK(column_of(b.delta(i, j), c) == want);
                        }
                    }
                }
        }
    }
    CHECK(BigradedComplex(families::cycle(6), 1).dim(2, 1) == 18);
}

TEST_CASE("bicomplex identities on the instance set") {
    for (const Graph& g : instance_set())
        for (int r = 1; r <= 2; ++r) {
            BuildOptions off;
            off.verify_identities = false;
            BigradedComplex b(g, r, off);
            CHECK_FALSE(b.identity_failure().has_value());
            for (int i = 0; i <= b.top() + 1; ++i)
                for (int j = 0; j <= b.top() + 1; ++j) {
                    if (i >= 2) CHECK((b.d(i - 1, j) * b.d(i, j)).is_zero());
                    if (j >= 1) CHECK((b.delta(i, j) * b.delta(i, j - 1)).is_zero());
                    if (i >= 1 && j <= b.top()) {
                        IntMatrix a = b.delta(i - 1, j) * b.d(i, j);
                        IntMatrix c = b.d(i, j + 1) * b.delta(i, j);
                        CHECK((a + c).is_zero());
                    }
                }
        }
}

TEST_CASE("total complex") {
    SUBCASE("Petersen degree range and D^2 = 0 on C6") {
        BigradedComplex p(families::petersen(), 1);
        ChainComplex t = total_complex(p);
        CHECK(t.min_degree() == 0);
        CHECK(t.max_degree() == 4);
        ChainComplex c6 = total_complex(BigradedComplex(families::cycle(6), 1));
        for (int n = c6.min_degree() + 2; n <= c6.max_degree(); ++n)
            CHECK((c6.boundary(n - 1) * c6.boundary(n)).is_zero());
    }
    SUBCASE("single vertex is acyclic") {
        GradedHomology h = homology(total_complex(BigradedComplex(families::complete(1), 1)));
        CHECK(h.at(0).free_rank == 1);
        for (int n = h.min_degree; n <= h.max_degree(); ++n)
            if (n != 0) CHECK(h.at(n).is_zero());
    }
    SUBCASE("acyclic on the instance set") {
        for (const Graph& g : instance_set())
            for (int r = 1; r <= 2; ++r) {
                GradedHomology h = homology_groups(total_complex(BigradedComplex(g, r)));
                for (int n = h.min_degree; n <= h.max_degree(); ++n) {
                    if (n == 0)
                        CHECK((h.at(0).free_rank == 1 && h.at(0).torsion.empty()));
                    else
                        CHECK(h.at(n).is_zero());
                }
            }
    }
    SUBCASE("block offsets") {
        BigradedComplex b(families::cycle(5), 1);
        ChainComplex t = total_complex(b);
        CHECK(total_offset(b, 0, 0) == 0);
        CHECK(total_offset(b, 1, 1) == b.dim(0, 0));
        CHECK(total_offset(b, 2, 2) == b.dim(0, 0) + b.dim(1, 1));
        CHECK(total_offset(b, 1, 0) == 0);
        CHECK(total_offset(b, 2, 1) == b.dim(1, 0));
        CHECK(t.rank(0) == b.dim(0, 0) + b.dim(1, 1) + b.dim(2, 2));
    }
}

TEST_CASE("column and row complexes") {
    SUBCASE("column 0 is the independence complex") {
        for (const Graph& g : instance_set())
            for (int r = 1; r <= 2; ++r) {
                BigradedComplex b(g, r);
                ChainComplex col = column_complex(b, 0), ind = independence_chain_complex(g, r);
                REQUIRE(col.max_degree() == ind.max_degree());
                for (int n = 1; n <= ind.max_degree(); ++n) CHECK(col.boundary(n) == ind.boundary(n));
            }
    }
    SUBCASE("top column carries the maximum sets") {
        BigradedComplex b(families::petersen(), 1);
        GradedHomology h = homology_groups(column_complex(b, 4));
        CHECK(h.at(4).free_rank == 5);
        CHECK(h.support() == std::vector<int>{4});
    }
    SUBCASE("delta rows") {
        BigradedComplex b(families::path(3), 1);
        RowCheck r0 = delta_column_check(b, 0);
        CHECK(r0.pass);
        REQUIRE(r0.groups.size() == 1);
        CHECK(r0.groups[0].second.free_rank == 1);
        CHECK(delta_column_check(b, 1).groups.empty());
        CHECK(delta_column_check(b, 2).groups.empty());
        for (const Graph& g : instance_set())
            for (int r = 1; r <= 2; ++r) {
                BigradedComplex bb(g, r);
                for (int i = 0; i <= bb.top(); ++i) CHECK(delta_column_check(bb, i).pass);
            }
    }
}

TEST_CASE("splitting decomposition") {
    SUBCASE("C6") {
        BigradedComplex b(families::cycle(6), 1);
        auto j1 = splitting_decomposition(b, 1);
        CHECK(j1.size() == 6);
        for (const auto& s : j1) {
            CHECK(s.remainder.graph.vertex_count() == 3);
            CHECK(s.remainder.graph.edge_count() == 2);
        }
        auto j2 = splitting_decomposition(b, 2);
        REQUIRE(j2.size() == 9);
        int singles = 0, empties = 0;
        for (const auto& s : j2) {
            singles += s.remainder.graph.vertex_count() == 1;
            empties += s.remainder.graph.vertex_count() == 0;
        }
        CHECK(singles == 6);
        CHECK(empties == 3);
        auto j0 = splitting_decomposition(b, 0);
        REQUIRE(j0.size() == 1);
        CHECK(j0[0].U.empty());
    }
    SUBCASE("Petersen j = 1 gives ten hexagons") {
        BigradedComplex b(families::petersen(), 1);
        auto parts = splitting_decomposition(b, 1);
        CHECK(parts.size() == 10);
        for (const auto& s : parts) {
            const Graph& h = s.remainder.graph;
            CHECK(h.vertex_count() == 6);
            CHECK(h.edge_count() == 6);
            for (int v = 0; v < 6; ++v) CHECK(h.degree(v) == 2);
        }
    }
    SUBCASE("r = 2 is refused") {
        BigradedComplex b(families::cycle(4), 2);
        CHECK_THROWS_AS(splitting_decomposition(b, 1), InputError);
    }
}
