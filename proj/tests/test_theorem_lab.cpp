#include <doctest.h>

#include <random>
#include <sstream>

#include "indhom/error.hpp"
#include "indhom/families.hpp"
#include "indhom/graph_io.hpp"
#include "indhom/theorem_lab.hpp"
#include "oracles.hpp"

using namespace indhom;

namespace {
bool is_free(const AbelianGroup& g, std::size_t k) { return g.free_rank == k && g.torsion.empty(); }
}  // namespace

TEST_CASE("diagonal census") {
    CHECK(diagonal_census_check(families::cycle(6)).pass);
    CHECK(diagonal_census_check(families::petersen()).pass);
    CHECK(diagonal_census_check(families::complete(1)).pass);
    CHECK(diagonal_census_check(families::cycle(5), 2).pass);
    // n_p = 0 iff E1_{p,p} = 0, both directions
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        Graph g = families::erdos_renyi(2 + static_cast<int>(rng() % 7), 0.4, rng);
        BigradedComplex b(g, 1);
        Verdict v = diagonal_census_check(b);
        CHECK(v.pass);
    }
}

TEST_CASE("E2 diagonal and the proof witnesses") {
    SUBCASE("C6") {
        DiagonalE2Report rep = e2_diagonal_check(families::cycle(6));
        CHECK(rep.verdict.pass);
        CHECK(rep.witnesses.size() == 3);  // the three maximal pairs
        for (const auto& w : rep.witnesses) {
            CHECK(w.ok());
            CHECK(w.I.size() == 2);
            CHECK(w.I.contains(w.z));
            CHECK_FALSE(w.I.contains(w.x));
            CHECK(w.x < w.y);
            CHECK(w.mxy.twos() == ((w.I.mask() & ~(VertexMask{1} << w.z)) | (VertexMask{1} << w.x)));
        }
    }
    SUBCASE("Petersen") {
        DiagonalE2Report rep = e2_diagonal_check(families::petersen());
        CHECK(rep.verdict.pass);
        CHECK(rep.witnesses.size() == 10);
    }
    SUBCASE("all maximal sets maximum: nothing below alpha") {
        DiagonalE2Report rep = e2_diagonal_check(families::cycle(4));
        CHECK(rep.verdict.pass);
        CHECK(rep.witnesses.empty());
    }
    SUBCASE("random graphs") {
        std::mt19937_64 rng(21);
        for (int t = 0; t < 30; ++t) {
            Graph g = families::erdos_renyi(3 + static_cast<int>(rng() % 6), 0.4, rng);
            DiagonalE2Report rep = e2_diagonal_check(g);
            for (const auto& w : rep.witnesses) CHECK(w.ok());
            IndependenceCensus census = maximal_r_independent_census(g, 1);
            std::size_t below = 0;
            for (const auto& I : census.maximal_sets)
                if (static_cast<int>(I.size()) < census.independence_number) ++below;
            CHECK(rep.witnesses.size() + rep.no_witness.size() == below);
            CHECK(rep.verdict.pass == rep.nonzero.empty());
            // a nonzero entry needs a maximal set of that size without a swap
            for (int p : rep.nonzero) {
                bool found = false;
                for (const auto& I : rep.no_witness) found = found || static_cast<int>(I.size()) == p;
                CHECK(found);
            }
        }
    }
    SUBCASE("maximal set that needs a 2-for-3 swap") {
        // {0,2} is maximal, alpha = 5, and every z in it frees a single vertex
        Graph g(8, {{0, 1}, {0, 3}, {0, 4}, {0, 6}, {0, 7}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {2, 7}});
        BigradedComplex b(g, 1);
        CHECK_FALSE(diagonal_witness(b, VertexSet{0, 2}).has_value());
        DiagonalE2Report rep = e2_diagonal_check(g);
        CHECK(rep.verdict.pass);
        REQUIRE(rep.no_witness.size() == 1);
        CHECK(rep.no_witness[0] == VertexSet{0, 2});
        ConvergenceReport run = run_to_collapse(g, 1);
        CHECK(run.alpha == 5);
        CHECK(run.pages[1].at(2, 2).is_zero());
    }
    SUBCASE("K_{2,3}: a maximal pair with no swap survives to E2") {
        Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}, {4, 3}});
        DiagonalE2Report rep = e2_diagonal_check(g);
        CHECK_FALSE(rep.verdict.pass);
        CHECK(rep.nonzero == std::vector<int>{2});
        CHECK(rep.no_witness == std::vector<VertexSet>{VertexSet{0, 4}});
        ConvergenceReport run = run_to_collapse(g, 1);
        CHECK(is_free(run.pages[1].at(2, 2), 1));
        // it dies on the next page, from E_{1,0} = reduced H0 of an edge plus a triangle
        CHECK(run.pages[0].at(1, 0).free_rank == 1);
        CHECK(run.pages[2].at(2, 2).is_zero());
        CHECK(run.all_pass());
    }
    SUBCASE("r = 2 is skipped") {
        ConvergenceReport run = run_to_collapse(families::cycle(5), 2);
        CHECK(e2_diagonal_check(run).verdict.skipped);
    }
}

TEST_CASE("column vanishing") {
    SUBCASE("C6, p = 1") {
        ColumnCheck c = column_vanishing_check(families::cycle(6), 1);
        REQUIRE(c.applicable);
        CHECK(c.checks.size() == 6);
        CHECK(c.violations.empty());
        for (const auto& ch : c.checks) CHECK(ch.reduced_degree == -1);
    }
    SUBCASE("not applicable when n_p > 0") {
        CHECK_FALSE(column_vanishing_check(families::cycle(6), 2).applicable);
    }
    SUBCASE("P7") {
        VanishingReport rep = vanishing_report(families::path(7), 1);
        CHECK_FALSE(rep.empty_sizes.empty());
        CHECK(rep.pass());
        for (int p : rep.empty_sizes) CHECK(rep.census.at(p) == 0);
    }
    SUBCASE("K1 + C4 fails at p = 2, q = 1, U = {isolated vertex}") {
        Graph g = families::from_spec("complete:1+cycle:4");
        ColumnCheck c = column_vanishing_check(g, 2);
        REQUIRE(c.applicable);
        REQUIRE(c.violations.size() == 1);
        const VanishingCheck& v = c.violations[0];
        CHECK(v.q == 1);
        CHECK(v.U == VertexSet{0});
        CHECK(v.reduced_degree == 0);
        CHECK(v.group.free_rank == 1);
        CHECK(v.group.torsion.empty());
        // brute force: Ind(C4) is two disjoint edges, so reduced H0 has rank 1
        oracle::SimplicialHomology h = oracle::simplicial_homology(families::cycle(4), 1);
        CHECK(h.betti[1] == 1);
        for (std::size_t k = 0; k < h.betti.size(); ++k)
            if (k != 1) CHECK(h.betti[k] == 0);
        for (const auto& dims : h.mod_p) CHECK(dims == h.betti);
    }
    SUBCASE("paths and cycles up to 12 vertices") {
        for (int n = 1; n <= 12; ++n) CHECK(vanishing_report(families::path(n), 1).pass());
        for (int n = 3; n <= 12; ++n) CHECK(vanishing_report(families::cycle(n), 1).pass());
    }
    SUBCASE("r = 2 mode reads E1 entries") {
        VanishingReport rep = vanishing_report(families::cycle(6), 2);
        for (const auto& c : rep.checks) CHECK(c.U.empty());
    }
}

TEST_CASE("counterexample search") {
    SUBCASE("paths and cycles are clean") {
        SearchSpec s;
        s.family = "paths";
        s.max_n = 12;
        CHECK(search_counterexamples(s).violations.empty());
        s.family = "cycles";
        SearchResult c = search_counterexamples(s);
        CHECK(c.candidates == 10);
        CHECK(c.violations.empty());
    }
    SUBCASE("K1 + C_n sweep finds the C4 witness") {
        SearchSpec s;
        s.family = "disjoint-k1-cycles";
        s.max_n = 8;
        SearchResult res = search_counterexamples(s);
        CHECK(res.candidates == 5);
        REQUIRE_FALSE(res.violations.empty());
        const Violation& v = res.violations.front();
        CHECK(v.graph.name() == "complete:1+cycle:4");
        CHECK(v.p == 2);
        CHECK(v.q == 1);
        CHECK(v.U == VertexSet{0});
        CHECK(v.reverified);
        // the printed graph file reproduces the witness
        std::istringstream in(graph_to_text(v.graph));
        CHECK(column_vanishing_check(read_graph(in), 2).violations.size() == 1);
    }
    SUBCASE("random mode is deterministic") {
        SearchSpec s;
        s.family = "random";
        s.n = 8;
        s.p = 0.3;
        s.seed = 42;
        s.budget = 40;
        SearchResult a = search_counterexamples(s), b = search_counterexamples(s);
        CHECK(a.names == b.names);
        REQUIRE(a.violations.size() == b.violations.size());
        for (std::size_t i = 0; i < a.violations.size(); ++i) {
            CHECK(a.violations[i].graph == b.violations[i].graph);
            CHECK(a.violations[i].U == b.violations[i].U);
        }
        auto ca = search_candidates(s);
        std::mt19937_64 rng(42);
        for (const auto& g : ca) CHECK(g == families::erdos_renyi(8, 0.3, rng));
    }
    SUBCASE("limits") {
        SearchSpec s;
        s.family = "random";
        s.n = 11;
        CHECK_THROWS_AS(search_candidates(s), InputError);
        s.family = "ladders";
        s.max_n = 9;
        CHECK_THROWS_AS(search_candidates(s), InputError);
        s.family = "trees";
        CHECK_THROWS_AS(search_candidates(s), InputError);
        s.family = "ladders";
        s.max_n = 6;
        CHECK(search_counterexamples(s).violations.empty());
        s.family = "cubic";
        CHECK(search_candidates(s).size() == 5);
    }
}

TEST_CASE("path and cycle table") {
    auto rows = path_cycle_table(15);
    int paths = 0;
    for (const auto& row : rows) {
        if (row.family == "path") {
            ++paths;
            CHECK(row.closed_form_ok == true);
        } else {
            CHECK_FALSE(row.closed_form_ok.has_value());
        }
        if (row.family == "cycle" && row.n == 6) {
            REQUIRE(row.reduced.size() == 1);
            CHECK(row.reduced.at(1).free_rank == 2);
        }
        if (row.family == "path" && row.n == 4) CHECK(row.reduced.empty());
        if (row.family == "path" && row.n == 3) CHECK(row.reduced.at(0).free_rank == 1);
    }
    CHECK(paths == 15);
    CHECK(path_closed_form(8).at(2).free_rank == 1);
    CHECK(path_closed_form(7).empty());
    CHECK_THROWS_AS(path_cycle_table(16), InputError);
}

TEST_CASE("verification suite") {
    auto find = [](const std::vector<Verdict>& vs, const std::string& name) -> const Verdict* {
        for (const auto& v : vs)
            if (v.name == name) return &v;
        return nullptr;
    };
    std::vector<Verdict> p6 = verification_suite(families::path(6), 1);
    for (const auto& v : p6) CHECK_MESSAGE(v.pass, v.name << ": " << v.detail);
    for (const char* name : {"bicomplex identities", "delta rows are acyclic", "total complex is acyclic", "E1 splitting",
                             "diagonal census", "E2 diagonal vanishes below alpha"})
        CHECK(find(p6, name) != nullptr);
    std::vector<Verdict> c4 = verification_suite(families::cycle(4), 2);
    for (const auto& v : c4) CHECK(v.pass);
    REQUIRE(find(c4, "E1 splitting"));
    CHECK(find(c4, "E1 splitting")->skipped);
    CHECK(find(c4, "E1 splitting")->detail == "skipped (r≥2)");
}
