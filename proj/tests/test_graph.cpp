#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "indhom/error.hpp"
#include "indhom/families.hpp"
#include "indhom/graph.hpp"
#include "indhom/graph_io.hpp"
#include "oracles.hpp"

using namespace indhom;

TEST_CASE("VertexSet") {
    VertexSet s{4, 0, 2};
    CHECK(s.vertices() == std::vector<Vertex>{0, 2, 4});
    CHECK(s.mask() == 0b10101u);
    CHECK(VertexSet::from_mask(0b10101) == s);
    CHECK(s.to_string() == "{0,2,4}");
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(1));
    CHECK_THROWS_AS(VertexSet({1, 1}), InputError);
    CHECK_THROWS_AS(VertexSet({-1}), InputError);
    CHECK(VertexSet{0, 5} < VertexSet{1});
}

TEST_CASE("Graph construction") {
    Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
    CHECK(Graph(3, {{0, 1}}) == Graph(3, {{1, 0}}));
    CHECK_FALSE(Graph(3, {{0, 1}}) == Graph(3, {{1, 2}}));
}

TEST_CASE("neighbourhoods and vertex deletion") {
    Graph c6 = families::cycle(6);
    CHECK(closed_neighborhood(c6, VertexSet{0}) == VertexSet{0, 1, 5});
    CHECK(open_neighborhood(c6, VertexSet{0, 3}) == VertexSet{1, 2, 4, 5});
    InducedSubgraph rest = delete_vertices(c6, closed_neighborhood(c6, VertexSet{0}));
    CHECK(rest.graph == families::path(3));
    CHECK(rest.original == std::vector<Vertex>{2, 3, 4});
    CHECK(rest.relabel[0] == -1);
    CHECK(rest.relabel[3] == 1);
}

TEST_CASE("enumeration agrees with brute force") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + static_cast<int>(rng() % 9);
        Graph g = families::erdos_renyi(n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
        for (int r = 1; r <= 3; ++r) {
            auto masks = enumerate_r_independent_masks(g, r);
            std::vector<std::uint64_t> got(masks.begin(), masks.end()), want = oracle::independent_sets(g, r);
            std::sort(got.begin(), got.end());
            CHECK(got == want);
            auto sets = enumerate_r_independent_sets(g, r);
            CHECK(std::is_sorted(sets.begin(), sets.end()));
            CHECK(sets.front().empty());
            for (const auto& s : sets) CHECK(is_r_independent(g, s, r) == oracle::r_independent(g, s.mask(), r));

            IndependenceCensus census = maximal_r_independent_census(g, r);
            auto maximal = oracle::maximal_sets(g, r);
            CHECK(census.maximal_sets.size() == maximal.size());
            std::size_t total = 0;
            for (const auto& [p, cnt] : census.maximal_by_size) total += cnt;
            CHECK(total == maximal.size());
            for (const auto& s : census.maximal_sets)
                CHECK(std::find(maximal.begin(), maximal.end(), s.mask()) != maximal.end());
            int alpha = 0;
            for (auto s : want) alpha = std::max(alpha, __builtin_popcountll(s));
            CHECK(census.independence_number == alpha);
        }
    }
}

TEST_CASE("census of small named graphs") {
    IndependenceCensus c6 = maximal_r_independent_census(families::cycle(6), 1);
    CHECK(c6.count(2) == 3);
    CHECK(c6.count(3) == 2);
    CHECK(c6.count(1) == 0);
    IndependenceCensus pet = maximal_r_independent_census(families::petersen(), 1);
    CHECK(pet.independence_number == 4);
    CHECK(pet.count(4) == 5);
    CHECK(pet.count(3) == 10);
    IndependenceCensus k1c4 = maximal_r_independent_census(families::from_spec("complete:1+cycle:4"), 1);
    CHECK(k1c4.count(2) == 0);
    CHECK(k1c4.count(3) == 2);
    CHECK(maximal_r_independent_census(Graph(), 1).count(0) == 1);
    CHECK(enumerate_r_independent_sets(families::cycle(4), 2, 2).size() == 6);
    CHECK(enumerate_r_independent_sets(families::cycle(4), 2, 3).empty());
    CHECK(enumerate_r_independent_sets(families::cycle(5), 2, 3).size() == 5);
}

TEST_CASE("families") {
    CHECK(families::path(7).edge_count() == 6);
    CHECK(families::cycle(5).adjacent(4, 0));
    CHECK_THROWS_AS(families::cycle(2), InputError);
    CHECK(families::complete(5).edge_count() == 10);
    CHECK(families::edgeless(4).edge_count() == 0);
    Graph p = families::petersen();
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    Graph q = families::cube_skeleton();
    CHECK(q.edge_count() == 12);
    CHECK(q.adjacent(0, 4));
    CHECK_FALSE(q.adjacent(0, 3));
    CHECK(families::ladder(4).edge_count() == 10);
    Graph u = families::from_spec("complete:1+cycle:4");
    CHECK(u.vertex_count() == 5);
    CHECK(u.degree(0) == 0);
    CHECK(u.adjacent(1, 4));
    CHECK(u.name() == "complete:1+cycle:4");
    CHECK(families::from_spec("cube") == q);
    CHECK_THROWS_AS(families::from_spec("hypercube:3"), InputError);
    CHECK_THROWS_AS(families::from_spec("path:x"), InputError);
    for (const Graph& g : families::cubic_catalogue())
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("erdos_renyi is reproducible and consumes n(n-1)/2 draws") {
    std::mt19937_64 a(42), b(42);
    Graph ga = families::erdos_renyi(8, 0.3, a);
    Graph gb = families::erdos_renyi(8, 0.3, b);
    CHECK(ga == gb);
    std::mt19937_64 c(42);
    c.discard(28);
    CHECK(a() == c());
    std::mt19937_64 d(1);
    CHECK(families::erdos_renyi(6, 0.0, d).edge_count() == 0);
    CHECK(families::erdos_renyi(6, 1.0, d).edge_count() == 15);
}

TEST_CASE("graph text format") {
    SUBCASE("round trip") {
        Graph g = families::petersen();
        std::istringstream in(graph_to_text(g));
        CHECK(read_graph(in) == g);
    }
    SUBCASE("comments and blank lines") {
        std::istringstream in("# P3\n\n3 2  # header\n0 1\n1 2 # last\n");
        CHECK(read_graph(in) == families::path(3));
    }
    auto err_line = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_graph(in);
        } catch (const ParseError& e) {
            return static_cast<long>(e.line());
        }
        return -1L;
    };
    CHECK(err_line("") >= 0);
    CHECK(err_line("3 2\n0 1\n") >= 0);
    CHECK(err_line("3 2\n0 1\n1 7\n") == 3);
    CHECK(err_line("3 1\n1 1\n") == 2);
    CHECK(err_line("3 1\n0 1 2\n") == 2);
    CHECK(err_line("3 1\n0 1\n1 2\n") == 3);
    CHECK(err_line("x y\n") == 1);
    SUBCASE("load_graph") {
        CHECK(load_graph("family:cycle:6") == families::cycle(6));
        CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt"), InputError);
        const std::string path = "test_graph_io_tmp.txt";
        {
            std::ofstream f(path);
            write_graph(f, families::path(4));
        }
        CHECK(load_graph(path) == families::path(4));
        std::remove(path.c_str());
    }
}
