#include <doctest.h>

#include <random>

#include "indhom/chain_complex.hpp"
#include "indhom/error.hpp"
#include "indhom/families.hpp"
#include "indhom/marking_complex.hpp"
#include "indhom/smith.hpp"
#include "oracles.hpp"

using namespace indhom;

namespace {

// reduced degree -> group, nonzero only
std::map<int, AbelianGroup> reduced(const Graph& g, int r) {
    std::map<int, AbelianGroup> out;
    GradedHomology h = homology(independence_chain_complex(g, r));
    for (int n : h.support()) out[n - 1] = h.at(n);
    return out;
}

AbelianGroup free_group(std::size_t k) {
    AbelianGroup a;
    a.free_rank = k;
    return a;
}

bool only(const std::map<int, AbelianGroup>& h, int degree, std::size_t rank) {
    return h.size() == 1 && h.count(degree) && h.at(degree).isomorphic(free_group(rank));
}

}  // namespace

TEST_CASE("independence chain complex bases") {
    ChainComplex p3 = independence_chain_complex(families::path(3), 1);
    CHECK(p3.min_degree() == 0);
    CHECK(p3.max_degree() == 2);
    CHECK(p3.labels(0) == std::vector<std::string>{"{}"});
    CHECK(p3.labels(1) == std::vector<std::string>{"{0}", "{1}", "{2}"});
    CHECK(p3.labels(2) == std::vector<std::string>{"{0,2}"});
    CHECK(p3.boundary(2) == IntMatrix{{-1}, {0}, {1}});
    CHECK(p3.boundary(1) == IntMatrix{{1, 1, 1}});

    ChainComplex empty = independence_chain_complex(Graph(), 1);
    CHECK(empty.max_degree() == 0);
    GradedHomology h = homology(empty);
    CHECK(h.at(0).isomorphic(free_group(1)));

    // every pair of C4 is 2-independent, no triple is
    ChainComplex c4 = independence_chain_complex(families::cycle(4), 2);
    CHECK(c4.rank(2) == 6);
    CHECK(c4.max_degree() == 2);
}

TEST_CASE("homology of named graphs") {
    CHECK(only(reduced(families::path(3), 1), 0, 1));
    CHECK(only(reduced(families::cycle(6), 1), 1, 2));
    CHECK(only(reduced(families::petersen(), 1), 2, 4));
    CHECK(only(reduced(families::cube_skeleton(), 1), 1, 3));
    CHECK(only(reduced(families::cycle(4), 2), 1, 3));
    CHECK(only(reduced(families::cycle(5), 2), 1, 1));
    for (int n = 2; n <= 6; ++n) CHECK(only(reduced(families::complete(n), 1), 0, static_cast<std::size_t>(n - 1)));
    CHECK(reduced(families::path(4), 1).empty());
    CHECK(reduced(families::complete(1), 1).empty());
}

TEST_CASE("path closed form up to 15 vertices") {
    for (int n = 1; n <= 15; ++n) {
        auto h = reduced(families::path(n), 1);
        CAPTURE(n);
        if (n % 3 == 1) {
            CHECK(h.empty());
        } else {
            const int k = (n + 1) / 3;  // n = 3k or 3k - 1
            CHECK(only(h, k - 1, 1));
        }
    }
}

TEST_CASE("homology agrees with the rank oracle on random graphs") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + static_cast<int>(rng() % 8);
        Graph g = families::erdos_renyi(n, 0.35, rng);
        for (int r = 1; r <= 2; ++r) {
            GradedHomology h = homology(independence_chain_complex(g, r));
            GradedHomology hg = homology_groups(independence_chain_complex(g, r));
            oracle::SimplicialHomology o = oracle::simplicial_homology(g, r);
            REQUIRE(o.betti.size() == h.groups.size());
            for (std::size_t k = 0; k < o.betti.size(); ++k) {
                const AbelianGroup a = h.at(static_cast<int>(k));
                CHECK(a.isomorphic(hg.at(static_cast<int>(k))));
                CHECK(static_cast<long>(a.free_rank) == o.betti[k]);
                // dim H(F_p) = betti + #p-torsion summands in degree k and k-1
                for (std::size_t pi = 0; pi < o.primes.size(); ++pi) {
                    auto count_p = [&](int deg) {
                        long c = 0;
                        if (deg < 0) return c;
                        for (const auto& tt : h.at(deg).torsion) c += divides(Integer(o.primes[pi]), tt);
                        return c;
                    };
                    CHECK(o.mod_p[pi][k] == o.betti[k] + count_p(static_cast<int>(k)) + count_p(static_cast<int>(k) - 1));
                }
            }
            CHECK(euler_characteristic(independence_chain_complex(g, r)) == euler_characteristic(h));
            for (int k : h.support()) {
                const Subquotient& q = h.quotient(k);
                for (std::size_t i = 0; i < q.generator_count(); ++i)
                    CHECK(is_zero(independence_chain_complex(g, r).boundary(k) * std::span<const Integer>(q.generator(i))));
            }
        }
    }
}

TEST_CASE("chain complex validation") {
    // d1 * d2 != 0
    CHECK_THROWS_AS(ChainComplex(0, {{"a"}, {"b"}, {"c"}}, {IntMatrix{{1}}, IntMatrix{{1}}}), ContractViolation);
    CHECK_THROWS_AS(ChainComplex(0, {{"a"}, {"b", "c"}}, {IntMatrix{{1}}}), ContractViolation);
    ChainComplex c(0, {{"a"}, {"b"}}, {IntMatrix{{2}}});
    GradedHomology h = homology(c);
    CHECK(h.at(0).torsion == std::vector<Integer>{2});
    CHECK(h.at(1).is_zero());
    CHECK(c.boundary(5).rows() == 0);
}

TEST_CASE("induced maps on homology") {
    const Graph g = families::cycle(6);
    ChainComplex c = independence_chain_complex(g, 1);
    GradedHomology h = homology(c);
    const std::size_t dim = c.rank(2);
    SUBCASE("identity and zero") {
        IntMatrix id = induced_map_on_homology(IntMatrix::identity(dim), h, h, 2, 2);
        CHECK(id == IntMatrix::identity(2));
        CHECK(induced_map_on_homology(IntMatrix(dim, dim), h, h, 2, 2).is_zero());
    }
    SUBCASE("composition of chain automorphisms from the rotation") {
        // rotation v -> v+1 of C6 permutes independent sets; sign from reordering
        auto rotation = [&](int shift) {
            IntMatrix f(dim, dim);
            const auto& labels = c.labels(2);
            auto sets = enumerate_r_independent_sets(g, 1, 2);
            for (std::size_t col = 0; col < sets.size(); ++col) {
                std::vector<Vertex> img;
                for (Vertex v : sets[col]) img.push_back((v + shift) % 6);
                const int sign = img[0] < img[1] ? 1 : -1;
                VertexSet s(img);
                auto it = std::find(labels.begin(), labels.end(), s.to_string());
                f(static_cast<std::size_t>(it - labels.begin()), col) = sign;
            }
            return f;
        };
        IntMatrix f = rotation(1), g2 = rotation(2);
        CHECK(induced_map_on_homology(f * f, h, h, 2, 2) ==
              induced_map_on_homology(f, h, h, 2, 2) * induced_map_on_homology(f, h, h, 2, 2));
        CHECK(induced_map_on_homology(g2, h, h, 2, 2) == induced_map_on_homology(f * f, h, h, 2, 2));
        CHECK(abs(determinant(induced_map_on_homology(f, h, h, 2, 2))) == Integer(1));
    }
    SUBCASE("δ from column 0 to column 1 of C6") {
        BigradedComplex b(g, 1);
        GradedHomology c0 = homology(column_complex(b, 0));
        GradedHomology c1 = homology(column_complex(b, 1));
        IntMatrix m = induced_map_on_homology(b.delta(2, 0), c0, c1, 2, 2);
        CHECK(m.cols() == 2);
        CHECK(m.rows() == 6);
        CHECK(rank(m) == 2);
    }
}

TEST_CASE("direct sums of complexes") {
    ChainComplex p3 = independence_chain_complex(families::path(3), 1);
    ChainComplex one = direct_sum({p3});
    CHECK(one.rank(1) == p3.rank(1));
    CHECK(one.boundary(2) == p3.boundary(2));
    std::vector<ChainComplex> six(6, p3);
    ChainComplex s = direct_sum(six);
    GradedHomology h = homology(s);
    CHECK(h.at(1).isomorphic(free_group(6)));
    CHECK(s.blocks().size() == 6);
    // same sizes as the C6 column j = 1 after the degree shift
    BigradedComplex b(families::cycle(6), 1);
    ChainComplex col = column_complex(b, 1);
    for (int i = 1; i <= 3; ++i) CHECK(col.rank(i) == s.rank(i - 1));
}
