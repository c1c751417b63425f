#pragma once

// Finite simple graphs whose vertex order is part of the value. Vertices are
// 0..n-1 and "v < w" is integer order; every sign convention downstream
// (boundary maps, marking differentials) is taken relative to it.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace indhom {

using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

// Sorted, duplicate-free list of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    // Sorts and validates; throws InputError on duplicates or negative ids.
    VertexSet(std::initializer_list<Vertex> vs);
    explicit VertexSet(std::vector<Vertex> vs);
    static VertexSet from_mask(VertexMask m);

    const std::vector<Vertex>& vertices() const noexcept { return v_; }
    std::size_t size() const noexcept { return v_.size(); }
    bool empty() const noexcept { return v_.empty(); }
    bool contains(Vertex v) const;
    VertexMask mask() const;
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    std::string to_string() const;  // "{0,2,4}"

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    // Lexicographic on the sorted lists.
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.v_ <=> b.v_; }

private:
    std::vector<Vertex> v_;
};

class Graph {
public:
    Graph() = default;
    // Normalizes: duplicate edges collapse. Throws InputError on an
    // out-of-range id or a self-loop, naming the offending edge.
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::string name = {});

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept;
    bool adjacent(Vertex u, Vertex v) const;
    VertexMask neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexMask all_vertices() const noexcept { return n_ == 64 ? ~VertexMask{0} : ((VertexMask{1} << n_) - 1); }
    std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, lexicographic
    int degree(Vertex v) const;

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    // Equality includes the vertex order (but not the name).
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    std::vector<VertexMask> adj_;
    std::string name_;
};

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

// N[U]: U together with every vertex adjacent to a member of U.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& u);
// N(U): union of the neighbourhoods of members of U (members of U are
// included only when adjacent to another member).
VertexSet open_neighborhood(const Graph& g, const VertexSet& u);

struct InducedSubgraph {
    Graph graph;
    // old id -> new id, or -1 for deleted vertices
    std::vector<Vertex> relabel;
    // new id -> old id
    std::vector<Vertex> original;
};

// G - W: induced subgraph on V \ W with order-preserving relabeling.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& w);

// Every connected component of G[S] has at most r vertices (union-find).
bool is_r_independent(const Graph& g, const VertexSet& s, int r);
// Mask variant used by the enumerators (BFS over masks).
bool is_r_independent_mask(const Graph& g, VertexMask s, int r);

// All r-independent sets (optionally only those of a given size) in
// lexicographic order of the sorted vertex lists; the empty set comes first.
std::vector<VertexSet> enumerate_r_independent_sets(const Graph& g, int r, std::optional<int> size = std::nullopt);
std::vector<VertexMask> enumerate_r_independent_masks(const Graph& g, int r, std::optional<int> size = std::nullopt);

struct IndependenceCensus {
    std::map<int, std::size_t> maximal_by_size;  // n_p (only sizes that occur)
    int independence_number = 0;                 // alpha_r
    std::vector<VertexSet> maximal_sets;         // lexicographic

    std::size_t count(int p) const {
        auto it = maximal_by_size.find(p);
        return it == maximal_by_size.end() ? 0 : it->second;
    }
};

IndependenceCensus maximal_r_independent_census(const Graph& g, int r);

}  // namespace indhom
