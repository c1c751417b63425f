#include "indhom/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "indhom/error.hpp"

namespace indhom {

namespace {

VertexMask bit(Vertex v) { return VertexMask{1} << v; }

void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count())
        throw InputError("vertex " + std::to_string(v) + " out of range for a graph on " +
                         std::to_string(g.vertex_count()) + " vertices");
}

void check_set(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) check_vertex(g, v);
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : v_(std::move(vs)) {
    std::sort(v_.begin(), v_.end());
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end()) throw InputError("vertex set has duplicates");
    if (!v_.empty() && v_.front() < 0) throw InputError("negative vertex id");
    if (!v_.empty() && v_.back() >= kMaxVertices) throw InputError("vertex id beyond supported range");
}

VertexSet VertexSet::from_mask(VertexMask m) {
    VertexSet s;
    while (m) {
        s.v_.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

VertexMask VertexSet::mask() const {
    VertexMask m = 0;
    for (Vertex v : v_) m |= bit(v);
    return m;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
    os << "}";
    return os.str();
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::string name)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0), name_(std::move(name)) {
    if (n < 0) throw InputError("negative vertex count");
    if (n > kMaxVertices) throw InputError("at most " + std::to_string(kMaxVertices) + " vertices are supported");
    for (auto [u, v] : edges) {
        std::string e = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge " + e + " has an out-of-range endpoint");
        if (u == v) throw InputError("edge " + e + " is a self-loop");
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
    }
}

std::size_t Graph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (auto m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(*this, u);
    check_vertex(*this, v);
    return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (adj_[static_cast<std::size_t>(u)] & bit(v)) out.emplace_back(u, v);
    return out;
}

int Graph::degree(Vertex v) const {
    check_vertex(*this, v);
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) { return Graph(n, edges); }

VertexSet closed_neighborhood(const Graph& g, const VertexSet& u) {
    check_set(g, u);
    VertexMask m = u.mask();
    for (Vertex v : u) m |= g.neighbors(v);
    return VertexSet::from_mask(m);
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& u) {
    check_set(g, u);
    VertexMask m = 0;
    for (Vertex v : u) m |= g.neighbors(v);
    return VertexSet::from_mask(m);
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& w) {
    check_set(g, w);
    InducedSubgraph out;
    out.relabel.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    const VertexMask gone = w.mask();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (gone & bit(v)) continue;
        out.relabel[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.original.size());
        out.original.push_back(v);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [a, b] : g.edges()) {
        Vertex x = out.relabel[static_cast<std::size_t>(a)], y = out.relabel[static_cast<std::size_t>(b)];
        if (x >= 0 && y >= 0) edges.emplace_back(x, y);
    }
    out.graph = Graph(static_cast<int>(out.original.size()), edges);
    return out;
}

bool is_r_independent(const Graph& g, const VertexSet& s, int r) {
    check_set(g, s);
    if (r < 1) throw InputError("r must be at least 1");
    const auto& vs = s.vertices();
    std::vector<std::size_t> parent(vs.size()), size(vs.size(), 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!(g.neighbors(vs[i]) & bit(vs[j]))) continue;
            std::size_t a = find(i), b = find(j);
            if (a == b) continue;
            if (size[a] < size[b]) std::swap(a, b);
            parent[b] = a;
            size[a] += size[b];
        }
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (find(i) == i && size[i] > static_cast<std::size_t>(r)) return false;
    return true;
}

namespace {

VertexMask component_mask(const Graph& g, VertexMask s, Vertex start) {
    VertexMask seen = bit(start), frontier = bit(start);
    while (frontier) {
        VertexMask next = 0;
        VertexMask f = frontier;
        while (f) {
            Vertex v = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbors(v) & s;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

int component_size(const Graph& g, VertexMask s, Vertex start) { return std::popcount(component_mask(g, s, start)); }

}  // namespace

bool is_r_independent_mask(const Graph& g, VertexMask s, int r) {
    VertexMask left = s;
    while (left) {
        VertexMask comp = component_mask(g, s, std::countr_zero(left));
        if (std::popcount(comp) > r) return false;
        left &= ~comp;
    }
    return true;
}

std::vector<VertexMask> enumerate_r_independent_masks(const Graph& g, int r, std::optional<int> size) {
    if (r < 1) throw InputError("r must be at least 1");
    std::vector<VertexMask> out;
    const int n = g.vertex_count();
    // Depth-first with "extend by a larger vertex" yields lexicographic order.
    // Supersets of a set that fails are never r-independent, so failing
    // branches are cut.
    auto recurse = [&](auto&& self, VertexMask current, int depth, Vertex next) -> void {
        if (!size || depth == *size) out.push_back(current);
        if (size && depth >= *size) return;
        for (Vertex v = next; v < n; ++v) {
            VertexMask cand = current | bit(v);
            if (component_size(g, cand, v) > r) continue;
            self(self, cand, depth + 1, v + 1);
        }
    };
    recurse(recurse, 0, 0, 0);
    return out;
}

std::vector<VertexSet> enumerate_r_independent_sets(const Graph& g, int r, std::optional<int> size) {
    std::vector<VertexSet> out;
    for (auto m : enumerate_r_independent_masks(g, r, size)) out.push_back(VertexSet::from_mask(m));
    return out;
}

IndependenceCensus maximal_r_independent_census(const Graph& g, int r) {
    IndependenceCensus census;
    const VertexMask all = g.all_vertices();
    for (VertexMask s : enumerate_r_independent_masks(g, r)) {
        const int card = std::popcount(s);
        census.independence_number = std::max(census.independence_number, card);
        bool maximal = true;
        VertexMask absent = all & ~s;
        while (absent && maximal) {
            Vertex v = std::countr_zero(absent);
            absent &= absent - 1;
            if (component_size(g, s | bit(v), v) <= r) maximal = false;
        }
        if (!maximal) continue;
        ++census.maximal_by_size[card];
        census.maximal_sets.push_back(VertexSet::from_mask(s));
    }
    return census;
}

}  // namespace indhom
