#include "indhom/families.hpp"

#include <charconv>

#include "indhom/error.hpp"

namespace indhom::families {

namespace {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

}  // namespace

Graph path(int n) {
    require(n >= 1, "path needs at least one vertex");
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e, "path:" + std::to_string(n));
}

Graph cycle(int n) {
    require(n >= 3, "cycle needs at least three vertices");
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 1, 0);
    return Graph(n, e, "cycle:" + std::to_string(n));
}

Graph complete(int n) {
    require(n >= 1, "complete graph needs at least one vertex");
    Edges e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e, "complete:" + std::to_string(n));
}

Graph edgeless(int n) {
    require(n >= 0, "edgeless graph needs a non-negative vertex count");
    return Graph(n, {}, "edgeless:" + std::to_string(n));
}

Graph petersen() {
    Edges e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 2) % 5);          // pentagram
        e.emplace_back(5 + i, 5 + (i + 1) % 5);  // pentagon
        e.emplace_back(i, 5 + i);                // spoke
    }
    return Graph(10, e, "petersen");
}

Graph cube_skeleton() {
    Edges e;
    for (int b = 0; b < 8; ++b)
        for (int k = 0; k < 3; ++k)
            if (b < (b ^ (1 << k))) e.emplace_back(b, b ^ (1 << k));
    return Graph(8, e, "cube");
}

Graph ladder(int rungs) {
    require(rungs >= 1, "ladder needs at least one rung");
    Edges e;
    for (int i = 0; i < rungs; ++i) {
        e.emplace_back(i, rungs + i);
        if (i + 1 < rungs) {
            e.emplace_back(i, i + 1);
            e.emplace_back(rungs + i, rungs + i + 1);
        }
    }
    return Graph(2 * rungs, e, "ladder:" + std::to_string(rungs));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Edges e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return Graph(a.vertex_count() + b.vertex_count(), e, a.name() + "+" + b.name());
}

namespace {

int parse_param(const std::string& name, const std::string& text) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) throw InputError("bad parameter for " + name + ": '" + text + "'");
    return v;
}

Graph atom(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const bool has_param = colon != std::string::npos;
    auto param = [&] {
        if (!has_param) throw InputError("family '" + name + "' needs a parameter, e.g. " + name + ":5");
        return parse_param(name, spec.substr(colon + 1));
    };
    auto no_param = [&] {
        if (has_param) throw InputError("family '" + name + "' takes no parameter");
    };
    if (name == "path") return path(param());
    if (name == "cycle") return cycle(param());
    if (name == "complete") return complete(param());
    if (name == "edgeless") return edgeless(param());
    if (name == "ladder") return ladder(param());
    if (name == "petersen") return no_param(), petersen();
    if (name == "cube" || name == "cube_skeleton") return no_param(), cube_skeleton();
    throw InputError("unknown graph family '" + name + "'");
}

}  // namespace

Graph from_spec(const std::string& spec) {
    if (spec.empty()) throw InputError("empty family spec");
    std::size_t start = 0;
    Graph g;
    bool first = true;
    for (;;) {
        const auto plus = spec.find('+', start);
        Graph part = atom(spec.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
        g = first ? part : disjoint_union(g, part);
        first = false;
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    g.set_name(spec);
    return g;
}

Graph erdos_renyi(int n, double p, std::mt19937_64& rng) {
    require(n >= 0 && n <= kMaxVertices, "random graph vertex count out of range");
    require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
    Edges e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) e.emplace_back(u, v);
        }
    return Graph(n, e);
}

std::vector<Graph> cubic_catalogue() {
    std::vector<Graph> out;
    out.push_back(complete(4));
    out.back().set_name("K4");
    Edges k33;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) k33.emplace_back(i, j);
    out.emplace_back(6, k33, "K3,3");
    Edges prism = ladder(3).edges();
    prism.emplace_back(0, 2);
    prism.emplace_back(3, 5);
    out.emplace_back(6, prism, "prism");
    out.push_back(cube_skeleton());
    out.push_back(petersen());
    return out;
}

}  // namespace indhom::families
