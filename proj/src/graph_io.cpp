#include "indhom/graph_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "indhom/error.hpp"
#include "indhom/families.hpp"

namespace indhom {

namespace {

// Next line with content, comments stripped; false at end of input.
bool next_line(std::istream& in, std::size_t& lineno, std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        out = raw;
        return true;
    }
    return false;
}

void read_pair(const std::string& line, std::size_t lineno, long long& a, long long& b, const char* what) {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> a >> b)) throw ParseError(lineno, std::string("expected ") + what);
    if (ls >> extra) throw ParseError(lineno, "unexpected trailing token '" + extra + "'");
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& name) {
    std::size_t lineno = 0;
    std::string line;
    if (!next_line(in, lineno, line)) throw ParseError(lineno + 1, "missing header 'n m'");
    long long n = 0, m = 0;
    read_pair(line, lineno, n, m, "header 'n m'");
    if (n < 0 || m < 0) throw ParseError(lineno, "negative count in header");
    if (n > kMaxVertices) throw ParseError(lineno, "at most " + std::to_string(kMaxVertices) + " vertices are supported");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (long long e = 0; e < m; ++e) {
        if (!next_line(in, lineno, line))
            throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
        long long u = 0, v = 0;
        read_pair(line, lineno, u, v, "edge 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "edge endpoint out of range");
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_line(in, lineno, line)) throw ParseError(lineno, "content after the declared edges");
    return Graph(static_cast<int>(n), edges, name);
}

void write_graph(std::ostream& out, const Graph& g) {
    if (!g.name().empty()) out << "# " << g.name() << "\n";
    auto edges = g.edges();
    out << g.vertex_count() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

Graph load_graph(const std::string& source) {
    static const std::string prefix = "family:";
    if (source.rfind(prefix, 0) == 0) return families::from_spec(source.substr(prefix.size()));
    std::ifstream in(source);
    if (!in) throw InputError("cannot open graph file '" + source + "'");
    return read_graph(in, source);
}

}  // namespace indhom
