#pragma once

// Built-in graph families with documented vertex orders:
//   path n        vertices along the walk, edges {i, i+1}
//   cycle n       path n plus {n-1, 0}; n >= 3
//   complete n    K_n
//   edgeless n    n isolated vertices
//   petersen      inner pentagram v1..v5 = 0..4 (v_i ~ v_{i+2}), outer
//                 pentagon w1..w5 = 5..9, spokes v_i ~ w_i
//   cube          Q3 skeleton; vertex b ~ b xor 2^k (binary coded)
//   ladder k      rails 0..k-1 and k..2k-1, rungs {i, k+i}
//   disjoint_union(G1, G2)  concatenated orders, G2 shifted by |V(G1)|

#include <random>
#include <string>
#include <vector>

#include "indhom/graph.hpp"

namespace indhom::families {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph edgeless(int n);
Graph petersen();
Graph cube_skeleton();
Graph ladder(int rungs);
Graph disjoint_union(const Graph& a, const Graph& b);

// Parses "path:7", "cycle:6", "complete:4", "edgeless:3", "petersen",
// "cube", "ladder:4", and '+'-joined disjoint unions such as
// "complete:1+cycle:4". Throws InputError on unknown names or parameters.
Graph from_spec(const std::string& spec);

// G(n, p): pairs {u < v} in lexicographic order, each kept when
// (rng() >> 11) * 2^-53 < p. Consumes exactly n(n-1)/2 draws.
Graph erdos_renyi(int n, double p, std::mt19937_64& rng);

// Cubic graphs swept by the lab: K4, K_{3,3}, the prism (ladder 3 closed
// into a cycle), the cube, the Petersen graph.
std::vector<Graph> cubic_catalogue();

}  // namespace indhom::families
