#pragma once

// Plain-text graph files:
//
//   # optional comments, anywhere after '#'
//   n m
//   u v        (m lines, 0-based ids)
//
// Wherever a file path is accepted, "family:<spec>" selects a built-in
// family instead (see families.hpp), e.g. family:petersen.

#include <iosfwd>
#include <string>

#include "indhom/graph.hpp"

namespace indhom {

// Throws ParseError with the offending line number.
Graph read_graph(std::istream& in, const std::string& name = {});
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_text(const Graph& g);

// File path or family:<spec>. Missing files raise InputError.
Graph load_graph(const std::string& source);

}  // namespace indhom
