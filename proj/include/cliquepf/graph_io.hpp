#pragma once

#include <cliquepf/graph.hpp>

#include <iosfwd>
#include <string>

namespace cliquepf {

enum class GraphFormat { edge_list, dimacs };

/// Plain edge list: `#` comments, first data line `n <count>`, then one
/// 1-indexed `u v` pair per line.
Graph parse_edge_list(std::istream& in);

/// DIMACS-like: `c` comments, header `p edge <n> <e>`, then `e u v` lines.
Graph parse_dimacs(std::istream& in);

/// Picks the format from the first non-comment line (`p ...` means DIMACS).
Graph parse_graph(std::istream& in, GraphFormat* detected = nullptr);

/// Reads a graph file; throws ParseError if the file cannot be opened.
Graph read_graph_file(const std::string& path, GraphFormat* detected = nullptr);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace cliquepf
