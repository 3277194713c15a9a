#ifndef BURNKIT_GRAPH_IO_HPP
#define BURNKIT_GRAPH_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "burnkit/graph.hpp"

namespace burnkit {

enum class GraphFormat { kEdgeList, kGraph6 };

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParsedGraph {
  Graph graph;
  // original_label[v] = label the input used for vertex v. Edge-list labels
  // are compacted to a dense 0..n-1 range; graph6 labels are already dense.
  std::vector<long long> original_label;
  bool relabeled = false;
};

// Edge list: one edge per line, two whitespace-separated nonnegative integer
// labels; '#' starts a comment line. Throws ParseError with a line number on
// malformed input, self-loops included.
ParsedGraph parse_edge_list(std::string_view text);

// Standard graph6: bias-63 6-bit packing of the upper triangle, optional
// ">>graph6<<" header. Throws ParseError with a byte offset.
ParsedGraph parse_graph6(std::string_view text);

ParsedGraph parse_graph(std::string_view text, GraphFormat format);

std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace burnkit

#endif
