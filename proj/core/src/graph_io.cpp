#include "burnkit/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace burnkit {

namespace {

std::string at_line(std::size_t line) { return " (line " + std::to_string(line) + ")"; }

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<long long, long long>> raw_edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    std::istringstream ss{std::string(line)};
    long long a, b;
    if (!(ss >> a >> b))
      throw ParseError("expected two integer labels" + at_line(line_no));
    std::string rest;
    if (ss >> rest)
      throw ParseError("trailing token '" + rest + "'" + at_line(line_no));
    if (a < 0 || b < 0)
      throw ParseError("negative label" + at_line(line_no));
    if (a == b)
      throw ParseError("self-loop at label " + std::to_string(a) + at_line(line_no));
    raw_edges.emplace_back(a, b);
  }
  if (raw_edges.empty()) throw ParseError("edge list is empty");

  std::map<long long, int> compact;
  for (auto [a, b] : raw_edges) {
    compact.emplace(a, 0);
    compact.emplace(b, 0);
  }
  ParsedGraph out;
  long long expect = 0;
  for (auto& [label, idx] : compact) {
    idx = static_cast<int>(out.original_label.size());
    out.original_label.push_back(label);
    if (label != expect++) out.relabeled = true;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw_edges.size());
  for (auto [a, b] : raw_edges) edges.emplace_back(compact[a], compact[b]);
  out.graph = Graph::from_edges(static_cast<int>(compact.size()), edges);
  return out;
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int g6_byte(std::string_view s, std::size_t i) {
  if (i >= s.size())
    throw ParseError("graph6: truncated at byte " + std::to_string(i));
  unsigned char c = s[i];
  if (c < 63 || c > 126)
    throw ParseError("graph6: invalid character at byte " + std::to_string(i));
  return c - 63;
}

}  // namespace

ParsedGraph parse_graph6(std::string_view text) {
  // take the first non-empty, non-comment line
  std::string_view s = text;
  while (!s.empty()) {
    std::size_t eol = s.find('\n');
    std::string_view line = s.substr(0, eol);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') {
      s = line;
      break;
    }
    if (eol == std::string_view::npos) throw ParseError("graph6: empty input");
    s.remove_prefix(eol + 1);
  }
  if (s.empty()) throw ParseError("graph6: empty input");
  if (s.substr(0, kGraph6Header.size()) == kGraph6Header)
    s.remove_prefix(kGraph6Header.size());

  std::size_t i = 0;
  long long n;
  if (g6_byte(s, 0) < 63) {
    n = g6_byte(s, 0);
    i = 1;
  } else if (s.size() >= 2 && g6_byte(s, 1) < 63) {  // 126 n n n
    n = 0;
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | g6_byte(s, k);
    i = 4;
  } else {  // 126 126 n n n n n n
    n = 0;
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | g6_byte(s, k);
    i = 8;
  }
  if (n > 200000)
    throw ParseError("graph6: vertex count " + std::to_string(n) +
                     " beyond supported size");
  int nn = static_cast<int>(n);
  std::vector<std::pair<int, int>> edges;
  int bit = 0, cur = 0;
  auto next_bit = [&]() {
    if (bit == 0) {
      cur = g6_byte(s, i);
      ++i;
      bit = 6;
    }
    --bit;
    return (cur >> bit) & 1;
  };
  for (int col = 1; col < nn; ++col)
    for (int row = 0; row < col; ++row)
      if (next_bit()) edges.emplace_back(row, col);
  // remaining padding bits in the current byte must be zero
  while (bit > 0) {
    --bit;
    if ((cur >> bit) & 1)
      throw ParseError("graph6: nonzero padding at byte " + std::to_string(i - 1));
  }
  if (i != s.size())
    throw ParseError("graph6: trailing data at byte " + std::to_string(i));

  ParsedGraph out;
  out.graph = Graph::from_edges(nn, edges);
  out.original_label.resize(nn);
  for (int v = 0; v < nn; ++v) out.original_label[v] = v;
  return out;
}

ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? parse_edge_list(text)
                                          : parse_graph6(text);
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int k = 2; k >= 0; --k)
      out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + 63));
  } else {
    throw std::invalid_argument("graph too large for this graph6 encoder");
  }
  int acc = 0, nb = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nb = 0;
      }
    }
  if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace burnkit
