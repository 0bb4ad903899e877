#pragma once

#include "hosoya/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hosoya {

// graph6: vertex count header followed by the upper triangle of the
// adjacency matrix, column by column, packed six bits per printable byte.
inline std::string to_graph6(const Graph& g) {
  const long n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw std::length_error("graph6 writer supports fewer than 258048 vertices");
  }
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

inline Graph from_graph6(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw std::invalid_argument("truncated graph6 string");
    int c = static_cast<unsigned char>(text[pos++]) - 63;
    if (c < 0 || c > 63) throw std::invalid_argument("invalid graph6 character");
    return c;
  };
  long n = 0;
  if (text[0] == 126) {
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | next();
  } else {
    n = next();
  }
  std::vector<Edge> edges;
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      --bits;
      if ((acc >> bits) & 1) edges.push_back({i, j});
    }
  }
  if (pos != text.size()) throw std::invalid_argument("trailing bytes in graph6 string");
  return Graph(static_cast<int>(n), edges);
}

// Edge-list text format: "n <count>" then one "u v" pair per line, 0-based,
// u < v, ascending.
inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

inline Graph read_edge_list(std::istream& is) {
  std::string tag;
  long n = -1;
  if (!(is >> tag >> n) || tag != "n" || n < 0) throw std::invalid_argument("edge list must start with 'n <vertex_count>'");
  std::vector<Edge> edges;
  long u = 0, v = 0;
  while (is >> u) {
    if (!(is >> v)) throw std::invalid_argument("dangling vertex in edge list");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range in edge list");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!is.eof()) throw std::invalid_argument("malformed edge list");
  return Graph(static_cast<int>(n), edges);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

}  // namespace hosoya
