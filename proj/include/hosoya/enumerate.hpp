#pragma once

#include "hosoya/canonical.hpp"
#include "hosoya/graph.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace hosoya {

/// A canonically labeled connected graph with vertex colors. Colored vertices
/// are base points: they are never removed, and children only ever gain
/// uncolored vertices.
struct ColoredGraph {
  Graph graph;
  std::vector<int> colors;
  std::string key;
};

struct GenerationOptions {
  std::size_t max_edges = std::numeric_limits<std::size_t>::max();
  unsigned jobs = 1;
};

struct GenerationResult {
  std::vector<ColoredGraph> graphs;  // sorted by (edge count, key)
  bool truncated = false;            // max_edges cut off accepted graphs
};

/// Must be monotone: if it rejects G, it rejects every supergraph of G.
using GenerationFilter = std::function<bool(const Graph&, const std::vector<int>&)>;

namespace detail {

inline ColoredGraph make_colored(const Graph& g, const std::vector<int>& colors) {
  auto lab = canonical_labeling(g, colors);
  ColoredGraph out{lab.graph, lab.colors, to_graph6(lab.graph)};
  if (std::any_of(out.colors.begin(), out.colors.end(), [](int c) { return c != 0; })) {
    out.key += ';';
    for (std::size_t i = 0; i < out.colors.size(); ++i) {
      if (i) out.key += ',';
      out.key += std::to_string(out.colors[i]);
    }
  }
  return out;
}

// Removes the canonical reduction item of a child: among non-bridge edges and
// uncolored pendant vertices, the one whose canonical labels are largest
// (pendant vertices rank above edges). Returns the parent's key.
inline std::string canonical_parent_key(const Graph& g, const std::vector<int>& colors) {
  auto lab = canonical_labeling(g, colors);
  const auto deg = g.degrees();
  using Item = std::tuple<int, Vertex, Vertex>;
  Item best{-1, -1, -1};
  Vertex best_u = -1, best_v = -1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (colors[v] == 0 && deg[v] == 1) {
      Item it{2, lab.position[v], 0};
      if (it > best) {
        best = it;
        best_u = v;
        best_v = -1;
      }
    }
  }
  if (std::get<0>(best) < 0) {
    auto br = bridges(g);
    std::set<Edge> bridge_set(br.begin(), br.end());
    for (const Edge& e : g.edges()) {
      if (bridge_set.count(e)) continue;
      Vertex a = lab.position[e.u], b = lab.position[e.v];
      Item it{1, std::max(a, b), std::min(a, b)};
      if (it > best) {
        best = it;
        best_u = e.u;
        best_v = e.v;
      }
    }
  }
  if (std::get<0>(best) < 0) return {};
  if (best_v < 0) {
    auto del = delete_vertices(g, {best_u});
    std::vector<int> c;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (v != best_u) c.push_back(colors[v]);
    return make_colored(del.graph, c).key;
  }
  return make_colored(delete_edge(g, best_u, best_v), colors).key;
}

// Children of `parent` whose canonical parent is `parent`, deduplicated.
inline std::vector<ColoredGraph> canonical_children(const ColoredGraph& parent, const GenerationFilter& accept,
                                                    bool stop_at_first = false) {
  std::vector<ColoredGraph> out;
  std::set<std::string> seen;
  auto consider = [&](const Graph& child, const std::vector<int>& colors) {
    if (!accept(child, colors)) return false;
    if (canonical_parent_key(child, colors) != parent.key) return false;
    ColoredGraph c = make_colored(child, colors);
    if (seen.insert(c.key).second) out.push_back(std::move(c));
    return true;
  };
  const Graph& g = parent.graph;
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      Graph child = g;
      child.add_edge(u, v);
      if (consider(child, parent.colors) && stop_at_first) return out;
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    Graph child = g;
    Vertex w = child.add_vertex();
    child.add_edge(u, w);
    std::vector<int> colors = parent.colors;
    colors.push_back(0);
    if (consider(child, colors) && stop_at_first) return out;
  }
  return out;
}

template <class Work>
void parallel_for(std::size_t count, unsigned jobs, Work&& work) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) work(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Orderly generation of connected colored graphs by canonical augmentation.
/// Every accepted graph reachable from `roots` by adding edges and uncolored
/// pendant vertices is produced exactly once up to color-preserving
/// isomorphism. Roots must be irreducible (only bridges, every leaf colored).
inline GenerationResult generate_connected(std::vector<ColoredGraph> roots, const GenerationFilter& accept,
                                           GenerationOptions options = {}) {
  GenerationResult result;
  std::vector<ColoredGraph> pending;
  for (auto& r : roots)
    if (accept(r.graph, r.colors)) pending.push_back(detail::make_colored(r.graph, r.colors));
  std::sort(pending.begin(), pending.end(), [](const ColoredGraph& a, const ColoredGraph& b) {
    return std::make_pair(a.graph.edge_count(), a.key) < std::make_pair(b.graph.edge_count(), b.key);
  });

  std::vector<ColoredGraph> level;
  std::size_t edges = pending.empty() ? 0 : pending.front().graph.edge_count();
  std::size_t next_root = 0;
  while (next_root < pending.size() || !level.empty()) {
    if (level.empty()) edges = pending[next_root].graph.edge_count();
    if (edges > options.max_edges) {
      result.truncated = true;
      break;
    }
    while (next_root < pending.size() && pending[next_root].graph.edge_count() == edges) level.push_back(pending[next_root++]);
    std::sort(level.begin(), level.end(), [](const ColoredGraph& a, const ColoredGraph& b) { return a.key < b.key; });
    level.erase(std::unique(level.begin(), level.end(), [](const ColoredGraph& a, const ColoredGraph& b) { return a.key == b.key; }),
                level.end());
    for (const auto& g : level) result.graphs.push_back(g);

    const bool last = edges >= options.max_edges;
    std::vector<std::vector<ColoredGraph>> children(level.size());
    detail::parallel_for(level.size(), options.jobs,
                         [&](std::size_t i) { children[i] = detail::canonical_children(level[i], accept, last); });
    std::vector<ColoredGraph> next;
    for (auto& batch : children)
      for (auto& c : batch) next.push_back(std::move(c));
    if (last) {
      result.truncated = !next.empty() || next_root < pending.size();
      break;
    }
    level = std::move(next);
    ++edges;
  }
  return result;
}

/// Roots for the usual colorings.
inline ColoredGraph single_vertex_root(int color = 0) { return detail::make_colored(Graph(1), {color}); }

/// Paths with both endpoints colored, lengths 1..max_length; the roots for
/// graphs with two distinct marked vertices.
inline std::vector<ColoredGraph> marked_path_roots(std::size_t max_length, int left_color, int right_color) {
  std::vector<ColoredGraph> out;
  for (std::size_t len = 1; len <= max_length; ++len) {
    Graph g(static_cast<int>(len) + 1);
    for (std::size_t i = 0; i < len; ++i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    std::vector<int> colors(len + 1, 0);
    colors.front() = left_color;
    colors.back() = right_color;
    out.push_back(detail::make_colored(g, colors));
  }
  return out;
}

}  // namespace hosoya
