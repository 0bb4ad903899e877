#pragma once

#include "hosoya/canonical.hpp"
#include "hosoya/graph.hpp"
#include "hosoya/graph_io.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace hosoya {

// Human-readable names in the expression language of expr.hpp, so that
// parse_graph_expr(describe(g)) is isomorphic to g. Caterpillars and the
// Q_s / Theta_s families get their shortest spine, ties broken by the
// lexicographically least tuple; anything else falls back to a g6 literal.
namespace detail {

struct NameCandidate {
  std::size_t d = 0;
  std::size_t s = 0;
  std::vector<unsigned> parts;
  std::size_t left = 0;   // 1-based spine position
  std::size_t right = 0;
  auto key() const { return std::tie(d, s, parts, left, right); }
};

using Adjacency = std::vector<std::vector<Vertex>>;

inline std::vector<Vertex> tree_path(const Adjacency& adj, Vertex from, Vertex to) {
  std::vector<Vertex> parent(adj.size(), -2);
  std::vector<Vertex> queue{from};
  parent[from] = -1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (Vertex w : adj[queue[h]])
      if (parent[w] == -2) {
        parent[w] = queue[h];
        queue.push_back(w);
      }
  if (parent[to] == -2) return {};
  std::vector<Vertex> path;
  for (Vertex v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Spine check on a tree: every vertex off the path must be a leaf hanging
// from the path. Returns parts a_i = 1 + (pendant count).
inline std::optional<std::vector<unsigned>> spine_parts(const Adjacency& adj, const std::vector<Vertex>& path) {
  std::vector<int> pos(adj.size(), -1);
  for (std::size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
  std::vector<unsigned> parts(path.size(), 1);
  for (Vertex v = 0; v < static_cast<Vertex>(adj.size()); ++v) {
    if (pos[v] >= 0) continue;
    if (adj[v].size() != 1 || pos[adj[v][0]] < 0) return std::nullopt;
    ++parts[pos[adj[v][0]]];
  }
  return parts;
}

inline int index_of(const std::vector<Vertex>& path, Vertex v) {
  auto it = std::find(path.begin(), path.end(), v);
  return it == path.end() ? -1 : static_cast<int>(it - path.begin());
}

inline void consider(std::optional<NameCandidate>& best, NameCandidate c) {
  if (!best || c.key() < best->key()) best = std::move(c);
}

inline std::optional<NameCandidate> caterpillar_candidate(const Graph& g, Vertex l, Vertex r) {
  if (!is_tree(g)) return std::nullopt;
  const auto adj = g.adjacency();
  std::optional<NameCandidate> best;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (Vertex t = s; t < g.vertex_count(); ++t) {
      auto path = tree_path(adj, s, t);
      for (int flip = 0; flip < 2; ++flip) {
        if (flip) std::reverse(path.begin(), path.end());
        int il = l < 0 ? 0 : index_of(path, l), ir = r < 0 ? 0 : index_of(path, r);
        if (il < 0 || ir < 0) continue;
        auto parts = spine_parts(adj, path);
        if (!parts) continue;
        consider(best, {path.size(), 0, *parts, static_cast<std::size_t>(il + 1), static_cast<std::size_t>(ir + 1)});
      }
    }
  }
  return best;
}

// Q_s: spine p = 1 .. d with chord {p, q}, q at spine position s >= 3.
// Theta_s: chords {p, q} and {p, w}, w at position d and q at 2 < s < d.
inline std::optional<NameCandidate> chord_candidate(const Graph& g, Vertex l, Vertex r, bool theta) {
  if (!is_connected(g)) return std::nullopt;
  const std::size_t cycle_rank = g.edge_count() + 1 - static_cast<std::size_t>(g.vertex_count());
  if (cycle_rank != (theta ? 2u : 1u)) return std::nullopt;
  const auto full = g.adjacency();
  std::optional<NameCandidate> best;
  for (Vertex p = 0; p < g.vertex_count(); ++p) {
    const auto& nb = full[p];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = theta ? i + 1 : i; j < (theta ? nb.size() : i + 1); ++j) {
        Graph h = delete_edge(g, p, nb[i]);
        if (theta) h.remove_edge(p, nb[j]);
        if (!is_tree(h)) continue;
        const auto adj = h.adjacency();
        for (Vertex t = 0; t < g.vertex_count(); ++t) {
          auto path = tree_path(adj, p, t);
          int il = l < 0 ? 0 : index_of(path, l), ir = r < 0 ? 0 : index_of(path, r);
          if (il < 0 || ir < 0) continue;
          auto parts = spine_parts(adj, path);
          if (!parts) continue;
          const std::size_t d = path.size();
          for (int swap = 0; swap < (theta ? 2 : 1); ++swap) {
            Vertex q = swap ? nb[j] : nb[i];
            Vertex w = swap ? nb[i] : nb[j];
            int iq = index_of(path, q);
            if (iq < 0) continue;
            std::size_t s = static_cast<std::size_t>(iq + 1);
            if (theta) {
              if (index_of(path, w) != static_cast<int>(d) - 1 || !(2 < s && s < d)) continue;
            } else if (s < 3) {
              continue;
            }
            consider(best, {d, s, *parts, static_cast<std::size_t>(il + 1), static_cast<std::size_t>(ir + 1)});
          }
        }
      }
    }
  }
  return best;
}

inline std::string parts_text(const std::vector<unsigned>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

inline std::string marker_text(std::size_t l, std::size_t r) {
  if (l == r) return "@" + std::to_string(l);
  return "@l=" + std::to_string(l) + ",r=" + std::to_string(r);
}

inline std::optional<std::string> complete_name(const Graph& g, const PointedGraph* pointed) {
  const int n = g.vertex_count();
  auto try_model = [&](const Graph& model, const std::string& name) -> std::optional<std::string> {
    if (!is_isomorphic(g, model)) return std::nullopt;
    if (!pointed) return name;
    for (Vertex l = 0; l < n; ++l)
      for (Vertex r = 0; r < n; ++r)
        if (pointed_isomorphic(*pointed, PointedGraph(model, l, r)))
          return name + marker_text(static_cast<std::size_t>(l) + 1, static_cast<std::size_t>(r) + 1);
    return std::nullopt;
  };
  if (n >= 4 && g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2) return try_model(complete(n), "K" + std::to_string(n));
  for (int a = 2; a <= n / 2; ++a) {
    if (n - a < 3 || g.edge_count() != static_cast<std::size_t>(a) * (n - a)) continue;
    if (auto name = try_model(complete_bipartite(a, n - a), "K" + std::to_string(a) + "," + std::to_string(n - a))) return name;
  }
  return std::nullopt;
}

inline std::string describe_impl(const Graph& g, Vertex l, Vertex r, bool pointed) {
  if (auto c = caterpillar_candidate(g, l, r))
    return "C" + parts_text(c->parts) + (pointed ? marker_text(c->left, c->right) : "");
  if (pointed) {
    PointedGraph pg(g, l, r);
    if (auto k = complete_name(g, &pg)) return *k;
  } else if (auto k = complete_name(g, nullptr)) {
    return *k;
  }
  if (auto q = chord_candidate(g, l, r, false))
    return "Q" + std::to_string(q->s) + parts_text(q->parts) + (pointed ? marker_text(q->left, q->right) : "");
  if (auto t = chord_candidate(g, l, r, true))
    return "T" + std::to_string(t->s) + parts_text(t->parts) + (pointed ? marker_text(t->left, t->right) : "");
  std::string out = "g6\"" + to_graph6(g) + "\"";
  if (pointed) out += marker_text(static_cast<std::size_t>(l) + 1, static_cast<std::size_t>(r) + 1);
  return out;
}

}  // namespace detail

// Unpointed names drop the base constraint (vertex -1).
inline std::string describe(const Graph& g) {
  if (g.vertex_count() == 0) return "empty";
  return detail::describe_impl(g, -1, -1, false);
}

inline std::string describe(const PointedGraph& p) {
  return detail::describe_impl(p.graph, p.left_base, p.right_base, true);
}

}  // namespace hosoya
