#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hosoya {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1. Edges are stored with
/// u < v in ascending lexicographic order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  }
  Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) edges_.push_back(normalized(e));
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::invalid_argument("duplicate edge");
  }
  Graph(int vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool empty() const { return n_ == 0; }

  bool has_edge(Vertex u, Vertex v) const {
    if (u == v || !valid(u) || !valid(v)) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge{std::min(u, v), std::max(u, v)});
  }

  Vertex add_vertex() { return n_++; }

  void add_edge(Vertex u, Vertex v) {
    Edge e = normalized(Edge{u, v});
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) throw std::invalid_argument("duplicate edge " + describe(e));
    edges_.insert(it, e);
  }

  void remove_edge(Vertex u, Vertex v) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{std::min(u, v), std::max(u, v)});
    if (it == edges_.end() || *it != Edge{std::min(u, v), std::max(u, v)})
      throw std::invalid_argument("no edge " + describe(Edge{u, v}));
    edges_.erase(it);
  }

  std::vector<std::vector<Vertex>> adjacency() const {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n_));
    for (const Edge& e : edges_) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
      ++deg[e.u];
      ++deg[e.v];
    }
    return deg;
  }

  bool valid(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Edge normalized(Edge e) const {
    if (e.u == e.v) throw std::invalid_argument("self loop at vertex " + std::to_string(e.u));
    if (!valid(e.u) || !valid(e.v)) throw std::out_of_range("edge endpoint out of range " + describe(e));
    if (e.u > e.v) std::swap(e.u, e.v);
    return e;
  }
  static std::string describe(Edge e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
  }

  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Graph with designated base points for chained one-point unions. The left
/// base is glued to whatever stands on the left, the right base to whatever
/// stands on the right; they may coincide.
struct PointedGraph {
  Graph graph;
  Vertex left_base = 0;
  Vertex right_base = 0;

  PointedGraph() : graph(1) {}
  PointedGraph(Graph g, Vertex left, Vertex right) : graph(std::move(g)), left_base(left), right_base(right) {
    if (!graph.valid(left_base) || !graph.valid(right_base))
      throw std::out_of_range("base point is not a vertex of the graph");
  }
  PointedGraph(Graph g, Vertex base) : PointedGraph(std::move(g), base, base) {}

  bool coincident() const { return left_base == right_base; }

  friend bool operator==(const PointedGraph&, const PointedGraph&) = default;
};

/// Positive-integer tuple (a_1..a_d) naming a caterpillar.
class CaterpillarSpec {
 public:
  CaterpillarSpec() = default;
  CaterpillarSpec(std::initializer_list<unsigned> parts) : CaterpillarSpec(std::vector<unsigned>(parts)) {}
  explicit CaterpillarSpec(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("caterpillar needs at least one part");
    for (unsigned a : parts_)
      if (a == 0) throw std::invalid_argument("caterpillar parts must be positive");
  }

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned operator[](std::size_t i) const { return parts_.at(i); }

  /// Total vertex count, i.e. sum of parts.
  std::size_t vertex_count() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
  }

  std::string to_string() const {
    std::string out = "C(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  friend auto operator<=>(const CaterpillarSpec&, const CaterpillarSpec&) = default;

 private:
  std::vector<unsigned> parts_{1};
};

/// Spine vertex i (1-based) of any caterpillar-derived graph.
inline Vertex spine_vertex(std::size_t position) {
  if (position == 0) throw std::out_of_range("spine positions are 1-based");
  return static_cast<Vertex>(position - 1);
}

/// Layout: spine vertices 0..d-1, then the a_i - 1 leaves of spine vertex i
/// grouped in spine order.
inline Graph caterpillar(const CaterpillarSpec& spec) {
  const auto& a = spec.parts();
  Graph g(static_cast<int>(spec.vertex_count()));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  Vertex next = static_cast<Vertex>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (unsigned j = 1; j < a[i]; ++j) edges.push_back({static_cast<Vertex>(i), next++});
  return Graph(g.vertex_count(), edges);
}

/// Caterpillar plus the chord between spine vertices 1 and s.
inline Graph q_graph(std::size_t s, const CaterpillarSpec& spec) {
  if (s < 2 || s > spec.length())
    throw std::out_of_range("Q_s needs 2 <= s <= d (s=" + std::to_string(s) + ")");
  if (s == 2) throw std::invalid_argument("Q_2 would duplicate the spine edge {1,2}");
  Graph g = caterpillar(spec);
  g.add_edge(spine_vertex(1), spine_vertex(s));
  return g;
}

/// Caterpillar plus chords {1,s} and {1,d}.
inline Graph theta_graph(std::size_t s, const CaterpillarSpec& spec) {
  const std::size_t d = spec.length();
  if (!(2 < s && s < d))
    throw std::out_of_range("Theta_s needs 2 < s < d (s=" + std::to_string(s) + ", d=" + std::to_string(d) + ")");
  Graph g = caterpillar(spec);
  g.add_edge(spine_vertex(1), spine_vertex(s));
  g.add_edge(spine_vertex(1), spine_vertex(d));
  return g;
}

inline Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

/// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite graph needs a,b >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  return Graph(a + b, edges);
}

/// Pointed caterpillar with bases at 1-based spine positions.
inline PointedGraph pointed_caterpillar(const CaterpillarSpec& spec, std::size_t left, std::size_t right) {
  if (left < 1 || left > spec.length() || right < 1 || right > spec.length())
    throw std::out_of_range("base marker outside spine 1.." + std::to_string(spec.length()));
  return PointedGraph(caterpillar(spec), spine_vertex(left), spine_vertex(right));
}

inline PointedGraph pointed_caterpillar(const CaterpillarSpec& spec, std::size_t base) {
  return pointed_caterpillar(spec, base, base);
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  const Vertex shift = g.vertex_count();
  for (const Edge& e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(g.vertex_count() + h.vertex_count(), edges);
}

/// Identifies g.right_base with h.left_base. Vertices of g keep their
/// indices; vertices of h follow, skipping the identified one.
inline PointedGraph one_point_union(const PointedGraph& g, const PointedGraph& h) {
  const int ng = g.graph.vertex_count();
  std::vector<Vertex> map_h(static_cast<std::size_t>(h.graph.vertex_count()));
  Vertex next = ng;
  for (Vertex v = 0; v < h.graph.vertex_count(); ++v) map_h[v] = (v == h.left_base) ? g.right_base : next++;
  std::vector<Edge> edges = g.graph.edges();
  for (const Edge& e : h.graph.edges()) edges.push_back({map_h[e.u], map_h[e.v]});
  return PointedGraph(Graph(next, edges), g.left_base, map_h[h.right_base]);
}

/// glue ∨ kernel ∨ glue, with the same glue graph on both sides.
inline PointedGraph symmetric_composite(const PointedGraph& glue, const PointedGraph& kernel) {
  return one_point_union(one_point_union(glue, kernel), glue);
}

inline Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  Graph out = g;
  out.remove_edge(u, v);
  return out;
}

struct VertexDeletion {
  Graph graph;
  std::vector<Vertex> old_to_new;  // -1 for deleted vertices
};

inline VertexDeletion delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : removed) {
    if (!g.valid(v)) throw std::out_of_range("cannot delete missing vertex " + std::to_string(v));
    gone[v] = 1;
  }
  VertexDeletion out;
  out.old_to_new.assign(gone.size(), -1);
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!gone[v]) out.old_to_new[v] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!gone[e.u] && !gone[e.v]) edges.push_back({out.old_to_new[e.u], out.old_to_new[e.v]});
  out.graph = Graph(next, edges);
  return out;
}

inline VertexDeletion delete_vertices(const Graph& g, std::initializer_list<Vertex> removed) {
  return delete_vertices(g, std::span<const Vertex>(removed.begin(), removed.size()));
}

inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  return Graph(static_cast<int>(keep.size()), edges);
}

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<char> seen(adj.size(), 0);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : adj[comp[head]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// The empty graph counts as connected.
inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && g.edge_count() + 1 == static_cast<std::size_t>(g.vertex_count()) && is_connected(g);
}

/// Edges whose removal disconnects their component.
inline std::vector<Edge> bridges(const Graph& g) {
  const auto adj = g.adjacency();
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> out;
  int timer = 0;
  // iterative DFS keeps deep caterpillars off the call stack
  struct Frame { Vertex v; Vertex parent; std::size_t next; };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        Vertex w = adj[f.v][f.next++];
        if (w == f.parent) continue;
        if (disc[w] >= 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (low[done.v] > disc[p]) out.push_back({std::min(p, done.v), std::max(p, done.v)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hosoya
