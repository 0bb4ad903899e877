#pragma once

#include "hosoya/graph.hpp"
#include "hosoya/graph_io.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace hosoya {

struct CanonicalLabeling {
  std::vector<Vertex> position;  // position[v]: canonical label of input vertex v
  Graph graph;                   // input relabeled by position
  std::vector<int> colors;       // vertex colors under the canonical labels
};

namespace detail {

// Individualization-refinement: equitable refinement of an ordered partition,
// then branching on the first non-singleton cell; the lexicographically least
// sorted edge list over all leaves wins. Twin vertices and automorphisms found
// at equal leaves prune the branching.
class CanonicalSearch {
 public:
  using Partition = std::vector<std::vector<Vertex>>;

  CanonicalSearch(const Graph& g, std::span<const int> colors)
      : n_(g.vertex_count()), adj_(g.adjacency()), colors_(colors.begin(), colors.end()), edges_(g.edges()) {
    if (colors_.empty()) colors_.assign(static_cast<std::size_t>(n_), 0);
    if (static_cast<int>(colors_.size()) != n_) throw std::invalid_argument("color vector size mismatch");
  }

  CanonicalLabeling run() {
    Partition initial;
    std::vector<Vertex> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return colors_[a] < colors_[b]; });
    for (Vertex v : order) {
      if (initial.empty() || colors_[initial.back().front()] != colors_[v]) initial.emplace_back();
      initial.back().push_back(v);
    }
    refine(initial);
    std::vector<Vertex> prefix;
    search(std::move(initial), prefix);

    CanonicalLabeling out;
    out.position = best_position_;
    out.graph = Graph(n_, best_edges_);
    out.colors.assign(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) out.colors[best_position_[v]] = colors_[v];
    return out;
  }

 private:
  void refine(Partition& cells) const {
    std::vector<int> cell_of(static_cast<std::size_t>(n_));
    for (;;) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (Vertex v : cells[c]) cell_of[v] = static_cast<int>(c);
      bool split = false;
      Partition next;
      next.reserve(cells.size());
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::vector<std::pair<std::vector<int>, Vertex>> sig;
        sig.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<int> s;
          s.reserve(adj_[v].size());
          for (Vertex w : adj_[v]) s.push_back(cell_of[w]);
          std::sort(s.begin(), s.end());
          sig.emplace_back(std::move(s), v);
        }
        std::stable_sort(sig.begin(), sig.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t start = next.size();
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i == 0 || sig[i].first != sig[i - 1].first) next.emplace_back();
          next.back().push_back(sig[i].second);
        }
        if (next.size() - start > 1) split = true;
      }
      cells = std::move(next);
      if (!split) return;
    }
  }

  bool twins(Vertex a, Vertex b) const {
    const auto& na = adj_[a];
    const auto& nb = adj_[b];
    std::size_t i = 0, j = 0;
    for (;;) {
      while (i < na.size() && na[i] == b) ++i;
      while (j < nb.size() && nb[j] == a) ++j;
      if (i == na.size() || j == nb.size()) return i == na.size() && j == nb.size();
      if (na[i] != nb[j]) return false;
      ++i;
      ++j;
    }
  }

  static Vertex find(std::vector<Vertex>& parent, Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  // Orbits of the group generated by known automorphisms that fix the prefix.
  std::vector<Vertex> orbit_roots(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        Vertex a = find(parent, v), b = find(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(parent, v);
    return parent;
  }

  void search(Partition cells, std::vector<Vertex>& prefix) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> cell = cells[t];
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      if (!automorphisms_.empty()) {
        auto roots = orbit_roots(prefix);
        if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return roots[u] == roots[v]; })) continue;
      }
      tried.push_back(v);
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != t) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      refine(child);
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  void leaf(const Partition& cells) {
    std::vector<Vertex> pos(static_cast<std::size_t>(n_));
    for (std::size_t c = 0; c < cells.size(); ++c) pos[cells[c].front()] = static_cast<Vertex>(c);
    std::vector<Edge> enc;
    enc.reserve(edges_.size());
    for (const Edge& e : edges_) enc.push_back({std::min(pos[e.u], pos[e.v]), std::max(pos[e.u], pos[e.v])});
    std::sort(enc.begin(), enc.end());
    if (!have_best_ || enc < best_edges_) {
      have_best_ = true;
      best_edges_ = std::move(enc);
      best_position_ = std::move(pos);
    } else if (enc == best_edges_) {
      std::vector<Vertex> inverse_best(static_cast<std::size_t>(n_));
      for (Vertex v = 0; v < n_; ++v) inverse_best[best_position_[v]] = v;
      std::vector<Vertex> gamma(static_cast<std::size_t>(n_));
      for (Vertex v = 0; v < n_; ++v) gamma[v] = inverse_best[pos[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> colors_;
  std::vector<Edge> edges_;
  bool have_best_ = false;
  std::vector<Edge> best_edges_;
  std::vector<Vertex> best_position_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {}) {
  if (g.vertex_count() == 0) return CanonicalLabeling{{}, Graph(0), {}};
  return detail::CanonicalSearch(g, colors).run();
}

inline Graph canonical_form(const Graph& g) { return canonical_labeling(g).graph; }

/// graph6 of the canonical form, with a color suffix when any vertex is colored.
inline std::string canonical_key(const Graph& g, std::span<const int> colors = {}) {
  auto lab = canonical_labeling(g, colors);
  std::string key = to_graph6(lab.graph);
  if (std::any_of(lab.colors.begin(), lab.colors.end(), [](int c) { return c != 0; })) {
    key += ';';
    for (std::size_t i = 0; i < lab.colors.size(); ++i) {
      if (i) key += ',';
      key += std::to_string(lab.colors[i]);
    }
  }
  return key;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  auto dg = g.degrees(), dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

/// How base points take part in a pointed-graph comparison. `unordered`
/// treats (l, r) and (r, l) as the same marking, which is the right notion for
/// kernels placed between two copies of one glue.
enum class BaseOrder { ordered, unordered };

namespace detail {
inline std::vector<int> base_colors(const PointedGraph& p, BaseOrder order) {
  std::vector<int> colors(static_cast<std::size_t>(p.graph.vertex_count()), 0);
  if (p.coincident()) {
    colors[p.left_base] = 3;
  } else {
    colors[p.left_base] = 1;
    colors[p.right_base] = order == BaseOrder::ordered ? 2 : 1;
  }
  return colors;
}
}  // namespace detail

inline std::string pointed_key(const PointedGraph& p, BaseOrder order = BaseOrder::ordered) {
  return canonical_key(p.graph, detail::base_colors(p, order));
}

/// Canonically relabeled copy; for unordered comparison the smaller label is
/// reported as the left base.
inline PointedGraph canonical_pointed(const PointedGraph& p, BaseOrder order = BaseOrder::ordered) {
  auto colors = detail::base_colors(p, order);
  auto lab = canonical_labeling(p.graph, colors);
  Vertex l = lab.position[p.left_base], r = lab.position[p.right_base];
  if (order == BaseOrder::unordered && l > r) std::swap(l, r);
  return PointedGraph(lab.graph, l, r);
}

inline bool pointed_isomorphic(const PointedGraph& a, const PointedGraph& b, BaseOrder order = BaseOrder::ordered) {
  if (a.graph.vertex_count() != b.graph.vertex_count() || a.graph.edge_count() != b.graph.edge_count()) return false;
  if (a.coincident() != b.coincident()) return false;
  return pointed_key(a, order) == pointed_key(b, order);
}

}  // namespace hosoya
