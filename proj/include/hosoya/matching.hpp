#pragma once

#include "hosoya/bigint.hpp"
#include "hosoya/canonical.hpp"
#include "hosoya/graph.hpp"
#include "hosoya/graph_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <list>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hosoya {

/// coeffs[k] = p(G,k), the number of k-edge matchings.
struct MatchingCounts {
  std::vector<BigInt> coeffs;

  BigInt total() const {
    BigInt z = 0;
    for (const auto& c : coeffs) z += c;
    return z;
  }
};

namespace detail {

// Visits each matching once: the lowest unprocessed vertex is either left
// unmatched or matched to a free higher neighbour.
class MatchingWalker {
 public:
  explicit MatchingWalker(const Graph& g) : adj_(g.adjacency()), used_(adj_.size(), 0) {}

  template <class Visit>
  bool walk(Visit&& visit) {
    return step(0, 0, visit);
  }

 private:
  template <class Visit>
  bool step(std::size_t v, std::size_t size, Visit& visit) {
    while (v < adj_.size() && used_[v]) ++v;
    if (v == adj_.size()) return visit(size);
    if (!step(v + 1, size, visit)) return false;
    used_[v] = 1;
    for (Vertex w : adj_[v]) {
      if (static_cast<std::size_t>(w) <= v || used_[w]) continue;
      used_[w] = 1;
      bool go_on = step(v + 1, size + 1, visit);
      used_[w] = 0;
      if (!go_on) {
        used_[v] = 0;
        return false;
      }
    }
    used_[v] = 0;
    return true;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> used_;
};

}  // namespace detail

/// Enumerates every matching explicitly. Cost is linear in Z(G), so this is
/// only for graphs whose index is modest.
inline MatchingCounts matching_poly_bruteforce(const Graph& g) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.vertex_count()) / 2 + 1, 0);
  detail::MatchingWalker walker(g);
  walker.walk([&](std::size_t k) {
    ++counts[k];
    return true;
  });
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  MatchingCounts out;
  for (auto c : counts) out.coeffs.emplace_back(c);
  return out;
}

inline BigInt hosoya_z_bruteforce(const Graph& g) { return matching_poly_bruteforce(g).total(); }

/// min(Z(G), cap + 1), stopping as soon as the cap is exceeded.
inline std::uint64_t count_matchings_capped(const Graph& g, std::uint64_t cap) {
  std::uint64_t count = 0;
  detail::MatchingWalker walker(g);
  walker.walk([&](std::size_t) { return ++count <= cap; });
  return count;
}

/// Fibonacci(k) with F(1) = F(2) = 1.
inline BigInt fibonacci(std::size_t k) {
  BigInt a = 0, b = 1;
  for (std::size_t i = 0; i < k; ++i) {
    BigInt t = a + b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

/// Recursive Hosoya index: product over components, edge deletion
/// Z(G) = Z(G - e) + Z(G - {u,v}) on an edge at a maximum-degree vertex,
/// closed forms for stars and paths, and a memo keyed on the canonical form
/// of each connected component. The memo is bounded and evicts least
/// recently used entries; it is safe to share between threads.
class HosoyaEngine {
 public:
  explicit HosoyaEngine(std::size_t memo_capacity = 1 << 16) : capacity_(memo_capacity) {}

  BigInt z(const Graph& g) {
    BigInt result = 1;
    for (const auto& comp : connected_components(g)) {
      if (comp.size() == 1) continue;
      result *= z_connected(induced_subgraph(g, comp));
    }
    return result;
  }

  std::size_t memo_size() const {
    std::lock_guard lock(mutex_);
    return lru_.size();
  }

  std::size_t memo_hits() const {
    std::lock_guard lock(mutex_);
    return hits_;
  }

  void clear() {
    std::lock_guard lock(mutex_);
    lru_.clear();
    index_.clear();
  }

  void remember(const std::string& key, const BigInt& value) {
    std::lock_guard lock(mutex_);
    store_locked(key, value);
  }

  std::vector<std::pair<std::string, BigInt>> snapshot() const {
    std::lock_guard lock(mutex_);
    return {lru_.begin(), lru_.end()};
  }

 private:
  BigInt z_connected(const Graph& g) {
    const std::size_t m = g.edge_count();
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    if (m == 0) return 1;
    const auto deg = g.degrees();
    const int max_deg = *std::max_element(deg.begin(), deg.end());
    if (m + 1 == n) {
      if (static_cast<std::size_t>(max_deg) == m) return BigInt(m + 1);  // star K_{1,m}
      if (max_deg <= 2) return fibonacci(n + 1);                        // path on n vertices
    }
    const std::string key = canonical_key(g);
    if (auto hit = lookup(key)) return *hit;

    const Vertex u = static_cast<Vertex>(std::max_element(deg.begin(), deg.end()) - deg.begin());
    Vertex v = -1;
    for (const Edge& e : g.edges()) {
      Vertex w = e.u == u ? e.v : (e.v == u ? e.u : -1);
      if (w >= 0 && (v < 0 || deg[w] > deg[v])) v = w;
    }
    BigInt result = z(delete_edge(g, u, v)) + z(delete_vertices(g, {u, v}).graph);
    remember(key, result);
    return result;
  }

  std::optional<BigInt> lookup(const std::string& key) {
    std::lock_guard lock(mutex_);
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    lru_.splice(lru_.begin(), lru_, it->second);
    ++hits_;
    return it->second->second;
  }

  void store_locked(const std::string& key, const BigInt& value) {
    if (capacity_ == 0) return;
    auto it = index_.find(key);
    if (it != index_.end()) {
      it->second->second = value;
      lru_.splice(lru_.begin(), lru_, it->second);
      return;
    }
    lru_.emplace_front(key, value);
    index_.emplace(key, lru_.begin());
    while (lru_.size() > capacity_) {
      index_.erase(lru_.back().first);
      lru_.pop_back();
    }
  }

  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<std::pair<std::string, BigInt>> lru_;
  std::unordered_map<std::string, std::list<std::pair<std::string, BigInt>>::iterator> index_;
  std::size_t hits_ = 0;
};

inline HosoyaEngine& default_engine() {
  static HosoyaEngine engine;
  return engine;
}

inline BigInt hosoya_z(const Graph& g) { return default_engine().z(g); }

namespace detail {

inline std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<BigInt> matching_poly_rec(const Graph& g, std::unordered_map<std::string, std::vector<BigInt>>& memo) {
  std::vector<BigInt> result{1};
  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 1) continue;
    const Graph c = induced_subgraph(g, comp);
    const std::string key = canonical_key(c);
    auto it = memo.find(key);
    if (it == memo.end()) {
      const Edge e = c.edges().front();
      auto without = matching_poly_rec(delete_edge(c, e.u, e.v), memo);
      auto covered = matching_poly_rec(delete_vertices(c, {e.u, e.v}).graph, memo);
      without.resize(std::max(without.size(), covered.size() + 1), 0);
      for (std::size_t k = 0; k < covered.size(); ++k) without[k + 1] += covered[k];
      it = memo.emplace(key, std::move(without)).first;
    }
    result = poly_mul(result, it->second);
  }
  while (result.size() > 1 && result.back() == 0) result.pop_back();
  return result;
}

}  // namespace detail

/// p(G,k) by the edge recurrence p(G,k) = p(G-e,k) + p(G-u-v,k-1).
inline MatchingCounts matching_poly(const Graph& g) {
  std::unordered_map<std::string, std::vector<BigInt>> memo;
  return MatchingCounts{detail::matching_poly_rec(g, memo)};
}

/// Z of a pointed graph and of its restrictions away from the base points.
struct PointedFamily {
  BigInt whole;
  BigInt minus_left;
  BigInt minus_right;
  BigInt minus_both;
};

inline PointedFamily hosoya_z_pointed_family(const PointedGraph& p, HosoyaEngine& engine = default_engine()) {
  PointedFamily f;
  f.whole = engine.z(p.graph);
  f.minus_left = engine.z(delete_vertices(p.graph, {p.left_base}).graph);
  f.minus_right = p.coincident() ? f.minus_left : engine.z(delete_vertices(p.graph, {p.right_base}).graph);
  f.minus_both = p.coincident() ? f.minus_left : engine.z(delete_vertices(p.graph, {p.left_base, p.right_base}).graph);
  return f;
}

// Cache file: one "canonical-graph6 <TAB> Z" line per connected component.
// Entries are advisory; load_cache re-derives every value and keeps only the
// ones that agree.
struct CacheLoadResult {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

inline CacheLoadResult load_cache(const std::string& path, HosoyaEngine& engine) {
  CacheLoadResult result;
  std::ifstream in(path);
  if (!in) return result;
  std::string line;
  HosoyaEngine checker(0);
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      ++result.rejected;
      continue;
    }
    try {
      Graph g = from_graph6(line.substr(0, tab));
      BigInt stated = parse_bigint(line.substr(tab + 1));
      if (checker.z(g) == stated && canonical_key(g) == line.substr(0, tab)) {
        engine.remember(line.substr(0, tab), stated);
        ++result.accepted;
      } else {
        ++result.rejected;
      }
    } catch (const std::exception&) {
      ++result.rejected;
    }
  }
  return result;
}

inline void save_cache(const std::string& path, const HosoyaEngine& engine) {
  auto entries = engine.snapshot();
  std::sort(entries.begin(), entries.end());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache " + path);
  for (const auto& [key, value] : entries) out << key << '\t' << value << '\n';
}

}  // namespace hosoya
