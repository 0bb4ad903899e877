#pragma once

#include "hosoya/canonical.hpp"
#include "hosoya/enumerate.hpp"
#include "hosoya/matching.hpp"
#include "hosoya/names.hpp"
#include "hosoya/pythagoras.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hosoya {

// Z(G v S v G) depends on the glue G (base g) only through
//   x = Z(G - g),  y = Z(G) - x,
// and on the kernel S through Z of S and of S minus its base points:
//   l = r:  x^2 Z(S) + 2xy Z(S - v)
//   l != r: x^2 Z(S) + xy (Z(S - l) + Z(S - r)) + y^2 Z(S - l - r).
// Every composite contains G v G or two disjoint copies of G, so glues with
// Z(G v G) = x^2 + 2xy above the smallest target of a probe can be skipped,
// and a kernel can never have Z above its smallest target.

enum class KernelRole { A = 0, B = 1, C = 2 };
inline constexpr std::array<const char*, 3> kRoleNames{"A", "B", "C"};

struct Signature {
  std::uint64_t x = 1;
  std::uint64_t y = 0;
  auto operator<=>(const Signature&) const = default;
  std::string to_string() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

struct KernelCandidate {
  PointedGraph kernel;  // canonical labels, left <= right
  std::string key;
  std::string name;
  std::uint64_t z = 0, z_left = 0, z_right = 0, z_both = 0;

  std::uint64_t composite(Signature s) const {
    if (kernel.coincident()) return s.x * s.x * z + 2 * s.x * s.y * z_left;
    return s.x * s.x * z + s.x * s.y * (z_left + z_right) + s.y * s.y * z_both;
  }
};

struct GlueClass {
  Signature signature;
  std::string representative;  // smallest member by (edges, canonical key)
  PointedGraph representative_graph;
  std::vector<std::string> members;
};

struct ProbeInfo {
  std::uint64_t m = 0, n = 0;
  std::array<std::uint64_t, 3> targets{};  // m^2 - n^2, 2mn, m^2 + n^2
  std::size_t glue_edge_budget = 0;
  bool glue_truncated = false;
  std::vector<GlueClass> glues;
};

struct SearchBranch {
  std::size_t id = 0;
  std::size_t stage = 0;
  std::optional<std::size_t> parent;
  std::vector<Signature> path;  // glue signature chosen at each stage so far
  std::array<std::vector<std::size_t>, 3> alive;  // indices into the role pools
};

struct LogEntry {
  std::size_t stage = 0;
  std::uint64_t m = 0, n = 0;
  std::optional<std::size_t> branch;  // branch refined; empty at the first stage
  Signature signature;
  std::string glue;
  KernelRole role = KernelRole::A;
  std::string kernel;
  std::string kernel_key;
  std::uint64_t z = 0;
  std::uint64_t target = 0;
  bool hit = false;
};

struct SurvivingTriple {
  std::array<std::string, 3> names;
  std::array<std::string, 3> keys;
};

enum class SearchStatus { unique, multiple, none, inconclusive };

inline std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::unique: return "unique";
    case SearchStatus::multiple: return "multiple";
    case SearchStatus::none: return "none";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

struct KernelSearchReport {
  PythClass cls = PythClass::P1;
  std::vector<ProbeInfo> probes;
  std::array<std::size_t, 3> kernel_bounds{};        // max Z per role
  std::array<std::size_t, 3> kernel_edge_budgets{};  // effective per role
  std::array<bool, 3> kernel_truncated{};
  std::array<std::vector<KernelCandidate>, 3> pools;
  std::vector<SearchBranch> branches;
  std::vector<LogEntry> log;
  std::vector<SurvivingTriple> survivors;
  std::size_t survivor_count = 0;  // may exceed survivors.size() when capped
  SearchStatus status = SearchStatus::none;
  std::vector<std::string> notes;
};

struct KernelSearchOptions {
  std::optional<std::size_t> kernel_edge_budget;  // unset: Z bound - 1, which cannot truncate
  std::optional<std::size_t> glue_edge_budget;    // unset: smallest probe target - 1
  unsigned jobs = 1;
  std::size_t survivor_listing_cap = 1000;
};

/// Name of a kernel whose bases may be swapped.
inline std::string describe_unordered(const PointedGraph& p) {
  std::string a = describe(p);
  if (p.coincident()) return a;
  std::string b = describe(PointedGraph(p.graph, p.right_base, p.left_base));
  return std::make_pair(b.size(), b) < std::make_pair(a.size(), a) ? b : a;
}

namespace detail {

inline PointedGraph pointed_from_colors(const ColoredGraph& g) {
  std::vector<Vertex> marked;
  for (Vertex v = 0; v < g.graph.vertex_count(); ++v)
    if (g.colors[v] != 0) marked.push_back(v);
  if (marked.size() == 1) return PointedGraph(g.graph, marked[0]);
  return PointedGraph(g.graph, marked.at(0), marked.at(1));
}

inline std::uint64_t z_without(const Graph& g, std::initializer_list<Vertex> removed) {
  return count_matchings_capped(delete_vertices(g, removed).graph, std::numeric_limits<std::uint64_t>::max() - 1);
}

inline std::vector<KernelCandidate> kernel_pool(std::uint64_t bound, std::size_t edge_budget, unsigned jobs,
                                                bool& truncated) {
  auto filter = [bound](const Graph& g, const std::vector<int>&) { return count_matchings_capped(g, bound) <= bound; };
  std::size_t max_path = 0;
  while (fibonacci(max_path + 3) <= bound) ++max_path;  // path with L edges has Z = F(L + 2)
  GenerationOptions opts{edge_budget, jobs};
  auto same = generate_connected({single_vertex_root(3)}, filter, opts);
  auto distinct = generate_connected(marked_path_roots(max_path, 1, 1), filter, opts);
  truncated = same.truncated || distinct.truncated;
  std::vector<ColoredGraph> all = std::move(same.graphs);
  for (auto& g : distinct.graphs) all.push_back(std::move(g));
  std::sort(all.begin(), all.end(), [bound](const ColoredGraph& a, const ColoredGraph& b) {
    return std::make_tuple(count_matchings_capped(a.graph, bound), a.graph.edge_count(), a.key) <
           std::make_tuple(count_matchings_capped(b.graph, bound), b.graph.edge_count(), b.key);
  });
  std::vector<KernelCandidate> out;
  for (const auto& g : all) {
    KernelCandidate k;
    k.kernel = pointed_from_colors(g);
    k.key = g.key;
    k.name = describe_unordered(k.kernel);
    k.z = count_matchings_capped(g.graph, bound);
    k.z_left = z_without(g.graph, {k.kernel.left_base});
    k.z_right = z_without(g.graph, {k.kernel.right_base});
    k.z_both = k.kernel.coincident() ? k.z_left : z_without(g.graph, {k.kernel.left_base, k.kernel.right_base});
    out.push_back(std::move(k));
  }
  return out;
}

inline std::vector<GlueClass> glue_pool(std::uint64_t bound, std::size_t edge_budget, unsigned jobs, bool& truncated) {
  auto signature_of = [](const Graph& g, const std::vector<int>& colors, std::uint64_t cap) -> std::optional<Signature> {
    const std::uint64_t z = count_matchings_capped(g, cap);
    if (z > cap) return std::nullopt;
    Vertex base = static_cast<Vertex>(std::find_if(colors.begin(), colors.end(), [](int c) { return c != 0; }) - colors.begin());
    const std::uint64_t x = z_without(g, {base});
    return Signature{x, z - x};
  };
  auto filter = [&](const Graph& g, const std::vector<int>& colors) {
    auto s = signature_of(g, colors, bound);
    return s && s->x * s->x + 2 * s->x * s->y <= bound;
  };
  auto gen = generate_connected({single_vertex_root(1)}, filter, GenerationOptions{edge_budget, jobs});
  truncated = gen.truncated;
  std::map<Signature, GlueClass> classes;
  for (const auto& g : gen.graphs) {
    Signature s = *signature_of(g.graph, g.colors, bound);
    auto [it, fresh] = classes.try_emplace(s);
    PointedGraph p = pointed_from_colors(g);
    std::string name = describe(p);
    if (fresh) {
      it->second.signature = s;
      it->second.representative = name;
      it->second.representative_graph = p;
    }
    it->second.members.push_back(name);
  }
  std::vector<GlueClass> out;
  for (auto& [s, c] : classes) out.push_back(std::move(c));
  return out;
}

}  // namespace detail

inline std::array<std::uint64_t, 3> probe_targets(std::uint64_t m, std::uint64_t n) {
  return {m * m - n * n, 2 * m * n, m * m + n * n};
}

/// Staged search for kernel triples (A, B, C) such that for every probe
/// (m, n) a single glue G makes Z(G v A v G), Z(G v B v G), Z(G v C v G)
/// equal m^2 - n^2, 2mn, m^2 + n^2.
inline KernelSearchReport kernel_search(PythClass cls, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& probes,
                                        KernelSearchOptions options = {}) {
  if (probes.empty()) throw std::invalid_argument("kernel search needs at least one probe");
  KernelSearchReport report;
  report.cls = cls;
  for (auto [m, n] : probes) {
    PythParams p = classify(m, n);
    if (p.cls != cls) throw std::invalid_argument("probe (" + std::to_string(m) + "," + std::to_string(n) + ") is not in " + to_string(cls));
    ProbeInfo info;
    info.m = m;
    info.n = n;
    info.targets = probe_targets(m, n);
    report.probes.push_back(std::move(info));
  }

  bool inconclusive = false;
  for (auto& probe : report.probes) {
    const std::uint64_t bound = *std::min_element(probe.targets.begin(), probe.targets.end());
    probe.glue_edge_budget = options.glue_edge_budget.value_or(bound - 1);
    probe.glues = detail::glue_pool(bound, probe.glue_edge_budget, options.jobs, probe.glue_truncated);
    if (probe.glue_truncated) {
      inconclusive = true;
      report.notes.push_back("glue budget " + std::to_string(probe.glue_edge_budget) + " truncates glues for probe (" +
                             std::to_string(probe.m) + "," + std::to_string(probe.n) + ")");
    }
  }
  for (std::size_t r = 0; r < 3; ++r) {
    std::uint64_t bound = report.probes.front().targets[r];
    for (const auto& p : report.probes) bound = std::min(bound, p.targets[r]);
    report.kernel_bounds[r] = bound;
    report.kernel_edge_budgets[r] = options.kernel_edge_budget.value_or(bound - 1);
    bool truncated = false;
    report.pools[r] = detail::kernel_pool(bound, report.kernel_edge_budgets[r], options.jobs, truncated);
    report.kernel_truncated[r] = truncated;
    if (truncated) {
      inconclusive = true;
      report.notes.push_back(std::string("kernel budget ") + std::to_string(report.kernel_edge_budgets[r]) +
                             " truncates role " + kRoleNames[r] + " candidates with Z <= " + std::to_string(bound));
    }
  }

  auto refine = [&](std::size_t stage, const SearchBranch* parent, const std::array<std::vector<std::size_t>, 3>& alive,
                    std::vector<SearchBranch>& out) {
    const ProbeInfo& probe = report.probes[stage];
    for (const GlueClass& glue : probe.glues) {
      std::array<std::vector<std::size_t>, 3> hits;
      std::vector<LogEntry> entries;
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t idx : alive[r]) {
          const KernelCandidate& k = report.pools[r][idx];
          const std::uint64_t z = k.composite(glue.signature);
          const bool hit = z == probe.targets[r];
          if (hit) hits[r].push_back(idx);
          entries.push_back(LogEntry{stage, probe.m, probe.n, parent ? std::optional(parent->id) : std::nullopt,
                                     glue.signature, glue.representative, static_cast<KernelRole>(r), k.name, k.key, z,
                                     probe.targets[r], hit});
        }
      }
      const bool viable = !hits[0].empty() && !hits[1].empty() && !hits[2].empty();
      if (parent || viable)
        for (auto& e : entries) report.log.push_back(std::move(e));
      if (!viable) continue;
      SearchBranch b;
      b.stage = stage;
      if (parent) {
        b.parent = parent->id;
        b.path = parent->path;
      }
      b.path.push_back(glue.signature);
      b.alive = std::move(hits);
      out.push_back(std::move(b));
    }
  };

  std::vector<SearchBranch> current;
  {
    std::array<std::vector<std::size_t>, 3> all;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t i = 0; i < report.pools[r].size(); ++i) all[r].push_back(i);
    refine(0, nullptr, all, current);
  }
  auto register_branches = [&](std::vector<SearchBranch>& bs) {
    for (auto& b : bs) {
      b.id = report.branches.size();
      report.branches.push_back(b);
    }
  };
  register_branches(current);
  for (std::size_t stage = 1; stage < report.probes.size(); ++stage) {
    std::vector<SearchBranch> next;
    for (const auto& b : current) refine(stage, &b, b.alive, next);
    register_branches(next);
    current = std::move(next);
  }

  std::set<std::array<std::size_t, 3>> triples;
  for (const auto& b : current)
    for (std::size_t a : b.alive[0])
      for (std::size_t bb : b.alive[1])
        for (std::size_t c : b.alive[2]) triples.insert({a, bb, c});
  report.survivor_count = triples.size();
  std::size_t listed = 0;
  for (const auto& t : triples) {
    if (listed++ >= options.survivor_listing_cap) break;
    SurvivingTriple s;
    for (std::size_t r = 0; r < 3; ++r) {
      s.names[r] = report.pools[r][t[r]].name;
      s.keys[r] = report.pools[r][t[r]].key;
    }
    report.survivors.push_back(std::move(s));
  }
  if (inconclusive) report.status = SearchStatus::inconclusive;
  else if (report.survivor_count == 0) report.status = SearchStatus::none;
  else if (report.survivor_count == 1) report.status = SearchStatus::unique;
  else report.status = SearchStatus::multiple;
  return report;
}

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> default_probes(PythClass cls) {
  if (cls == PythClass::P1) return {{2, 1}, {4, 1}, {5, 2}};
  return {{3, 2}, {4, 3}, {7, 4}};
}

}  // namespace hosoya
