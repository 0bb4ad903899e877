#pragma once

#include "hosoya/continuants.hpp"
#include "hosoya/demos.hpp"
#include "hosoya/expr.hpp"
#include "hosoya/graph_io.hpp"
#include "hosoya/kernel_search.hpp"
#include "hosoya/matching.hpp"
#include "hosoya/names.hpp"
#include "hosoya/pythagoras.hpp"
#include "hosoya/ztable.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

// JSON forms of every report. Each from_json inverts the matching to_json, so
// a report printed with --format json can be read back unchanged.

namespace nlohmann {

template <>
struct adl_serializer<hosoya::BigInt> {
  static void to_json(json& j, const hosoya::BigInt& v) { j = v.str(); }
  static void from_json(const json& j, hosoya::BigInt& v) { v = hosoya::parse_bigint(j.get<std::string>()); }
};

template <class T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) j = *v;
    else j = nullptr;
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) v.reset();
    else v = j.get<T>();
  }
};

template <>
struct adl_serializer<hosoya::Graph> {
  static void to_json(json& j, const hosoya::Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    j = json{{"vertices", g.vertex_count()}, {"edges", edges}, {"graph6", hosoya::to_graph6(g)}};
  }
  static void from_json(const json& j, hosoya::Graph& g) {
    g = hosoya::Graph(j.at("vertices").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  }
};

template <>
struct adl_serializer<hosoya::PointedGraph> {
  static void to_json(json& j, const hosoya::PointedGraph& p) {
    j = json{{"graph", p.graph}, {"left_base", p.left_base}, {"right_base", p.right_base}};
  }
  static void from_json(const json& j, hosoya::PointedGraph& p) {
    p = hosoya::PointedGraph(j.at("graph").get<hosoya::Graph>(), j.at("left_base").get<int>(), j.at("right_base").get<int>());
  }
};

}  // namespace nlohmann

namespace hosoya {

using json = nlohmann::json;

NLOHMANN_JSON_SERIALIZE_ENUM(PythClass, {{PythClass::P1, "P1"}, {PythClass::P2, "P2"}})
NLOHMANN_JSON_SERIALIZE_ENUM(KernelRole, {{KernelRole::A, "A"}, {KernelRole::B, "B"}, {KernelRole::C, "C"}})
NLOHMANN_JSON_SERIALIZE_ENUM(SearchStatus, {{SearchStatus::unique, "unique"},
                                            {SearchStatus::multiple, "multiple"},
                                            {SearchStatus::none, "none"},
                                            {SearchStatus::inconclusive, "inconclusive"}})

// ---- reports built for the command line ----

struct ZReport {
  std::string expression;
  std::string name;
  PointedGraph graph;
  std::vector<BigInt> p_bruteforce;
  std::vector<BigInt> p_recursive;
  BigInt z_bruteforce = 0;
  BigInt z_recursive = 0;
  bool agree = false;
};

inline ZReport make_z_report(const std::string& expression, const PointedGraph& g) {
  ZReport r;
  r.expression = expression;
  r.graph = g;
  r.name = describe(g.graph);
  r.p_bruteforce = matching_poly_bruteforce(g.graph).coeffs;
  r.p_recursive = matching_poly(g.graph).coeffs;
  r.z_bruteforce = MatchingCounts{r.p_bruteforce}.total();
  r.z_recursive = hosoya_z(g.graph);
  r.agree = r.p_bruteforce == r.p_recursive && r.z_bruteforce == r.z_recursive;
  return r;
}

struct TripleReport {
  BigInt m = 0, n = 0;
  PythClass cls = PythClass::P1;
  std::vector<BigInt> continued_fraction;
  std::string glue;
  std::array<std::string, 3> kernels;
  std::array<std::string, 3> composites;
  std::array<std::string, 3> closed_forms;
  std::array<BigInt, 3> z;
  std::array<BigInt, 3> expected;
  bool engines_agree = false;
  bool pythagorean = false;
  bool coprime = false;
  bool parity = false;
  bool matches_phi = false;
  bool matches_closed_form = false;
  std::vector<std::string> problems;
  bool passed = false;
};

inline TripleReport make_triple_report(const PythParams& params, VerifyOptions options = {}) {
  const FamilyTriple t = build_triple(params);
  const TripleVerification v = verify_triple(t, params, options);
  TripleReport r;
  r.m = params.m;
  r.n = params.n;
  r.cls = params.cls;
  r.continued_fraction = t.expansion->terms();
  r.glue = describe(t.glue);
  for (std::size_t i = 0; i < 3; ++i) {
    r.kernels[i] = describe(t.kernels[i]);
    r.composites[i] = describe(t.composites[i]);
    r.closed_forms[i] = (*t.explicit_composites)[i].to_string();
    r.z[i] = v.z_bruteforce[i];
  }
  r.expected = {v.expected.a, v.expected.b, v.expected.c};
  r.engines_agree = v.engines_agree;
  r.pythagorean = v.pythagorean;
  r.coprime = v.coprime;
  r.parity = v.parity;
  r.matches_phi = v.matches_phi;
  r.matches_closed_form = v.matches_explicit;
  r.problems = v.problems;
  r.passed = v.passed();
  return r;
}

struct CfReport {
  BigInt m = 0, n = 0;
  std::vector<BigInt> terms;
  BigInt numerator = 0, denominator = 0;  // re-evaluated from the terms
  bool consistent = false;
};

inline CfReport make_cf_report(const BigInt& m, const BigInt& n) {
  CfReport r;
  r.m = m;
  r.n = n;
  r.terms = cf_expand(m, n).terms();
  std::tie(r.numerator, r.denominator) = evaluate_nested(r.terms);
  r.consistent = r.numerator == m && r.denominator == n;
  return r;
}

struct ContinuantReport {
  std::vector<BigInt> terms;
  BigInt continuant = 0;
  std::optional<BigInt> caterpillar_z;  // set when the terms fit a caterpillar spec
  bool agree = true;
};

inline ContinuantReport make_continuant_report(const std::vector<BigInt>& terms) {
  ContinuantReport r;
  r.terms = terms;
  r.continuant = continuant(terms);
  std::vector<unsigned> small;
  BigInt total = 0;
  for (const auto& t : terms) total += t;
  if (total <= 4096) {
    for (const auto& t : terms) small.push_back(t.convert_to<unsigned>());
    if (!small.empty()) {
      r.caterpillar_z = hosoya_z(caterpillar(CaterpillarSpec(small)));
      r.agree = *r.caterpillar_z == r.continuant;
    }
  }
  return r;
}

struct EnumeratedGraph {
  std::string name;
  Graph graph;
  BigInt z = 0;
};

struct EnumerateReport {
  std::optional<std::uint64_t> max_z;
  std::optional<std::size_t> max_edges;
  std::vector<EnumeratedGraph> graphs;
  bool truncated = false;
};

/// Connected graphs with Z <= max_z and/or at most max_edges edges.
inline EnumerateReport make_enumerate_report(std::optional<std::uint64_t> max_z, std::optional<std::size_t> max_edges,
                                             unsigned jobs) {
  if (!max_z && !max_edges) throw std::invalid_argument("enumerate needs --max-z or --max-edges");
  EnumerateReport r;
  r.max_z = max_z;
  r.max_edges = max_edges;
  GenerationFilter filter = [max_z](const Graph& g, const std::vector<int>&) {
    return !max_z || count_matchings_capped(g, *max_z) <= *max_z;
  };
  GenerationOptions opts;
  opts.jobs = jobs;
  if (max_edges) opts.max_edges = *max_edges;
  auto gen = generate_connected({single_vertex_root()}, filter, opts);
  r.truncated = max_z && gen.truncated;
  HosoyaEngine engine;
  for (auto& g : gen.graphs) r.graphs.push_back(EnumeratedGraph{describe(g.graph), g.graph, engine.z(g.graph)});
  return r;
}

// ---- serialization ----

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ZReport, expression, name, graph, p_bruteforce, p_recursive, z_bruteforce, z_recursive,
                                   agree)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TripleReport, m, n, cls, continued_fraction, glue, kernels, composites, closed_forms, z,
                                   expected, engines_agree, pythagorean, coprime, parity, matches_phi, matches_closed_form,
                                   problems, passed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CfReport, m, n, terms, numerator, denominator, consistent)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ContinuantReport, terms, continuant, caterpillar_z, agree)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EnumeratedGraph, name, graph, z)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EnumerateReport, max_z, max_edges, graphs, truncated)

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NamedValueCheck, group, expression, expected, bruteforce, recursive, ok, note)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ClassCheck, z, expected_count, actual_count, members, missing_named, unmatched, unparsed,
                                   ok)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TableReport, named, classes, derivations, discrepancies, passed)

inline void to_json(json& j, const ZTable& t) {
  j = json{{"max_z", t.max_z}, {"classes", json::array()}};
  for (const auto& [z, graphs] : t.classes) {
    json members = json::array();
    for (const auto& g : graphs) members.push_back({{"name", describe(g)}, {"graph", g}});
    j["classes"].push_back({{"z", z}, {"count", graphs.size()}, {"graphs", members}});
  }
}

inline void from_json(const json& j, ZTable& t) {
  t.max_z = j.at("max_z").get<std::uint64_t>();
  t.classes.clear();
  for (const auto& c : j.at("classes")) {
    auto& list = t.classes[c.at("z").get<std::uint64_t>()];
    for (const auto& g : c.at("graphs")) list.push_back(g.at("graph").get<Graph>());
  }
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Signature, x, y)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(KernelCandidate, kernel, key, name, z, z_left, z_right, z_both)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GlueClass, signature, representative, representative_graph, members)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ProbeInfo, m, n, targets, glue_edge_budget, glue_truncated, glues)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SearchBranch, id, stage, parent, path, alive)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LogEntry, stage, m, n, branch, signature, glue, role, kernel, kernel_key, z, target, hit)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SurvivingTriple, names, keys)

/// The elimination log can run to thousands of entries; it is included only
/// when `with_log` is set, and `log_entries` always records its length.
inline json kernel_report_json(const KernelSearchReport& r, bool with_log) {
  json j{{"class", r.cls},
         {"probes", r.probes},
         {"kernel_bounds", r.kernel_bounds},
         {"kernel_edge_budgets", r.kernel_edge_budgets},
         {"kernel_truncated", r.kernel_truncated},
         {"pools", r.pools},
         {"branches", r.branches},
         {"log_entries", r.log.size()},
         {"survivors", r.survivors},
         {"survivor_count", r.survivor_count},
         {"status", r.status},
         {"notes", r.notes}};
  if (with_log) j["log"] = r.log;
  return j;
}

inline void to_json(json& j, const KernelSearchReport& r) { j = kernel_report_json(r, true); }

inline void from_json(const json& j, KernelSearchReport& r) {
  j.at("class").get_to(r.cls);
  j.at("probes").get_to(r.probes);
  j.at("kernel_bounds").get_to(r.kernel_bounds);
  j.at("kernel_edge_budgets").get_to(r.kernel_edge_budgets);
  j.at("kernel_truncated").get_to(r.kernel_truncated);
  j.at("pools").get_to(r.pools);
  j.at("branches").get_to(r.branches);
  r.log.clear();
  if (j.contains("log")) j.at("log").get_to(r.log);
  j.at("survivors").get_to(r.survivors);
  j.at("survivor_count").get_to(r.survivor_count);
  j.at("status").get_to(r.status);
  j.at("notes").get_to(r.notes);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PythTriple, a, b, c)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GlueVariant, glue, z, z_without_base, triple)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NonUniquenessReport, m, n, expected, variants, equal_z, equal_base_deleted, triples_match,
                                   passed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CaterpillarCheckReport, max_part, max_length, specs, pairs, shared_pairs, counterexamples,
                                   passed)

}  // namespace hosoya
