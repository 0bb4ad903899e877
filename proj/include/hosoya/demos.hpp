#pragma once

#include "hosoya/canonical.hpp"
#include "hosoya/expr.hpp"
#include "hosoya/matching.hpp"
#include "hosoya/names.hpp"
#include "hosoya/pythagoras.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace hosoya {

struct GlueVariant {
  std::string glue;
  BigInt z = 0;
  BigInt z_without_base = 0;
  std::array<BigInt, 3> triple;
};

struct NonUniquenessReport {
  BigInt m = 10, n = 7;
  PythTriple expected;
  std::vector<GlueVariant> variants;  // caterpillar glue first, then each base of the 4-cycle
  bool equal_z = false;
  bool equal_base_deleted = false;
  bool triples_match = false;
  bool passed = false;
};

/// Two non-isomorphic glues, C(2,3) based at its first spine vertex and the
/// 4-cycle based anywhere, give the same triple with the P2 kernels.
inline NonUniquenessReport glue_nonuniqueness_demo() {
  NonUniquenessReport r;
  const PythParams params = classify(r.m, r.n);
  r.expected = phi(params);
  const KernelTriple kernels = standard_kernels(params.cls);
  std::vector<PointedGraph> glues{parse_graph_expr("C(2,3)@1")};
  const Graph cycle = q_graph(4, {1, 1, 1, 1});
  for (Vertex v = 0; v < cycle.vertex_count(); ++v) glues.emplace_back(cycle, v);
  for (const auto& glue : glues) {
    GlueVariant gv;
    gv.glue = describe(glue);
    gv.z = hosoya_z_bruteforce(glue.graph);
    gv.z_without_base = hosoya_z_bruteforce(delete_vertices(glue.graph, {glue.left_base}).graph);
    const FamilyTriple t = assemble_triple(glue, kernels);
    for (std::size_t i = 0; i < 3; ++i) gv.triple[i] = hosoya_z_bruteforce(t.composites[i]);
    r.variants.push_back(std::move(gv));
  }
  r.equal_z = r.triples_match = r.equal_base_deleted = true;
  for (const auto& gv : r.variants) {
    r.equal_z = r.equal_z && gv.z == r.variants.front().z;
    r.equal_base_deleted = r.equal_base_deleted && gv.z_without_base == r.variants.front().z_without_base;
    r.triples_match = r.triples_match && gv.triple == std::array<BigInt, 3>{r.expected.a, r.expected.b, r.expected.c};
  }
  r.passed = r.equal_z && r.equal_base_deleted && r.triples_match;
  return r;
}

struct CaterpillarCheckReport {
  unsigned max_part = 0;
  unsigned max_length = 0;
  std::size_t specs = 0;
  std::size_t pairs = 0;          // distinct (Z, tail Z) values
  std::size_t shared_pairs = 0;   // values reached by more than one spec
  std::vector<std::string> counterexamples;
  bool passed = false;
};

/// Over all specs with parts <= max_part and length <= max_length, specs with
/// equal (Z(C(a1..ad)), Z(C(a2..ad))) must name isomorphic caterpillars.
inline CaterpillarCheckReport caterpillar_uniqueness_check(unsigned max_part, unsigned max_length) {
  CaterpillarCheckReport r;
  r.max_part = max_part;
  r.max_length = max_length;
  HosoyaEngine engine;
  std::map<std::pair<BigInt, BigInt>, std::vector<std::pair<std::vector<unsigned>, std::string>>> groups;
  std::vector<unsigned> spec;
  auto visit = [&](auto&& self) -> void {
    if (!spec.empty()) {
      const Graph g = caterpillar(CaterpillarSpec(spec));
      const std::vector<unsigned> tail(spec.begin() + 1, spec.end());
      const BigInt tail_z = tail.empty() ? BigInt(1) : engine.z(caterpillar(CaterpillarSpec(tail)));
      groups[{engine.z(g), tail_z}].emplace_back(spec, canonical_key(g));
      ++r.specs;
    }
    if (spec.size() == max_length) return;
    for (unsigned a = 1; a <= max_part; ++a) {
      spec.push_back(a);
      self(self);
      spec.pop_back();
    }
  };
  visit(visit);
  r.pairs = groups.size();
  for (const auto& [key, members] : groups) {
    if (members.size() > 1) ++r.shared_pairs;
    for (const auto& [s, k] : members) {
      if (k != members.front().second) {
        r.counterexamples.push_back(CaterpillarSpec(members.front().first).to_string() + " vs " + CaterpillarSpec(s).to_string());
      }
    }
  }
  r.passed = r.counterexamples.empty();
  return r;
}

}  // namespace hosoya
