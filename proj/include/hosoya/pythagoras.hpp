#pragma once

#include "hosoya/bigint.hpp"
#include "hosoya/canonical.hpp"
#include "hosoya/continuants.hpp"
#include "hosoya/graph.hpp"
#include "hosoya/matching.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hosoya {

/// P1: m/n >= 2.  P2: 1 < m/n < 2.
enum class PythClass { P1, P2 };

inline std::string to_string(PythClass c) { return c == PythClass::P1 ? "P1" : "P2"; }

inline PythClass parse_pyth_class(const std::string& text) {
  if (text == "P1" || text == "p1" || text == "1") return PythClass::P1;
  if (text == "P2" || text == "p2" || text == "2") return PythClass::P2;
  throw std::invalid_argument("unknown class '" + text + "' (expected P1 or P2)");
}

struct PythParams {
  BigInt m;
  BigInt n;
  PythClass cls = PythClass::P1;
  friend bool operator==(const PythParams&, const PythParams&) = default;
};

/// Validates (m, n): coprime, opposite parity, m > n >= 1.
inline PythParams classify(const BigInt& m, const BigInt& n) {
  if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
  if (m <= n) throw std::invalid_argument("need m > n");
  if (gcd(m, n) != 1) throw std::invalid_argument("m and n are not coprime");
  if ((m % 2) == (n % 2)) throw std::invalid_argument("m and n must have opposite parity");
  return PythParams{m, n, m >= 2 * n ? PythClass::P1 : PythClass::P2};
}

struct PythTriple {
  BigInt a;
  BigInt b;
  BigInt c;
  friend bool operator==(const PythTriple&, const PythTriple&) = default;
};

/// (m^2 - n^2, 2mn, m^2 + n^2).
inline PythTriple phi(const PythParams& p) {
  return PythTriple{p.m * p.m - p.n * p.n, 2 * p.m * p.n, p.m * p.m + p.n * p.n};
}

/// Pointed kernels for the A, B and C members of a family.
struct KernelTriple {
  std::array<PointedGraph, 3> kernels;
  const PointedGraph& operator[](std::size_t i) const { return kernels.at(i); }
};

/// P1: (C(1,1,1)@1,3, C(4)@1, C(2,2)@1,2).  P2: (C(3)@1, C(1,2,1)@1,3, C(1,1,1,1)@1,4).
/// The P2 B-kernel is C(1,2,1); C(1,3,1) does not produce 2mn.
inline KernelTriple standard_kernels(PythClass cls) {
  if (cls == PythClass::P1) {
    return KernelTriple{{pointed_caterpillar({1, 1, 1}, 1, 3), pointed_caterpillar({4}, 1),
                         pointed_caterpillar({2, 2}, 1, 2)}};
  }
  return KernelTriple{{pointed_caterpillar({3}, 1), pointed_caterpillar({1, 2, 1}, 1, 3),
                       pointed_caterpillar({1, 1, 1, 1}, 1, 4)}};
}

struct FamilyTriple {
  PointedGraph glue;
  KernelTriple kernels;
  std::array<Graph, 3> composites;
  std::optional<CaterpillarSpec> glue_spec;
  std::optional<ContinuedFraction> expansion;
  /// Closed-form caterpillars the one-point unions must agree with.
  std::optional<std::array<CaterpillarSpec, 3>> explicit_composites;
};

inline FamilyTriple assemble_triple(const PointedGraph& glue, const KernelTriple& kernels) {
  FamilyTriple t{glue, kernels, {}, std::nullopt, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < 3; ++i) t.composites[i] = symmetric_composite(glue, kernels[i]).graph;
  return t;
}

namespace detail {
inline std::vector<unsigned> mirrored(const std::vector<unsigned>& tail, std::vector<unsigned> middle) {
  std::vector<unsigned> out(tail.rbegin(), tail.rend());
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}
}  // namespace detail

/// Glue from the continued fraction m/n = [a1..ad]: C(a1-1, a2..ad) for P1,
/// C(a2..ad) for P2 (where a1 = 1), based at spine vertex 1.
inline FamilyTriple build_triple(const PythParams& params) {
  ContinuedFraction cf = cf_expand(params.m, params.n);
  const std::vector<unsigned> a = cf.small_terms();
  std::vector<unsigned> glue_parts;
  std::array<std::vector<unsigned>, 3> explicit_parts;
  if (params.cls == PythClass::P1) {
    glue_parts = a;
    glue_parts[0] -= 1;
    const std::vector<unsigned> tail(a.begin() + 1, a.end());
    const unsigned a1 = a[0];
    explicit_parts = {detail::mirrored(tail, {a1 - 1, 1, a1 - 1}), detail::mirrored(tail, {2 * a1}),
                      detail::mirrored(tail, {a1, a1})};
  } else {
    if (a.size() < 2 || a[0] != 1) throw std::logic_error("P2 expansion must start with 1");
    glue_parts.assign(a.begin() + 1, a.end());
    const std::vector<unsigned> tail(a.begin() + 2, a.end());
    const unsigned a2 = a[1];
    explicit_parts = {detail::mirrored(tail, {2 * a2 + 1}), detail::mirrored(tail, {a2, 2, a2}),
                      detail::mirrored(tail, {a2, 1, 1, a2})};
  }
  CaterpillarSpec glue_spec(glue_parts);
  FamilyTriple t = assemble_triple(pointed_caterpillar(glue_spec, 1), standard_kernels(params.cls));
  t.glue_spec = glue_spec;
  t.expansion = cf;
  t.explicit_composites = std::array<CaterpillarSpec, 3>{CaterpillarSpec(explicit_parts[0]),
                                                         CaterpillarSpec(explicit_parts[1]),
                                                         CaterpillarSpec(explicit_parts[2])};
  return t;
}

struct TripleVerification {
  std::array<BigInt, 3> z_bruteforce;
  std::array<BigInt, 3> z_recursive;
  PythTriple expected;
  bool engines_agree = false;
  bool pythagorean = false;
  bool coprime = false;
  bool parity = false;
  bool matches_phi = false;
  bool matches_explicit = true;
  std::vector<std::string> problems;

  bool passed() const { return problems.empty(); }
};

struct VerifyOptions {
  bool recursive = true;  // also run the recursive engine and require agreement
};

/// Failures are collected in `problems`, never thrown.
inline TripleVerification verify_triple(const FamilyTriple& triple, const PythParams& params,
                                        VerifyOptions options = {}) {
  TripleVerification v;
  v.expected = phi(params);
  for (std::size_t i = 0; i < 3; ++i) {
    v.z_bruteforce[i] = hosoya_z_bruteforce(triple.composites[i]);
    v.z_recursive[i] = options.recursive ? hosoya_z(triple.composites[i]) : v.z_bruteforce[i];
  }
  const auto& z = v.z_bruteforce;
  v.engines_agree = v.z_bruteforce == v.z_recursive;
  v.pythagorean = z[0] * z[0] + z[1] * z[1] == z[2] * z[2];
  v.coprime = gcd(gcd(z[0], z[1]), z[2]) == 1;
  v.parity = z[0] % 2 == 1 && z[2] % 2 == 1 && z[1] % 2 == 0;
  v.matches_phi = PythTriple{z[0], z[1], z[2]} == v.expected;
  if (triple.explicit_composites) {
    for (std::size_t i = 0; i < 3; ++i)
      if (!is_isomorphic(triple.composites[i], caterpillar((*triple.explicit_composites)[i])))
        v.matches_explicit = false;
  }
  if (!v.engines_agree) v.problems.push_back("brute-force and recursive Z disagree");
  if (!v.pythagorean) v.problems.push_back("a^2 + b^2 != c^2");
  if (!v.coprime) v.problems.push_back("Z values are not coprime");
  if (!v.parity) v.problems.push_back("parity pattern (odd, even, odd) violated");
  if (!v.matches_phi) v.problems.push_back("Z triple differs from phi(m, n)");
  if (!v.matches_explicit) v.problems.push_back("composite differs from its closed-form caterpillar");
  return v;
}

struct RecoveredParams {
  BigInt m;
  BigInt n;
  std::vector<BigInt> fraction;  // m/n as the continued fraction the glue implies
  std::optional<PythParams> params;
  std::string problem;
};

/// Inverts the glue construction: P1 glue C(α1..αδ) gives m/n = [α1+1, α2..αδ],
/// P2 glue gives m/n = [1, α1..αδ]. Parameters outside the class are reported.
inline RecoveredParams recover_params(const CaterpillarSpec& glue, PythClass cls) {
  RecoveredParams r;
  const auto& alpha = glue.parts();
  if (cls == PythClass::P1) {
    r.fraction.emplace_back(alpha[0] + 1);
    for (std::size_t i = 1; i < alpha.size(); ++i) r.fraction.emplace_back(alpha[i]);
  } else {
    r.fraction.emplace_back(1);
    for (unsigned x : alpha) r.fraction.emplace_back(x);
  }
  r.m = continuant(r.fraction);
  r.n = continuant(std::vector<BigInt>(r.fraction.begin() + 1, r.fraction.end()));
  try {
    PythParams p = classify(r.m, r.n);
    if (p.cls != cls) {
      r.problem = "(" + r.m.str() + "," + r.n.str() + ") lies in " + to_string(p.cls) + ", not " + to_string(cls);
    } else {
      r.params = p;
    }
  } catch (const std::invalid_argument& e) {
    r.problem = "(" + r.m.str() + "," + r.n.str() + ") is not a valid parameter pair: " + e.what();
  }
  return r;
}

}  // namespace hosoya
