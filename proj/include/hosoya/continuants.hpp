#pragma once

#include "hosoya/bigint.hpp"

#include <ranges>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hosoya {

/// K() = 1, K(x1) = x1, K(x1..xd) = xd K(x1..x_{d-1}) + K(x1..x_{d-2}).
template <std::ranges::input_range Terms>
BigInt continuant(const Terms& terms) {
  BigInt prev = 1;  // K_{d-2}
  BigInt cur = 1;   // K_{d-1}, starting from K_0
  bool first = true;
  for (const auto& t : terms) {
    BigInt x(t);
    if (x <= 0) throw std::invalid_argument("continuant terms must be positive");
    if (first) {
      prev = 1;
      cur = x;
      first = false;
      continue;
    }
    BigInt next = x * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline BigInt continuant(std::initializer_list<unsigned> terms) { return continuant(std::vector<unsigned>(terms)); }

/// Canonical continued fraction [a1..ad]: positive terms, and a_d >= 2 unless d = 1.
class ContinuedFraction {
 public:
  explicit ContinuedFraction(std::vector<BigInt> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("continued fraction needs at least one term");
    for (const auto& t : terms_)
      if (t <= 0) throw std::invalid_argument("continued fraction terms must be positive");
    if (terms_.size() > 1 && terms_.back() < 2)
      throw std::invalid_argument("canonical continued fraction cannot end in 1");
  }

  const std::vector<BigInt>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  std::vector<unsigned> small_terms() const {
    std::vector<unsigned> out;
    for (const auto& t : terms_) {
      if (t > std::numeric_limits<unsigned>::max()) throw std::overflow_error("partial quotient too large");
      out.push_back(t.convert_to<unsigned>());
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += ',';
      out += terms_[i].str();
    }
    return out + "]";
  }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<BigInt> terms_;
};

/// Euclidean expansion of m/n for coprime m > n >= 1.
inline ContinuedFraction cf_expand(BigInt m, BigInt n) {
  if (n < 1 || m <= n) throw std::invalid_argument("cf_expand needs m > n >= 1");
  if (gcd(m, n) != 1) throw std::invalid_argument("cf_expand needs gcd(m, n) = 1");
  std::vector<BigInt> terms;
  while (n != 0) {
    terms.push_back(m / n);
    BigInt r = m % n;
    m = std::move(n);
    n = std::move(r);
  }
  return ContinuedFraction(std::move(terms));
}

/// Rewrites a trailing 1 into the previous term, [.., a, 1] = [.., a + 1].
template <std::ranges::input_range Terms>
std::vector<BigInt> canonical_terms(const Terms& terms) {
  std::vector<BigInt> out;
  for (const auto& t : terms) out.emplace_back(t);
  if (out.size() > 1 && out.back() == 1) {
    out.pop_back();
    out.back() += 1;
  }
  return out;
}

/// Evaluates the nested fraction a1 + 1/(a2 + 1/(...)) from the innermost
/// term outwards, returning (numerator, denominator) in lowest terms.
template <std::ranges::input_range Terms>
std::pair<BigInt, BigInt> evaluate_nested(const Terms& terms) {
  std::vector<BigInt> a;
  for (const auto& t : terms) a.emplace_back(t);
  if (a.empty()) throw std::invalid_argument("empty continued fraction");
  BigInt num = a.back(), den = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    BigInt next_num = a[i] * num + den;
    den = std::move(num);
    num = std::move(next_num);
  }
  BigInt g = gcd(num, den);
  return {num / g, den / g};
}

/// Checks that equal (K(a), K(a2..)) against (K(b), K(b2..)) forces a = b.
/// Both tuples must end in a term > 1; for such tuples this always holds.
inline bool continuant_uniqueness_check(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  if (a.empty() || b.empty() || a.back() < 2 || b.back() < 2)
    throw std::invalid_argument("uniqueness check needs tuples ending in a term > 1");
  const std::vector<unsigned> tail_a(a.begin() + 1, a.end()), tail_b(b.begin() + 1, b.end());
  const bool same_pair = continuant(a) == continuant(b) && continuant(tail_a) == continuant(tail_b);
  return !same_pair || a == b;
}

}  // namespace hosoya
