#pragma once

#include "hosoya/graph.hpp"
#include "hosoya/graph_io.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hosoya {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t where)
      : std::invalid_argument(what + " at offset " + std::to_string(where)), offset(where) {}
  std::size_t offset;
};

// Graph expression language:
//
//   expr   := term ('v' term)*                 left-associative one-point union
//   term   := atom marker?
//   atom   := 'C(' ints ')' | 'Q' s '(' ints ')' | 'T' s '(' ints ')'
//           | 'K' n | 'K' a ',' b | 'g6"' graph6 '"' | '(' expr ')'
//   marker := '@' i | '@l=' i ',r=' j | '@l=r=' i
//
// Marker positions are 1-based spine positions for C/Q/T and 1-based vertex
// numbers otherwise. An unmarked term is based at position 1 on both sides.
namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  PointedGraph parse() {
    PointedGraph g = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  struct Atom {
    Graph graph;
    std::size_t positions;  // number of addressable marker positions
    bool spine;             // positions are spine vertices 0..positions-1
  };

  PointedGraph expr() {
    PointedGraph acc = term();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 'v' &&
          (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
        ++pos_;
        acc = one_point_union(acc, term());
      } else {
        return acc;
      }
    }
  }

  PointedGraph term() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      PointedGraph inner = expr();
      expect(')');
      if (peek() == '@') fail("markers cannot follow a parenthesised union");
      return inner;
    }
    Atom atom = parse_atom();
    std::size_t left = 1, right = 1;
    if (peek() == '@') {
      ++pos_;
      if (match("l=r=")) {
        left = right = number();
      } else if (match("l=")) {
        left = number();
        expect(',');
        if (!match("r=")) fail("expected 'r='");
        right = number();
      } else if (match("r=")) {
        right = number();
        expect(',');
        if (!match("l=")) fail("expected 'l='");
        left = number();
      } else {
        left = right = number();
      }
    }
    if (left < 1 || left > atom.positions || right < 1 || right > atom.positions)
      fail("base marker outside 1.." + std::to_string(atom.positions));
    return PointedGraph(std::move(atom.graph), static_cast<Vertex>(left - 1), static_cast<Vertex>(right - 1));
  }

  Atom parse_atom() {
    skip_ws();
    const std::size_t start = pos_;
    try {
      if (match("g6\"")) {
        std::size_t end = text_.find('"', pos_);
        if (end == std::string_view::npos) fail("unterminated g6 literal");
        Graph g = from_graph6(std::string(text_.substr(pos_, end - pos_)));
        pos_ = end + 1;
        return Atom{g, static_cast<std::size_t>(g.vertex_count()), false};
      }
      const char head = peek();
      if (head == 'C') {
        ++pos_;
        CaterpillarSpec spec(int_list());
        return Atom{caterpillar(spec), spec.length(), true};
      }
      if (head == 'Q' || head == 'T') {
        ++pos_;
        const std::size_t s = number();
        CaterpillarSpec spec(int_list());
        Graph g = head == 'Q' ? q_graph(s, spec) : theta_graph(s, spec);
        return Atom{g, spec.length(), true};
      }
      if (head == 'K') {
        ++pos_;
        const std::size_t a = number();
        if (peek() == ',') {
          ++pos_;
          const std::size_t b = number();
          Graph g = complete_bipartite(static_cast<int>(a), static_cast<int>(b));
          return Atom{g, a + b, false};
        }
        return Atom{complete(static_cast<int>(a)), a, false};
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), start);
    }
    fail("expected C(...), Q<s>(...), T<s>(...), K<n>, K<a>,<b> or g6\"...\"");
  }

  std::vector<unsigned> int_list() {
    expect('(');
    std::vector<unsigned> out{static_cast<unsigned>(number())};
    while (peek() == ',') {
      ++pos_;
      out.push_back(static_cast<unsigned>(number()));
    }
    expect(')');
    return out;
  }

  std::size_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1000000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool match(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline PointedGraph parse_graph_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

}  // namespace hosoya
