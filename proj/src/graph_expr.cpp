#include <cctype>
#include <limits>

#include "bdom/errors.hpp"
#include "bdom/graph.hpp"

namespace bdom {

namespace {

// expr := term ('*' term)* ; term := 'P' int | 'C' int | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, std::size_t max_vertices) : text_(text), max_vertices_(max_vertices) {}

  FiniteGraph parse() {
    skip_space();
    if (at_end()) throw ParseError("empty graph expression", pos_);
    FiniteGraph g = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return g;
  }

 private:
  FiniteGraph expr() {
    FiniteGraph g = term();
    for (;;) {
      skip_space();
      if (at_end() || text_[pos_] != '*') return g;
      const auto op = pos_++;
      FiniteGraph h = term();
      const auto size = static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(h.vertex_count());
      if (size > max_vertices_) {
        throw ParseError("product has " + std::to_string(size) + " vertices, limit is " + std::to_string(max_vertices_),
                         op);
      }
      g = FiniteGraph::box_product(g, h);
    }
  }

  FiniteGraph term() {
    skip_space();
    if (at_end()) throw ParseError("expected P<k>, C<k> or '('", pos_);
    const auto start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FiniteGraph g = expr();
      skip_space();
      if (at_end() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return g;
    }
    if (c == 'P' || c == 'C') {
      ++pos_;
      const long k = integer();
      if (c == 'P') {
        if (k < 1) throw ParseError("path P<k> needs k >= 1", start);
        if (static_cast<std::size_t>(k) > max_vertices_) throw ParseError("path exceeds vertex limit", start);
        return FiniteGraph::path(static_cast<int>(k));
      }
      if (k < 3) throw ParseError("cycle C<k> needs k >= 3", start);
      if (static_cast<std::size_t>(k) > max_vertices_) throw ParseError("cycle exceeds vertex limit", start);
      return FiniteGraph::cycle(static_cast<int>(k));
    }
    throw ParseError(std::string("unexpected '") + c + "', expected P<k>, C<k> or '('", pos_);
  }

  long integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected a vertex count", pos_);
    }
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) throw ParseError("vertex count too large", pos_);
      ++pos_;
    }
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t max_vertices_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGraph parse_graph_expr(std::string_view text, std::size_t max_vertices) {
  return Parser(text, max_vertices).parse();
}

}  // namespace bdom
