#pragma once

// Grove-arithmetic expressions in name notation.
//
//   query   := ('deg' | 'card') '(' union ')' | union
//   union   := sum ('u' sum)*
//   sum     := side ('+' side)*
//   side    := product (('<+' | '+>' | '<+>') product)*
//   product := unary ('*' unary)*
//   unary   := '~' unary | primary
//   primary := name | '{' name (',' name)* '}' | 'total' '(' integer ')' | '(' union ')'
//
// Names are compact digit strings, bracket lists such as [1,10,2], or 0 for
// the leaf. All binary operators associate to the left.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "arithmetree/binary_arith.hpp"
#include "arithmetree/config.hpp"
#include "arithmetree/enumerate.hpp"
#include "arithmetree/error.hpp"
#include "arithmetree/grove.hpp"
#include "arithmetree/notation.hpp"
#include "arithmetree/planar_arith.hpp"

namespace arithmetree {

enum class ExprKind { literal, total, mirror, unite, sum, left, right, middle, product, degree, cardinality };

struct Expr {
  ExprKind kind = ExprKind::literal;
  std::vector<Name> names;  // literal
  unsigned total = 0;       // total(n)
  std::shared_ptr<const Expr> lhs;
  std::shared_ptr<const Expr> rhs;
  std::size_t position = 0;

  bool is_query() const { return kind == ExprKind::degree || kind == ExprKind::cardinality; }
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace detail {

enum class TokenKind { name, integer_word, word, symbol, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  std::size_t position = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({TokenKind::end, "", pos_});
        return out;
      }
      const std::size_t start = pos_;
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        out.push_back({TokenKind::name, std::string(text_.substr(start, pos_ - start)), start});
      } else if (c == '[') {
        auto close = text_.find(']', pos_);
        if (close == std::string_view::npos) throw SyntaxError("unterminated bracket name", start);
        pos_ = close + 1;
        out.push_back({TokenKind::name, std::string(text_.substr(start, pos_ - start)), start});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        out.push_back({TokenKind::word, std::string(text_.substr(start, pos_ - start)), start});
      } else {
        out.push_back({TokenKind::symbol, symbol(), start});
      }
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Longest match first, so "<+>" is not read as "<+" ">".
  std::string symbol() {
    for (std::string_view s : {"<+>", "<+", "+>", "+", "*", "~", "(", ")", "{", "}", ","}) {
      if (text_.substr(pos_, s.size()) == s) {
        pos_ += s.size();
        return std::string(s);
      }
    }
    throw SyntaxError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  ExprPtr run() {
    ExprPtr e = query();
    if (peek().kind != TokenKind::end) throw SyntaxError("unexpected '" + peek().text + "'", peek().position);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& next() { return tokens_[index_++]; }

  bool accept(std::string_view symbol) {
    if (peek().kind == TokenKind::symbol && peek().text == symbol) {
      ++index_;
      return true;
    }
    return false;
  }

  void expect(std::string_view symbol) {
    if (!accept(symbol)) {
      const auto& t = peek();
      throw SyntaxError("expected '" + std::string(symbol) + "'" +
                            (t.kind == TokenKind::end ? " at end of input" : " before '" + t.text + "'"),
                        t.position);
    }
  }

  static ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, std::size_t position) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    e->position = position;
    return e;
  }

  bool at_word(std::string_view w) const { return peek().kind == TokenKind::word && peek().text == w; }

  ExprPtr query() {
    for (auto [word, kind] : {std::pair{"deg", ExprKind::degree}, std::pair{"card", ExprKind::cardinality}}) {
      if (at_word(word)) {
        const auto position = next().position;
        expect("(");
        auto inner = unite();
        expect(")");
        return binary(kind, std::move(inner), nullptr, position);
      }
    }
    return unite();
  }

  ExprPtr unite() {
    ExprPtr e = sum();
    while (at_word("u")) {
      const auto position = next().position;
      e = binary(ExprKind::unite, e, sum(), position);
    }
    return e;
  }

  ExprPtr sum() {
    ExprPtr e = side();
    while (peek().kind == TokenKind::symbol && peek().text == "+") {
      const auto position = next().position;
      e = binary(ExprKind::sum, e, side(), position);
    }
    return e;
  }

  ExprPtr side() {
    ExprPtr e = product();
    while (peek().kind == TokenKind::symbol) {
      ExprKind kind;
      if (peek().text == "<+") {
        kind = ExprKind::left;
      } else if (peek().text == "+>") {
        kind = ExprKind::right;
      } else if (peek().text == "<+>") {
        kind = ExprKind::middle;
      } else {
        break;
      }
      const auto position = next().position;
      e = binary(kind, e, product(), position);
    }
    return e;
  }

  ExprPtr product() {
    ExprPtr e = unary();
    while (peek().kind == TokenKind::symbol && peek().text == "*") {
      const auto position = next().position;
      e = binary(ExprKind::product, e, unary(), position);
    }
    return e;
  }

  ExprPtr unary() {
    if (peek().kind == TokenKind::symbol && peek().text == "~") {
      const auto position = next().position;
      return binary(ExprKind::mirror, unary(), nullptr, position);
    }
    return primary();
  }

  Name name_at(const Token& t) {
    try {
      return parse_name(t.text);
    } catch (const InvalidName& e) {
      throw InvalidName(std::string(e.what()) + " at position " + std::to_string(t.position));
    }
  }

  ExprPtr primary() {
    const Token& t = peek();
    auto e = std::make_shared<Expr>();
    e->position = t.position;
    if (t.kind == TokenKind::name) {
      next();
      e->names.push_back(name_at(t));
      return e;
    }
    if (t.kind == TokenKind::word && t.text == "total") {
      next();
      expect("(");
      const Token& n = peek();
      if (n.kind != TokenKind::name || n.text.size() > 3) {
        throw SyntaxError("total() takes a small non-negative integer", n.position);
      }
      next();
      e->kind = ExprKind::total;
      e->total = static_cast<unsigned>(std::stoul(n.text));
      expect(")");
      return e;
    }
    if (t.kind == TokenKind::word && (t.text == "deg" || t.text == "card")) {
      throw SyntaxError(t.text + "() yields an integer and may only enclose a whole expression", t.position);
    }
    if (accept("{")) {
      do {
        const Token& n = peek();
        if (n.kind != TokenKind::name) throw SyntaxError("expected a tree name in grove", n.position);
        next();
        e->names.push_back(name_at(n));
      } while (accept(","));
      expect("}");
      return e;
    }
    if (accept("(")) {
      ExprPtr inner = unite();
      expect(")");
      return inner;
    }
    if (t.kind == TokenKind::end) throw SyntaxError("unexpected end of input", t.position);
    throw SyntaxError("unexpected '" + t.text + "'", t.position);
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

template <class Tree>
Grove<Tree> eval_grove(const Expr& e, const Limits& limits) {
  const unsigned cap = Tree::flavor == Flavor::binary ? limits.binary_cap : limits.planar_cap;
  auto capped = [&](Grove<Tree> g) {
    check_cap(g.degree(), cap, "result");
    return g;
  };
  switch (e.kind) {
    case ExprKind::literal: {
      std::vector<Tree> trees;
      for (const auto& n : e.names) trees.push_back(Tree::from_name(n));
      return Grove<Tree>(std::move(trees));
    }
    case ExprKind::total:
      return total_grove<Tree>(e.total, limits);
    case ExprKind::mirror:
      return mirror(eval_grove<Tree>(*e.lhs, limits));
    default:
      break;
  }
  const auto g = eval_grove<Tree>(*e.lhs, limits);
  const auto h = eval_grove<Tree>(*e.rhs, limits);
  switch (e.kind) {
    case ExprKind::unite:
      return grove_union(g, h);
    case ExprKind::product:
      return multiply(g, h, limits);
    case ExprKind::sum:
      check_cap(g.degree() + h.degree(), cap, "sum");
      return capped(sum(g, h));
    case ExprKind::left:
    case ExprKind::right:
    case ExprKind::middle: {
      const Connective c = e.kind == ExprKind::left    ? Connective::left
                           : e.kind == ExprKind::right ? Connective::right
                                                       : Connective::middle;
      if constexpr (Tree::flavor == Flavor::binary) {
        if (c == Connective::middle) throw FlavorMismatch("<+> is only available for planar trees");
      }
      check_cap(g.degree() + h.degree(), cap, "sum");
      return tri_sum(c, g, h);
    }
    default:
      throw SyntaxError("a query cannot be nested", e.position);
  }
}

}  // namespace detail

inline ExprPtr parse_expression(std::string_view text) { return detail::Parser(text).run(); }

// A grove, or an integer for deg() and card().
using ExprValue = std::variant<AnyGrove, std::uint64_t>;

template <class Tree>
ExprValue evaluate(const Expr& e, const Limits& limits = default_limits()) {
  if (e.is_query()) {
    const auto g = detail::eval_grove<Tree>(*e.lhs, limits);
    return static_cast<std::uint64_t>(e.kind == ExprKind::degree ? g.degree() : g.size());
  }
  return AnyGrove(detail::eval_grove<Tree>(e, limits));
}

inline ExprValue evaluate(const Expr& e, Flavor flavor, const Limits& limits = default_limits()) {
  return flavor == Flavor::binary ? evaluate<PBTree>(e, limits) : evaluate<PTree>(e, limits);
}

inline ExprValue evaluate(std::string_view text, Flavor flavor, const Limits& limits = default_limits()) {
  return evaluate(*parse_expression(text), flavor, limits);
}

inline std::string to_string(const ExprValue& v) {
  if (const auto* n = std::get_if<std::uint64_t>(&v)) return std::to_string(*n);
  return std::visit([](const auto& g) { return to_string(g); }, std::get<AnyGrove>(v));
}

}  // namespace arithmetree
