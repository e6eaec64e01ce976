#pragma once

// Expressions over the unit tree 1 with the Left, Right and Middle sums.

#include <memory>
#include <string>
#include <vector>

#include "arithmetree/error.hpp"

namespace arithmetree {

enum class Connective { left, right, middle };

enum class Glyphs { unicode, ascii };

inline const char* connective_symbol(Connective c, Glyphs glyphs = Glyphs::unicode) {
  if (glyphs == Glyphs::ascii) {
    switch (c) {
      case Connective::left: return "<+";
      case Connective::right: return "+>";
      case Connective::middle: return "<+>";
    }
  }
  switch (c) {
    case Connective::left: return "⊣";
    case Connective::right: return "⊢";
    case Connective::middle: return "⊥";
  }
  return "?";
}

class UExpr {
 public:
  static UExpr unit() { return UExpr(); }
  static UExpr op(Connective c, UExpr lhs, UExpr rhs);

  bool is_unit() const noexcept { return node_ == nullptr; }

  Connective connective() const;
  const UExpr& lhs() const;
  const UExpr& rhs() const;

  // Number of copies of 1; equals the degree of the tree the expression
  // denotes.
  unsigned unit_count() const;

  // Connectives in reading order, left to right.
  std::vector<Connective> connectives() const;

  bool uses_middle() const;

  friend bool operator==(const UExpr& a, const UExpr& b);

 private:
  struct Node;

  void require_op() const {
    if (is_unit()) throw DegenerateInput("the unit expression has no operands");
  }
  void collect(std::vector<Connective>& out) const;

  std::shared_ptr<const Node> node_;
};

struct UExpr::Node {
  Connective connective;
  UExpr lhs;
  UExpr rhs;
};

inline UExpr UExpr::op(Connective c, UExpr lhs, UExpr rhs) {
  UExpr e;
  e.node_ = std::make_shared<const Node>(Node{c, std::move(lhs), std::move(rhs)});
  return e;
}

inline Connective UExpr::connective() const {
  require_op();
  return node_->connective;
}

inline const UExpr& UExpr::lhs() const {
  require_op();
  return node_->lhs;
}

inline const UExpr& UExpr::rhs() const {
  require_op();
  return node_->rhs;
}

inline unsigned UExpr::unit_count() const {
  return is_unit() ? 1 : node_->lhs.unit_count() + node_->rhs.unit_count();
}

inline std::vector<Connective> UExpr::connectives() const {
  std::vector<Connective> out;
  collect(out);
  return out;
}

inline bool UExpr::uses_middle() const {
  if (is_unit()) return false;
  return node_->connective == Connective::middle || node_->lhs.uses_middle() || node_->rhs.uses_middle();
}

inline bool operator==(const UExpr& a, const UExpr& b) {
  if (a.is_unit() || b.is_unit()) return a.is_unit() && b.is_unit();
  return a.node_->connective == b.node_->connective && a.node_->lhs == b.node_->lhs && a.node_->rhs == b.node_->rhs;
}

inline void UExpr::collect(std::vector<Connective>& out) const {
  if (is_unit()) return;
  node_->lhs.collect(out);
  out.push_back(node_->connective);
  node_->rhs.collect(out);
}

namespace detail {

// (a op1 b) op2 c == a op1 (b op2 c) for these pairs, so a left-leaning
// chain of them needs no parentheses.
inline bool regroups(Connective inner, Connective outer) {
  using C = Connective;
  if (inner == C::right) return outer == C::left || outer == C::middle;
  if (inner == C::middle) return outer == C::left || outer == C::middle;
  return false;
}

inline std::string render_expr(const UExpr& e, Glyphs glyphs, bool wrap) {
  if (e.is_unit()) return "1";
  std::string left;
  const UExpr& lhs = e.lhs();
  if (!lhs.is_unit() && regroups(lhs.connective(), e.connective())) {
    left = render_expr(lhs, glyphs, false);
  } else {
    left = render_expr(lhs, glyphs, true);
  }
  std::string out = left + " " + connective_symbol(e.connective(), glyphs) + " " +
                    render_expr(e.rhs(), glyphs, true);
  return wrap ? "(" + out + ")" : out;
}

}  // namespace detail

inline std::string to_string(const UExpr& e, Glyphs glyphs = Glyphs::unicode) {
  return detail::render_expr(e, glyphs, false);
}

}  // namespace arithmetree
