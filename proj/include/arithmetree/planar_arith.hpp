#pragma once

// Arithmetic on planar trees: the Left, Right and Middle sums, the sum, the
// product, the vertex filtration and the quotient onto binary groves.

#include <optional>
#include <string>
#include <vector>

#include "arithmetree/binary_arith.hpp"
#include "arithmetree/config.hpp"
#include "arithmetree/detail/engine.hpp"
#include "arithmetree/error.hpp"
#include "arithmetree/grove.hpp"
#include "arithmetree/notation.hpp"
#include "arithmetree/tree.hpp"
#include "arithmetree/uexpr.hpp"

namespace arithmetree {

// Zero conventions, for x != 0:
//   x <+ 0 = x,   0 <+ x = 0,
//   x +> 0 = 0,   0 +> x = x,
//   x <+> 0 = 0 = 0 <+> x.
// Both operands 0 raises UndefinedCase.
inline PlanarGrove tri_sum(Connective c, const PlanarGrove& g, const PlanarGrove& h) {
  detail::Engine<PTree> engine;
  return detail::to_grove<PTree>(engine.tri(c, detail::to_names(g), detail::to_names(h)));
}

inline PlanarGrove left_sum(const PlanarGrove& g, const PlanarGrove& h) { return tri_sum(Connective::left, g, h); }
inline PlanarGrove right_sum(const PlanarGrove& g, const PlanarGrove& h) { return tri_sum(Connective::right, g, h); }
inline PlanarGrove middle_sum(const PlanarGrove& g, const PlanarGrove& h) { return tri_sum(Connective::middle, g, h); }

inline PlanarGrove sum(const PlanarGrove& g, const PlanarGrove& h) {
  detail::Engine<PTree> engine;
  return detail::to_grove<PTree>(engine.sum(detail::to_names(g), detail::to_names(h)));
}

inline PlanarGrove sum(const PTree& x, const PTree& y) { return sum(PlanarGrove(x), PlanarGrove(y)); }

// x = x0 v ... v xk is  w(x0) +> 1 <+ w(x1) <+> 1 <+ w(x2) ... <+> 1 <+ w(xk).
inline UExpr universal_expression(const PTree& x) {
  if (x.is_leaf()) throw DegenerateInput("the leaf has no universal expression");
  return detail::universal_chain<PTree>(x.name());
}

inline PlanarGrove eval_uexpr(const UExpr& e, const PlanarGrove& y) {
  detail::Engine<PTree> engine;
  return detail::to_grove<PTree>(engine.eval(e, detail::to_names(y)));
}

inline PlanarGrove multiply(const PlanarGrove& g, const PlanarGrove& h, const Limits& limits = default_limits()) {
  detail::Engine<PTree> engine(limits);
  return detail::to_grove<PTree>(
      engine.multiply(detail::to_names(g), detail::to_names(h), g.degree(), h.degree()));
}

inline PlanarGrove multiply(const PTree& x, const PTree& y, const Limits& limits = default_limits()) {
  return multiply(PlanarGrove(x), PlanarGrove(y), limits);
}

// ---- binary <-> planar ------------------------------------------------------

inline PlanarGrove embed_binary(const BinaryGrove& g) {
  std::vector<PTree> trees;
  trees.reserve(g.size());
  for (const auto& t : g) trees.push_back(embed_binary(t));
  return PlanarGrove(std::move(trees));
}

// Forgets the trees that are not binary; empty when none is.
inline std::optional<BinaryGrove> project_binary(const PlanarGrove& g) {
  std::vector<PBTree> trees;
  for (const auto& t : g) {
    if (is_binary(t)) trees.push_back(detail::unchecked<PBTree>(t.name()));
  }
  if (trees.empty()) return std::nullopt;
  return BinaryGrove(std::move(trees));
}

// ---- filtration by number of vertices ---------------------------------------

// Cell T_{n,i}: degree n, n + 1 - i internal vertices.
struct GradedIndex {
  unsigned n = 0;
  unsigned i = 0;

  friend bool operator==(const GradedIndex&, const GradedIndex&) = default;
};

inline GradedIndex vertex_grade(const PTree& x) {
  if (x.is_leaf()) throw DegenerateInput("the leaf belongs to no cell");
  return {x.degree(), x.degree() + 1 - vertex_count(x)};
}

inline bool in_cell(const PTree& x, unsigned i) { return !x.is_leaf() && vertex_grade(x).i == i; }

// The part of g + h lying in cell i. Every member of g and h must already be
// in cell i, or be the leaf, which is neutral. Empty results are reported as
// nullopt.
inline std::optional<PlanarGrove> graded_sum(unsigned i, const PlanarGrove& g, const PlanarGrove& h) {
  for (const auto* grove : {&g, &h}) {
    for (const auto& t : *grove) {
      if (!t.is_leaf() && !in_cell(t, i)) {
        throw DomainError("tree " + render_name(t.name()) + " is not in cell " + std::to_string(i));
      }
    }
  }
  std::vector<PTree> kept;
  for (const auto& t : sum(g, h)) {
    if (t.is_leaf() || in_cell(t, i)) kept.push_back(t);
  }
  if (kept.empty()) return std::nullopt;
  return PlanarGrove(std::move(kept));
}

}  // namespace arithmetree
