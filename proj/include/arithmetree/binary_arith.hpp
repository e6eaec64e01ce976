#pragma once

// Arithmetic on planar binary trees and binary groves.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arithmetree/config.hpp"
#include "arithmetree/detail/engine.hpp"
#include "arithmetree/enumerate.hpp"
#include "arithmetree/error.hpp"
#include "arithmetree/grove.hpp"
#include "arithmetree/tree.hpp"
#include "arithmetree/uexpr.hpp"

namespace arithmetree {

// ---- over / under -----------------------------------------------------------

// x / y: the root of x is identified with the leftmost leaf of y.
inline PBTree over(const PBTree& x, const PBTree& y) {
  if (y.is_leaf()) return x;
  auto [l, r] = decompose(y);
  return graft(over(x, l), r);
}

// x \ y: the rightmost leaf of x is identified with the root of y.
inline PBTree under(const PBTree& x, const PBTree& y) {
  if (x.is_leaf()) return y;
  auto [l, r] = decompose(x);
  return graft(l, under(r, y));
}

// ---- Tamari order -----------------------------------------------------------

// Trees reachable by one move (a v b) v c -> a v (b v c) at some vertex.
inline std::vector<PBTree> tamari_successors(const PBTree& x) {
  std::vector<PBTree> out;
  if (x.is_leaf()) return out;
  auto [l, r] = decompose(x);
  if (!l.is_leaf()) {
    auto [a, b] = decompose(l);
    out.push_back(graft(a, graft(b, r)));
  }
  for (const auto& l2 : tamari_successors(l)) out.push_back(graft(l2, r));
  for (const auto& r2 : tamari_successors(r)) out.push_back(graft(l, r2));
  return out;
}

// For each vertex in left-to-right order, the degree of its right subtree.
// x <= y in the Tamari order iff these vectors compare componentwise.
inline std::vector<unsigned> right_arm_vector(const PBTree& x) {
  const auto& name = x.name();
  std::vector<unsigned> v(name.size());
  for (std::size_t j = 0; j < name.size(); ++j) {
    std::size_t k = j + 1;
    while (k < name.size() && name[k] < name[j]) ++k;
    v[j] = static_cast<unsigned>(k - j - 1);
  }
  return v;
}

inline bool tamari_leq(const PBTree& x, const PBTree& y) {
  if (x.degree() != y.degree()) throw DomainError("Tamari comparison of trees of different degrees");
  auto vx = right_arm_vector(x);
  auto vy = right_arm_vector(y);
  for (std::size_t i = 0; i < vx.size(); ++i) {
    if (vx[i] > vy[i]) return false;
  }
  return true;
}

// All z with lo <= z <= hi, by a search upward from lo.
inline BinaryGrove interval(const PBTree& lo, const PBTree& hi) {
  if (lo.degree() != hi.degree()) throw DomainError("interval endpoints have different degrees");
  if (!tamari_leq(lo, hi)) throw DomainError("interval endpoints are not comparable");
  std::set<PBTree> seen{lo};
  std::deque<PBTree> queue{lo};
  while (!queue.empty()) {
    PBTree z = std::move(queue.front());
    queue.pop_front();
    for (auto& next : tamari_successors(z)) {
      if (tamari_leq(next, hi) && seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return BinaryGrove(std::vector<PBTree>(seen.begin(), seen.end()));
}

// ---- sums -------------------------------------------------------------------

inline BinaryGrove sum(const BinaryGrove& g, const BinaryGrove& h) {
  detail::Engine<PBTree> engine;
  return detail::to_grove<PBTree>(engine.sum(detail::to_names(g), detail::to_names(h)));
}

inline BinaryGrove sum(const PBTree& x, const PBTree& y) { return sum(BinaryGrove(x), BinaryGrove(y)); }

// The sum as the Tamari interval [x / y, x \ y].
inline BinaryGrove sum_via_interval(const PBTree& x, const PBTree& y) {
  return interval(over(x, y), under(x, y));
}

// x <+ y = x^l v (x^r + y), with 0 <+ x = 0 and x <+ 0 = x.
inline BinaryGrove left_sum(const BinaryGrove& g, const BinaryGrove& h) {
  detail::Engine<PBTree> engine;
  return detail::to_grove<PBTree>(engine.tri(Connective::left, detail::to_names(g), detail::to_names(h)));
}

// x +> y = (x + y^l) v y^r, with x +> 0 = 0 and 0 +> x = x.
inline BinaryGrove right_sum(const BinaryGrove& g, const BinaryGrove& h) {
  detail::Engine<PBTree> engine;
  return detail::to_grove<PBTree>(engine.tri(Connective::right, detail::to_names(g), detail::to_names(h)));
}

inline BinaryGrove tri_sum(Connective c, const BinaryGrove& g, const BinaryGrove& h) {
  detail::Engine<PBTree> engine;
  return detail::to_grove<PBTree>(engine.tri(c, detail::to_names(g), detail::to_names(h)));
}

// ---- universal expressions ----------------------------------------------------

namespace detail {

// The chain  w(x0) +> 1 <+ w(x1) <+> 1 <+ w(x2) ... <+> 1 <+ w(xk)  grouped
// from the left, leaves of the decomposition omitted. For binary trees this
// is w(x^l) +> 1 <+ w(x^r).
template <class Tree>
UExpr universal_chain(const Name& name) {
  auto parts = split_at_root(name);
  auto sub = [](std::span<const Entry> part) { return universal_chain<Tree>(Name(part.begin(), part.end())); };
  UExpr acc = UExpr::unit();
  if (!parts[0].empty()) acc = UExpr::op(Connective::right, sub(parts[0]), UExpr::unit());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (i > 1) acc = UExpr::op(Connective::middle, acc, UExpr::unit());
    if (!parts[i].empty()) acc = UExpr::op(Connective::left, acc, sub(parts[i]));
  }
  return acc;
}

}  // namespace detail

// w_x(1): the expression of x as a composite of deg x copies of 1.
inline UExpr universal_expression(const PBTree& x) {
  if (x.is_leaf()) throw DegenerateInput("the leaf has no universal expression");
  return detail::universal_chain<PBTree>(x.name());
}

// Every 1 in `e` replaced by the grove y.
inline BinaryGrove eval_uexpr(const UExpr& e, const BinaryGrove& y) {
  if (e.uses_middle()) throw FlavorMismatch("the middle sum exists only for planar trees");
  detail::Engine<PBTree> engine;
  return detail::to_grove<PBTree>(engine.eval(e, detail::to_names(y)));
}

// ---- multiplication ---------------------------------------------------------

inline BinaryGrove multiply(const BinaryGrove& g, const BinaryGrove& h, const Limits& limits = default_limits()) {
  detail::Engine<PBTree> engine(limits);
  return detail::to_grove<PBTree>(
      engine.multiply(detail::to_names(g), detail::to_names(h), g.degree(), h.degree()));
}

inline BinaryGrove multiply(const PBTree& x, const PBTree& y, const Limits& limits = default_limits()) {
  return multiply(BinaryGrove(x), BinaryGrove(y), limits);
}

}  // namespace arithmetree
