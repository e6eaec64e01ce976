#pragma once

// Shared arithmetic on names for both flavors. For x = x0 v ... v xk and
// y = y0 v ... v yl of degrees p, q > 0, with N = p + q,
//
//   x <+  y  = x0 N ... N (xk + y)
//   x +>  y  = (x + y0) N y1 ... N yl
//   x <+> y  = x0 N ... N (xk + y0) N y1 ... N yl        (planar only)
//   x + y    = union of the above.
//
// Binary trees are the case k = l = 1 without the middle part. Every call
// site owns an Engine; its memo tables live only as long as that call.

#include <algorithm>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "arithmetree/config.hpp"
#include "arithmetree/error.hpp"
#include "arithmetree/grove.hpp"
#include "arithmetree/tree.hpp"
#include "arithmetree/uexpr.hpp"

namespace arithmetree::detail {

using Names = std::vector<Name>;

inline void sort_unique(Names& names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
}

template <class Tree>
Grove<Tree> to_grove(Names names) {
  std::vector<Tree> trees;
  trees.reserve(names.size());
  for (auto& n : names) trees.push_back(unchecked<Tree>(std::move(n)));
  return Grove<Tree>(std::move(trees));
}

template <class Tree>
Names to_names(const Grove<Tree>& g) {
  Names out;
  out.reserve(g.size());
  for (const auto& t : g) out.push_back(t.name());
  return out;
}

template <class Tree>
class Engine {
 public:
  static constexpr bool planar = Tree::flavor == Flavor::planar;

  explicit Engine(const Limits& limits = default_limits()) : limits_(limits) {}

  unsigned cap() const { return planar ? limits_.planar_cap : limits_.binary_cap; }

  // ---- tree level ---------------------------------------------------------

  const Names& sum(const Name& x, const Name& y) {
    Name key = pair_key(x, y);
    if (auto it = sums_.find(key); it != sums_.end()) return it->second;
    Names out;
    if (x.empty()) {
      out.push_back(y);
    } else if (y.empty()) {
      out.push_back(x);
    } else {
      left_nonzero(x, y, out);
      right_nonzero(x, y, out);
      if constexpr (planar) middle_nonzero(x, y, out);
      sort_unique(out);
    }
    return sums_.emplace(std::move(key), std::move(out)).first->second;
  }

  Names tri(Connective c, const Name& x, const Name& y) {
    if (x.empty() && y.empty()) {
      throw UndefinedCase(std::string("0 ") + connective_symbol(c) + " 0 is not defined");
    }
    Names out;
    switch (c) {
      case Connective::left:
        if (x.empty()) return {Name{}};
        if (y.empty()) return {x};
        left_nonzero(x, y, out);
        break;
      case Connective::right:
        if (y.empty()) return {Name{}};
        if (x.empty()) return {y};
        right_nonzero(x, y, out);
        break;
      case Connective::middle:
        if constexpr (!planar) {
          throw FlavorMismatch("the middle sum exists only for planar trees");
        }
        if (x.empty() || y.empty()) return {Name{}};
        middle_nonzero(x, y, out);
        break;
    }
    sort_unique(out);
    return out;
  }

  // ---- grove level --------------------------------------------------------

  Names sum(const Names& g, const Names& h) {
    Names out;
    for (const auto& x : g) {
      for (const auto& y : h) {
        const auto& s = sum(x, y);
        out.insert(out.end(), s.begin(), s.end());
      }
    }
    sort_unique(out);
    return out;
  }

  Names tri(Connective c, const Names& g, const Names& h) {
    Names out;
    for (const auto& x : g) {
      for (const auto& y : h) {
        auto s = tri(c, x, y);
        out.insert(out.end(), s.begin(), s.end());
      }
    }
    sort_unique(out);
    return out;
  }

  // x * y by the recursion
  //   x * y = (x0 * y) +> y <+ (x1 * y) <+> y <+ (x2 * y) ... <+> y <+ (xk * y),
  // read left to right, with 0 * y = 0.
  const Names& multiply_tree(const Name& x, const Names& y) {
    if (auto it = products_.find(x); it != products_.end()) return it->second;
    Names out;
    if (x.empty()) {
      out.push_back(Name{});
    } else {
      auto parts = split_at_root(x);
      Names acc = tri(Connective::right, factor(parts[0], y), y);
      acc = tri(Connective::left, acc, factor(parts[1], y));
      for (std::size_t i = 2; i < parts.size(); ++i) {
        acc = tri(Connective::middle, acc, y);
        acc = tri(Connective::left, acc, factor(parts[i], y));
      }
      out = std::move(acc);
    }
    return products_.emplace(x, std::move(out)).first->second;
  }

  Names multiply(const Names& g, const Names& h, unsigned g_degree, unsigned h_degree) {
    const unsigned d = g_degree * h_degree;
    if (d > cap()) {
      throw ResourceLimit("product of degree " + std::to_string(d) + " exceeds the degree cap " +
                          std::to_string(cap()));
    }
    if (h_degree == 0) return {Name{}};
    if (h != product_operand_) {
      products_.clear();
      product_operand_ = h;
    }
    Names out;
    for (const auto& x : g) {
      const auto& p = multiply_tree(x, h);
      out.insert(out.end(), p.begin(), p.end());
    }
    sort_unique(out);
    return out;
  }

  Names eval(const UExpr& e, const Names& y) {
    if (e.is_unit()) return y;
    return tri(e.connective(), eval(e.lhs(), y), eval(e.rhs(), y));
  }

 private:
  static Name pair_key(const Name& x, const Name& y) {
    Name key;
    key.reserve(x.size() + y.size() + 1);
    key.insert(key.end(), x.begin(), x.end());
    key.push_back(0);
    key.insert(key.end(), y.begin(), y.end());
    return key;
  }

  static void append_with_root(Name& out, std::span<const Entry> piece, Entry root) {
    out.insert(out.end(), piece.begin(), piece.end());
    out.push_back(root);
  }

  Names factor(std::span<const Entry> part, const Names& y) {
    if (part.empty()) return {Name{}};
    return multiply_tree(Name(part.begin(), part.end()), y);
  }

  void left_nonzero(const Name& x, const Name& y, Names& out) {
    const auto root = static_cast<Entry>(x.size() + y.size());
    auto parts = split_at_root(x);
    Name prefix;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) append_with_root(prefix, parts[i], root);
    const Name last(parts.back().begin(), parts.back().end());
    for (const auto& z : sum(last, y)) {
      Name t = prefix;
      t.insert(t.end(), z.begin(), z.end());
      out.push_back(std::move(t));
    }
  }

  void right_nonzero(const Name& x, const Name& y, Names& out) {
    const auto root = static_cast<Entry>(x.size() + y.size());
    auto parts = split_at_root(y);
    Name suffix;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      suffix.push_back(root);
      suffix.insert(suffix.end(), parts[i].begin(), parts[i].end());
    }
    const Name first(parts.front().begin(), parts.front().end());
    for (const auto& z : sum(x, first)) {
      Name t = z;
      t.insert(t.end(), suffix.begin(), suffix.end());
      out.push_back(std::move(t));
    }
  }

  void middle_nonzero(const Name& x, const Name& y, Names& out) {
    const auto root = static_cast<Entry>(x.size() + y.size());
    auto xs = split_at_root(x);
    auto ys = split_at_root(y);
    Name prefix;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) append_with_root(prefix, xs[i], root);
    Name suffix;
    for (std::size_t i = 1; i < ys.size(); ++i) {
      suffix.push_back(root);
      suffix.insert(suffix.end(), ys[i].begin(), ys[i].end());
    }
    const Name a(xs.back().begin(), xs.back().end());
    const Name b(ys.front().begin(), ys.front().end());
    for (const auto& z : sum(a, b)) {
      Name t = prefix;
      t.insert(t.end(), z.begin(), z.end());
      t.insert(t.end(), suffix.begin(), suffix.end());
      out.push_back(std::move(t));
    }
  }

  Limits limits_;
  std::unordered_map<Name, Names, NameHash> sums_;
  std::unordered_map<Name, Names, NameHash> products_;
  Names product_operand_;
};

}  // namespace arithmetree::detail
