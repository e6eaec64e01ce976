#pragma once

// Planar binary trees and planar trees.
//
// A tree is stored as its name: the sequence of positive integers obtained
// by writing w(x^(0)) n w(x^(1)) n ... n w(x^(k)) for x = x^(0) v ... v x^(k)
// of degree n, the leaf having the empty name. The name is a bijective
// encoding, so two trees are equal exactly when their structures are, and the
// lexicographic order on names (shorter prefix first) is the canonical order
// used to sort groves.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arithmetree/error.hpp"

namespace arithmetree {

using Entry = std::uint16_t;
using Name = std::vector<Entry>;

enum class Flavor { binary, planar };

inline const char* flavor_name(Flavor f) { return f == Flavor::binary ? "binary" : "planar"; }

namespace detail {

inline bool valid_binary_name(std::span<const Entry> name) {
  if (name.empty()) return true;
  const std::size_t n = name.size();
  std::size_t root = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (name[i] == 0 || name[i] > n) return false;
    if (name[i] == n) {
      if (root != n) return false;
      root = i;
    }
  }
  if (root == n) return false;
  return valid_binary_name(name.first(root)) && valid_binary_name(name.subspan(root + 1));
}

inline bool valid_planar_name(std::span<const Entry> name) {
  if (name.empty()) return true;
  const std::size_t n = name.size();
  std::size_t start = 0;
  bool seen_root = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (name[i] == 0 || name[i] > n) return false;
    if (name[i] == n) {
      seen_root = true;
      if (!valid_planar_name(name.subspan(start, i - start))) return false;
      start = i + 1;
    }
  }
  return seen_root && valid_planar_name(name.subspan(start));
}

// Splits a valid non-empty name at its maximal entries.
inline std::vector<std::span<const Entry>> split_at_root(std::span<const Entry> name) {
  std::vector<std::span<const Entry>> parts;
  const auto n = static_cast<Entry>(name.size());
  std::size_t start = 0;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == n) {
      parts.push_back(name.subspan(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(name.subspan(start));
  return parts;
}

struct TreeAccess;

}  // namespace detail

class PBTree;
class PTree;

class PBTree {
 public:
  static constexpr Flavor flavor = Flavor::binary;

  // The leaf |, also written 0.
  PBTree() = default;

  static PBTree leaf() { return PBTree(); }

  static PBTree from_name(Name name) {
    if (!detail::valid_binary_name(name)) throw InvalidName("not the name of a planar binary tree");
    return PBTree(std::move(name));
  }

  bool is_leaf() const noexcept { return name_.empty(); }
  unsigned degree() const noexcept { return static_cast<unsigned>(name_.size()); }
  const Name& name() const noexcept { return name_; }

  PBTree left() const;
  PBTree right() const;

  friend bool operator==(const PBTree&, const PBTree&) = default;
  friend std::strong_ordering operator<=>(const PBTree& a, const PBTree& b) {
    return a.name_ <=> b.name_;
  }

 private:
  friend struct detail::TreeAccess;
  explicit PBTree(Name name) : name_(std::move(name)) {}

  Name name_;
};

class PTree {
 public:
  static constexpr Flavor flavor = Flavor::planar;

  PTree() = default;

  static PTree leaf() { return PTree(); }

  static PTree from_name(Name name) {
    if (!detail::valid_planar_name(name)) throw InvalidName("not the name of a planar tree");
    return PTree(std::move(name));
  }

  bool is_leaf() const noexcept { return name_.empty(); }
  unsigned degree() const noexcept { return static_cast<unsigned>(name_.size()); }
  const Name& name() const noexcept { return name_; }

  // Number of children of the root; 0 for the leaf.
  std::size_t arity() const noexcept {
    if (name_.empty()) return 0;
    return 1 + static_cast<std::size_t>(std::count(name_.begin(), name_.end(), name_.size()));
  }

  friend bool operator==(const PTree&, const PTree&) = default;
  friend std::strong_ordering operator<=>(const PTree& a, const PTree& b) {
    return a.name_ <=> b.name_;
  }

 private:
  friend struct detail::TreeAccess;
  explicit PTree(Name name) : name_(std::move(name)) {}

  Name name_;
};

namespace detail {

// Construction from a name already known to be valid. Used by the arithmetic
// engines, which only ever splice valid names.
struct TreeAccess {
  template <class Tree>
  static Tree make(Name name) {
    return Tree(std::move(name));
  }
};

template <class Tree>
Tree unchecked(Name name) {
  return TreeAccess::make<Tree>(std::move(name));
}

template <class Tree>
Tree unchecked(std::span<const Entry> name) {
  return TreeAccess::make<Tree>(Name(name.begin(), name.end()));
}

}  // namespace detail

// x v y. Degree is deg x + deg y + 1.
inline PBTree graft(const PBTree& left, const PBTree& right) {
  Name name;
  name.reserve(left.degree() + right.degree() + 1);
  name.insert(name.end(), left.name().begin(), left.name().end());
  name.push_back(static_cast<Entry>(left.degree() + right.degree() + 1));
  name.insert(name.end(), right.name().begin(), right.name().end());
  return detail::unchecked<PBTree>(std::move(name));
}

inline std::pair<PBTree, PBTree> decompose(const PBTree& x) {
  if (x.is_leaf()) throw DegenerateInput("the leaf has no decomposition");
  const auto& name = x.name();
  auto root = std::find(name.begin(), name.end(), static_cast<Entry>(name.size()));
  return {detail::unchecked<PBTree>(Name(name.begin(), root)),
          detail::unchecked<PBTree>(Name(root + 1, name.end()))};
}

inline PBTree PBTree::left() const { return decompose(*this).first; }
inline PBTree PBTree::right() const { return decompose(*this).second; }

// x^(0) v ... v x^(k) with k >= 1.
inline PTree graft_many(std::span<const PTree> children) {
  if (children.size() < 2) throw DomainError("planar grafting needs at least two trees");
  std::size_t degree = children.size() - 1;
  for (const auto& c : children) degree += c.degree();
  Name name;
  name.reserve(degree);
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0) name.push_back(static_cast<Entry>(degree));
    name.insert(name.end(), children[i].name().begin(), children[i].name().end());
  }
  return detail::unchecked<PTree>(std::move(name));
}

inline PTree graft_many(std::initializer_list<PTree> children) {
  return graft_many(std::span<const PTree>(children.begin(), children.size()));
}

inline std::vector<PTree> decompose_many(const PTree& x) {
  if (x.is_leaf()) throw DegenerateInput("the leaf has no decomposition");
  std::vector<PTree> children;
  for (auto part : detail::split_at_root(x.name())) children.push_back(detail::unchecked<PTree>(part));
  return children;
}

inline unsigned degree(const PBTree& x) { return x.degree(); }
inline unsigned degree(const PTree& x) { return x.degree(); }

// Number of internal vertices of a planar tree.
inline unsigned vertex_count(const PTree& x) {
  if (x.is_leaf()) return 0;
  unsigned count = 1;
  for (auto part : detail::split_at_root(x.name())) {
    if (!part.empty()) count += vertex_count(detail::unchecked<PTree>(part));
  }
  return count;
}

// Symmetry around the root axis. On names it is reversal.
template <class Tree>
Tree mirror(const Tree& x) {
  Name name(x.name().rbegin(), x.name().rend());
  return detail::unchecked<Tree>(std::move(name));
}

// The planar tree with the same shape. Binary names are planar names.
inline PTree embed_binary(const PBTree& x) { return detail::unchecked<PTree>(x.name()); }

inline bool is_binary(const PTree& x) { return detail::valid_binary_name(x.name()); }

struct NameHash {
  std::size_t operator()(const Name& name) const noexcept {
    std::size_t h = name.size();
    for (Entry e : name) h = h * 1000003u ^ e;
    return h;
  }
  template <class Tree>
  std::size_t operator()(const Tree& x) const noexcept {
    return (*this)(x.name());
  }
};

}  // namespace arithmetree

template <>
struct std::hash<arithmetree::PBTree> {
  std::size_t operator()(const arithmetree::PBTree& x) const noexcept {
    return arithmetree::NameHash{}(x.name());
  }
};

template <>
struct std::hash<arithmetree::PTree> {
  std::size_t operator()(const arithmetree::PTree& x) const noexcept {
    return arithmetree::NameHash{}(x.name());
  }
};
