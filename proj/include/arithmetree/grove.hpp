#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <variant>
#include <vector>

#include "arithmetree/error.hpp"
#include "arithmetree/tree.hpp"

namespace arithmetree {

// A non-empty, duplicate-free set of trees of one degree, kept in canonical
// name order.
template <class Tree>
class Grove {
 public:
  using tree_type = Tree;
  using const_iterator = typename std::vector<Tree>::const_iterator;

  explicit Grove(Tree tree) : degree_(tree.degree()) { trees_.push_back(std::move(tree)); }

  Grove(std::initializer_list<Tree> trees) : Grove(std::vector<Tree>(trees)) {}

  explicit Grove(std::vector<Tree> trees) : trees_(std::move(trees)) {
    if (trees_.empty()) throw DomainError("a grove must contain at least one tree");
    degree_ = trees_.front().degree();
    for (const auto& t : trees_) {
      if (t.degree() != degree_) throw DomainError("all trees of a grove must have the same degree");
    }
    std::sort(trees_.begin(), trees_.end());
    trees_.erase(std::unique(trees_.begin(), trees_.end()), trees_.end());
  }

  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return trees_.size(); }
  const std::vector<Tree>& trees() const noexcept { return trees_; }
  const Tree& front() const noexcept { return trees_.front(); }
  const_iterator begin() const noexcept { return trees_.begin(); }
  const_iterator end() const noexcept { return trees_.end(); }

  bool contains(const Tree& t) const { return std::binary_search(trees_.begin(), trees_.end(), t); }

  bool is_zero() const noexcept { return degree_ == 0; }

  friend bool operator==(const Grove&, const Grove&) = default;

 private:
  std::vector<Tree> trees_;
  unsigned degree_ = 0;
};

using BinaryGrove = Grove<PBTree>;
using PlanarGrove = Grove<PTree>;

template <class Tree>
Grove<Tree> grove_make(std::span<const Tree> trees) {
  return Grove<Tree>(std::vector<Tree>(trees.begin(), trees.end()));
}

template <class Tree>
Grove<Tree> grove_union(const Grove<Tree>& g, const Grove<Tree>& h) {
  if (g.degree() != h.degree()) throw DomainError("union of groves of different degrees");
  std::vector<Tree> merged;
  merged.reserve(g.size() + h.size());
  std::set_union(g.begin(), g.end(), h.begin(), h.end(), std::back_inserter(merged));
  return Grove<Tree>(std::move(merged));
}

// True when no tree belongs to both groves.
template <class Tree>
bool disjoint(const Grove<Tree>& g, const Grove<Tree>& h) {
  auto i = g.begin();
  auto j = h.begin();
  while (i != g.end() && j != h.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

template <class Tree>
bool is_subset(const Grove<Tree>& g, const Grove<Tree>& h) {
  return std::includes(h.begin(), h.end(), g.begin(), g.end());
}

template <class Tree>
Grove<Tree> mirror(const Grove<Tree>& g) {
  std::vector<Tree> trees;
  trees.reserve(g.size());
  for (const auto& t : g) trees.push_back(mirror(t));
  return Grove<Tree>(std::move(trees));
}

inline BinaryGrove zero_binary() { return BinaryGrove(PBTree::leaf()); }
inline PlanarGrove zero_planar() { return PlanarGrove(PTree::leaf()); }

// Runtime-flavored values, for callers that only learn the flavor at run time.
using AnyGrove = std::variant<BinaryGrove, PlanarGrove>;

inline Flavor flavor_of(const AnyGrove& g) {
  return std::holds_alternative<BinaryGrove>(g) ? Flavor::binary : Flavor::planar;
}

inline AnyGrove grove_union(const AnyGrove& g, const AnyGrove& h) {
  if (g.index() != h.index()) throw FlavorMismatch("union of a binary grove and a planar grove");
  if (auto* b = std::get_if<BinaryGrove>(&g)) return grove_union(*b, std::get<BinaryGrove>(h));
  return grove_union(std::get<PlanarGrove>(g), std::get<PlanarGrove>(h));
}

}  // namespace arithmetree
