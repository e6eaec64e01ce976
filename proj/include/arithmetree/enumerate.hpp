#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "arithmetree/config.hpp"
#include "arithmetree/error.hpp"
#include "arithmetree/grove.hpp"
#include "arithmetree/tree.hpp"

namespace arithmetree {

namespace detail {

inline void check_cap(unsigned n, unsigned cap, const char* what) {
  if (n > cap) {
    throw ResourceLimit(std::string(what) + " of degree " + std::to_string(n) +
                        " exceeds the degree cap " + std::to_string(cap));
  }
}

// Names of Y_0 .. Y_n, built from Y_n = U_i Y_{n-i} x Y_{i-1}.
inline std::vector<std::vector<Name>> binary_names_upto(unsigned n) {
  std::vector<std::vector<Name>> by_degree(n + 1);
  by_degree[0].push_back(Name{});
  for (unsigned d = 1; d <= n; ++d) {
    for (unsigned l = 0; l < d; ++l) {
      const unsigned r = d - 1 - l;
      for (const auto& left : by_degree[l]) {
        for (const auto& right : by_degree[r]) {
          Name name;
          name.reserve(d);
          name.insert(name.end(), left.begin(), left.end());
          name.push_back(static_cast<Entry>(d));
          name.insert(name.end(), right.begin(), right.end());
          by_degree[d].push_back(std::move(name));
        }
      }
    }
  }
  return by_degree;
}

// Appends to `out` every name w0 n w1 n ... n wk whose pieces have total
// size (sum of deg + 1) equal to `remaining`.
inline void planar_compositions(const std::vector<std::vector<Name>>& smaller, Entry n,
                                unsigned remaining, unsigned pieces, Name& prefix,
                                std::vector<Name>& out) {
  if (remaining == 0) {
    if (pieces >= 2) out.push_back(prefix);
    return;
  }
  for (unsigned size = 1; size <= remaining; ++size) {
    // A single piece covering everything would be the tree itself.
    if (pieces == 0 && size == remaining) break;
    const unsigned d = size - 1;
    for (const auto& piece : smaller[d]) {
      const auto mark = prefix.size();
      if (pieces > 0) prefix.push_back(n);
      prefix.insert(prefix.end(), piece.begin(), piece.end());
      planar_compositions(smaller, n, remaining - size, pieces + 1, prefix, out);
      prefix.resize(mark);
    }
  }
}

inline std::vector<std::vector<Name>> planar_names_upto(unsigned n) {
  std::vector<std::vector<Name>> by_degree(n + 1);
  by_degree[0].push_back(Name{});
  for (unsigned d = 1; d <= n; ++d) {
    Name prefix;
    planar_compositions(by_degree, static_cast<Entry>(d), d + 1, 0, prefix, by_degree[d]);
  }
  return by_degree;
}

}  // namespace detail

// All planar binary trees of degree n in canonical order.
inline std::vector<PBTree> enumerate_binary(unsigned n, const Limits& limits = default_limits()) {
  detail::check_cap(n, limits.binary_cap, "enumeration");
  auto names = detail::binary_names_upto(n);
  std::vector<PBTree> trees;
  trees.reserve(names[n].size());
  for (auto& name : names[n]) trees.push_back(detail::unchecked<PBTree>(std::move(name)));
  std::sort(trees.begin(), trees.end());
  return trees;
}

// All planar trees of degree n in canonical order.
inline std::vector<PTree> enumerate_planar(unsigned n, const Limits& limits = default_limits()) {
  detail::check_cap(n, limits.planar_cap, "enumeration");
  auto names = detail::planar_names_upto(n);
  std::vector<PTree> trees;
  trees.reserve(names[n].size());
  for (auto& name : names[n]) trees.push_back(detail::unchecked<PTree>(std::move(name)));
  std::sort(trees.begin(), trees.end());
  return trees;
}

template <class Tree>
std::vector<Tree> enumerate_trees(unsigned n, const Limits& limits = default_limits()) {
  if constexpr (Tree::flavor == Flavor::binary) {
    return enumerate_binary(n, limits);
  } else {
    return enumerate_planar(n, limits);
  }
}

// The total grove: every tree of degree n of the given flavor.
template <class Tree>
Grove<Tree> total_grove(unsigned n, const Limits& limits = default_limits()) {
  return Grove<Tree>(enumerate_trees<Tree>(n, limits));
}

inline AnyGrove total_grove(unsigned n, Flavor flavor, const Limits& limits = default_limits()) {
  if (flavor == Flavor::binary) return total_grove<PBTree>(n, limits);
  return total_grove<PTree>(n, limits);
}

}  // namespace arithmetree
