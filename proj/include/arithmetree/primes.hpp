#pragma once

// Factorization of groves under the product.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arithmetree/config.hpp"
#include "arithmetree/detail/engine.hpp"
#include "arithmetree/enumerate.hpp"
#include "arithmetree/error.hpp"
#include "arithmetree/grove.hpp"

namespace arithmetree {

template <class Tree>
using Factorization = std::pair<Grove<Tree>, Grove<Tree>>;

namespace detail {

// Subsets of a candidate set are enumerated as bitmasks.
inline constexpr std::size_t max_subset_bits = 20;

inline bool names_subset(const Names& small, const Names& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace detail

// Every ordered pair (a, b) with a * b = g and deg a, deg b >= 2.
//
// For each degree split d = d1 * d2 the right factor b ranges over the
// groves of degree d2 built from trees y that can occur, namely those with
// t * y contained in g for some t of degree d1. Since the product is
// distributive on the left, a * b = U_{t in a} t * b, so a must consist of
// trees t with t * b contained in g, and the union of those pieces must be g.
template <class Tree>
std::vector<Factorization<Tree>> factor(const Grove<Tree>& g, const Limits& limits = default_limits()) {
  const unsigned d = g.degree();
  if (d < 1) throw DomainError("factorization needs a grove of positive degree");
  if (d > limits.factor_cap) {
    throw ResourceLimit("factor search of degree " + std::to_string(d) + " exceeds the search cap " +
                        std::to_string(limits.factor_cap));
  }
  detail::Engine<Tree> engine(limits);
  const detail::Names target = detail::to_names(g);
  std::vector<Factorization<Tree>> found;

  for (unsigned d1 = 2; d1 * 2 <= d; ++d1) {
    if (d % d1 != 0) continue;
    const unsigned d2 = d / d1;
    const auto left_trees = enumerate_trees<Tree>(d1, limits);
    const auto right_trees = enumerate_trees<Tree>(d2, limits);

    std::vector<Name> candidates;
    for (const auto& y : right_trees) {
      const detail::Names single{y.name()};
      for (const auto& t : left_trees) {
        if (detail::names_subset(engine.multiply({t.name()}, single, d1, d2), target)) {
          candidates.push_back(y.name());
          break;
        }
      }
    }
    if (candidates.empty()) continue;
    if (candidates.size() > detail::max_subset_bits) {
      throw ResourceLimit("factor search over " + std::to_string(candidates.size()) +
                          " candidate trees is too large");
    }

    const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      detail::Names b;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) b.push_back(candidates[i]);
      }
      std::vector<Name> usable;
      std::vector<detail::Names> pieces;
      for (const auto& t : left_trees) {
        auto p = engine.multiply({t.name()}, b, d1, d2);
        if (detail::names_subset(p, target)) {
          usable.push_back(t.name());
          pieces.push_back(std::move(p));
        }
      }
      if (usable.empty()) continue;
      if (usable.size() > detail::max_subset_bits) {
        throw ResourceLimit("factor search over " + std::to_string(usable.size()) +
                            " candidate left factors is too large");
      }
      // Subsets of the usable left trees whose pieces cover g.
      const std::uint64_t covers = std::uint64_t{1} << usable.size();
      for (std::uint64_t amask = 1; amask < covers; ++amask) {
        detail::Names unioned;
        for (std::size_t i = 0; i < usable.size(); ++i) {
          if (amask & (std::uint64_t{1} << i)) unioned.insert(unioned.end(), pieces[i].begin(), pieces[i].end());
        }
        detail::sort_unique(unioned);
        if (unioned != target) continue;
        detail::Names a;
        for (std::size_t i = 0; i < usable.size(); ++i) {
          if (amask & (std::uint64_t{1} << i)) a.push_back(usable[i]);
        }
        found.emplace_back(detail::to_grove<Tree>(std::move(a)), detail::to_grove<Tree>(b));
      }
    }
  }
  return found;
}

template <class Tree>
bool is_prime(const Grove<Tree>& g, const Limits& limits = default_limits()) {
  return factor(g, limits).empty();
}

}  // namespace arithmetree
