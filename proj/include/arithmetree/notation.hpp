#pragma once

// The permutation-like name notation.
//
// Text form: "0" is the leaf. A name whose entries are all at most 9 is
// written as the bare digit string ("131492141"); longer names use brackets
// ("[1,3,1,5,1,11,1,3,1,5,1]"). Parsing accepts both, rejecting a bare digit
// string longer than 9 entries, whose maximum could not be a single digit.

#include <algorithm>
#include <cctype>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arithmetree/error.hpp"
#include "arithmetree/grove.hpp"
#include "arithmetree/tree.hpp"
#include "arithmetree/uexpr.hpp"

namespace arithmetree {

template <class Tree>
const Name& encode(const Tree& x) {
  return x.name();
}

template <class Tree>
Tree decode(Name name) {
  return Tree::from_name(std::move(name));
}

inline bool validate(std::span<const Entry> name, Flavor flavor) {
  return flavor == Flavor::binary ? detail::valid_binary_name(name)
                                  : detail::valid_planar_name(name);
}

inline std::string render_name(std::span<const Entry> name) {
  if (name.empty()) return "0";
  const bool compact = std::all_of(name.begin(), name.end(), [](Entry e) { return e <= 9; });
  std::string out;
  if (compact) {
    for (Entry e : name) out.push_back(static_cast<char>('0' + e));
    return out;
  }
  out.push_back('[');
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(name[i]);
  }
  out.push_back(']');
  return out;
}

template <class Tree>
std::string to_string(const Tree& x) requires requires { x.name(); } {
  return render_name(x.name());
}

// "{12, 21}", members in canonical order.
template <class Tree>
std::string to_string(const Grove<Tree>& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& t : g) {
    if (!first) out += ", ";
    out += render_name(t.name());
    first = false;
  }
  out += "}";
  return out;
}

// Parses the textual form of a name without checking tree validity.
inline Name parse_name(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw InvalidName("empty name");
  if (text == "0") return {};
  Name name;
  if (text.front() == '[') {
    if (text.back() != ']') throw InvalidName("unterminated bracket name '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    while (true) {
      auto comma = body.find(',');
      std::string_view item = trim(body.substr(0, comma));
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw InvalidName("bad entry in bracket name '" + std::string(text) + "'");
      }
      unsigned long value = std::stoul(std::string(item));
      if (value == 0 || value > 0xFFFF) throw InvalidName("name entries must be positive");
      name.push_back(static_cast<Entry>(value));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return name;
  }
  for (char c : text) {
    if (c < '1' || c > '9') throw InvalidName("bad character in name '" + std::string(text) + "'");
    name.push_back(static_cast<Entry>(c - '0'));
  }
  if (name.size() > 9) {
    throw InvalidName("compact name '" + std::string(text) +
                      "' is longer than 9 entries; use the bracket form");
  }
  return name;
}

template <class Tree>
Tree parse_tree(std::string_view text) {
  return decode<Tree>(parse_name(text));
}

// The i-th weight is the degree of the smallest subtree containing leaves
// i-1 and i (leaves numbered from 0, left to right).
inline Name weights(const PBTree& x) {
  Name out;
  out.reserve(x.degree());
  for (unsigned i = 1; i <= x.degree(); ++i) {
    PBTree node = x;
    unsigned offset = 0;  // index of the leftmost leaf of `node`
    while (true) {
      auto [l, r] = decompose(node);
      const unsigned split = offset + l.degree() + 1;  // first leaf of r
      if (i - 1 < split && i >= split) {
        out.push_back(static_cast<Entry>(node.degree()));
        break;
      }
      if (i < split) {
        node = l;
      } else {
        node = r;
        offset = split;
      }
    }
  }
  return out;
}

namespace detail {

inline void flatten_permutation(std::span<const unsigned> values, Name& out) {
  if (values.empty()) return;
  auto top = std::max_element(values.begin(), values.end());
  const auto at = static_cast<std::size_t>(top - values.begin());
  flatten_permutation(values.first(at), out);
  out.push_back(static_cast<Entry>(values.size()));
  flatten_permutation(values.subspan(at + 1), out);
}

}  // namespace detail

// Keeps the largest value in place as the root and recurses on both sides,
// replacing each side's largest value by that side's length.
inline PBTree perm_to_tree(std::span<const unsigned> permutation) {
  std::vector<unsigned> sorted(permutation.begin(), permutation.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i + 1) throw DomainError("not a permutation of 1..n");
  }
  Name name;
  name.reserve(permutation.size());
  detail::flatten_permutation(permutation, name);
  return detail::unchecked<PBTree>(std::move(name));
}

// Right at each ascent, Left at each descent.
inline std::vector<Connective> sign_pattern(std::span<const Entry> name) {
  if (!detail::valid_binary_name(name)) throw InvalidName("not the name of a planar binary tree");
  if (name.size() < 2) throw DomainError("sign pattern needs a name of length at least 2");
  std::vector<Connective> out;
  for (std::size_t j = 0; j + 1 < name.size(); ++j) {
    if (name[j] == name[j + 1]) throw InvalidName("equal adjacent entries in a binary name");
    out.push_back(name[j] < name[j + 1] ? Connective::right : Connective::left);
  }
  return out;
}

}  // namespace arithmetree
