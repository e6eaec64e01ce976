#pragma once

// Exact counts of Y_n, T_n and the cells T_{n,i}.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arithmetree/error.hpp"

namespace arithmetree {

using BigInt = boost::multiprecision::cpp_int;

// c_n = c_{n-1} c_0 + ... + c_0 c_{n-1}.
inline BigInt catalan(unsigned n) {
  std::vector<BigInt> c(n + 1);
  c[0] = 1;
  for (unsigned d = 1; d <= n; ++d) {
    for (unsigned i = 1; i <= d; ++i) c[d] += c[d - i] * c[i - 1];
  }
  return c[n];
}

namespace detail {

// counts[n][v]: planar trees of degree n with v internal vertices.
inline std::vector<std::vector<BigInt>> planar_vertex_counts(unsigned n) {
  std::vector<std::vector<BigInt>> counts(n + 1, std::vector<BigInt>(n + 1));
  counts[0][0] = 1;
  for (unsigned d = 1; d <= n; ++d) {
    // seq[s][v]: ordered sequences of trees with total size s (sum of
    // deg + 1) and v vertices in total, indexed additionally by whether
    // the sequence has at least two members.
    std::vector<std::vector<BigInt>> one(d + 2, std::vector<BigInt>(d + 1));
    std::vector<std::vector<BigInt>> many(d + 2, std::vector<BigInt>(d + 1));
    for (unsigned size = 1; size <= d; ++size) {
      for (unsigned v = 0; v < d; ++v) one[size][v] = counts[size - 1][v];
    }
    // Extend sequences one piece at a time; pieces have degree < d.
    std::vector<std::vector<BigInt>> any = one;
    for (unsigned total = 2; total <= d + 1; ++total) {
      for (unsigned v = 0; v <= d; ++v) {
        BigInt sum = 0;
        for (unsigned last = 1; last < total && last <= d; ++last) {
          for (unsigned lv = 0; lv <= v; ++lv) {
            if (one[last][lv] == 0) continue;
            sum += any[total - last][v - lv] * one[last][lv];
          }
        }
        many[total][v] = sum;
        if (total <= d) any[total][v] += sum;
      }
    }
    for (unsigned v = 0; v < d; ++v) counts[d][v + 1] = many[d + 1][v];
  }
  return counts;
}

}  // namespace detail

// C_n = sum over i_0 + ... + i_k = n - k (k >= 1) of C_{i_0} ... C_{i_k}.
inline BigInt super_catalan(unsigned n) {
  auto counts = detail::planar_vertex_counts(n);
  BigInt total = 0;
  for (const auto& c : counts[n]) total += c;
  return total;
}

// a_{n,i}: planar trees with n+1 leaves and n+1-i internal vertices.
inline BigInt cell_count(unsigned n, unsigned i) {
  if (i < 1 || i > n) {
    throw DomainError("cell index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
  }
  return detail::planar_vertex_counts(n)[n][n + 1 - i];
}

}  // namespace arithmetree
