// A short walk through the library: sums, products, intervals, counting and
// factorization.

#include <iostream>

#include "arithmetree/arithmetree.hpp"

using namespace arithmetree;

int main() {
  const auto x = parse_tree<PBTree>("21");
  const auto y = parse_tree<PBTree>("12");

  std::cout << "21 + 12 = " << to_string(sum(x, y)) << "\n";
  std::cout << "as the interval [21/12, 21\\12] = " << to_string(sum_via_interval(x, y)) << "\n";
  std::cout << "21 * 12 = " << to_string(multiply(x, y)) << "\n";
  std::cout << "w(213) = " << to_string(universal_expression(parse_tree<PBTree>("213"))) << "\n";

  std::cout << "|total(3) * total(2)| = " << multiply(total_grove<PBTree>(3), total_grove<PBTree>(2)).size()
            << " = c_6 = " << catalan(6) << "\n";

  const auto p = parse_tree<PTree>("22");
  std::cout << "planar 22 + 22 = " << to_string(sum(p, p)) << "\n";
  std::cout << "super-Catalan numbers:";
  for (unsigned n = 0; n <= 6; ++n) std::cout << " " << super_catalan(n);
  std::cout << "\n";

  for (const auto& [a, b] : factor(BinaryGrove(parse_tree<PBTree>("2141")))) {
    std::cout << "2141 = " << to_string(a) << " * " << to_string(b) << "\n";
  }
  std::cout << "1234 is " << (is_prime(BinaryGrove(parse_tree<PBTree>("1234"))) ? "prime" : "composite") << "\n";
}
