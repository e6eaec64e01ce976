#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "arithmetree/arithmetree.hpp"
#include "printers.hpp"
#include "oracle.hpp"

using namespace arithmetree;

namespace {

PTree p(std::string_view s) { return parse_tree<PTree>(s); }
PlanarGrove g(std::string_view s) { return parse_grove<PTree>(s); }
PlanarGrove one(const PTree& x) { return PlanarGrove(x); }
BinaryGrove bg(std::string_view s) { return parse_grove<PBTree>(s); }

std::vector<PTree> trees_upto(unsigned n, unsigned from = 0) {
  std::vector<PTree> out;
  for (unsigned d = from; d <= n; ++d) {
    for (auto& x : enumerate_planar(d)) out.push_back(std::move(x));
  }
  return out;
}

std::set<Name> names(const PlanarGrove& h) {
  std::set<Name> out;
  for (const auto& t : h) out.insert(t.name());
  return out;
}

oracle::T structure(const PTree& x) {
  if (x.is_leaf()) return oracle::leaf();
  std::vector<oracle::T> kids;
  for (const auto& c : decompose_many(x)) kids.push_back(structure(c));
  return oracle::node(std::move(kids));
}

// w(x) with its root entries raised to n.
Name relabel(const PTree& x, Entry n) {
  Name out = x.name();
  for (auto& e : out) {
    if (e == x.degree()) e = n;
  }
  return out;
}

Name concat(const Name& a, const Name& b) {
  Name out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

// ---- Left, Right and Middle sums ---------------------------------------------------

TEST(PlanarTriSum, Examples) {
  EXPECT_EQ(middle_sum(g("1"), g("1")), g("22"));
  EXPECT_EQ(left_sum(g("313"), g("12")), g("51512"));
  EXPECT_EQ(middle_sum(g("313"), g("12")), g("51515"));
  EXPECT_EQ(right_sum(g("1"), g("22")), g("133"));
  EXPECT_EQ(left_sum(g("1"), g("1")), g("21"));
  EXPECT_EQ(right_sum(g("1"), g("1")), g("12"));
}

TEST(PlanarTriSum, ZeroConventions) {
  const auto zero = PlanarGrove(PTree::leaf());
  for (const auto& x : trees_upto(3, 1)) {
    EXPECT_EQ(left_sum(one(x), zero), one(x));
    EXPECT_EQ(left_sum(zero, one(x)), zero);
    EXPECT_EQ(right_sum(one(x), zero), zero);
    EXPECT_EQ(right_sum(zero, one(x)), one(x));
    EXPECT_EQ(middle_sum(one(x), zero), zero);
    EXPECT_EQ(middle_sum(zero, one(x)), zero);
  }
  EXPECT_THROW(left_sum(zero, zero), UndefinedCase);
  EXPECT_THROW(right_sum(zero, zero), UndefinedCase);
  EXPECT_THROW(middle_sum(zero, zero), UndefinedCase);
}

TEST(PlanarTriSum, MatchesStructuralDefinitions) {
  const oracle::Arith ref{false};
  const auto ts = trees_upto(3, 1);
  for (const auto& x : ts) {
    for (const auto& y : ts) {
      const auto sx = structure(x), sy = structure(y);
      EXPECT_EQ(names(left_sum(one(x), one(y))), oracle::words(ref.left(sx, sy)));
      EXPECT_EQ(names(right_sum(one(x), one(y))), oracle::words(ref.right(sx, sy)));
      EXPECT_EQ(names(middle_sum(one(x), one(y))), oracle::words(ref.middle(sx, sy)));
      EXPECT_EQ(names(sum(x, y)), oracle::words(ref.sum(sx, sy)));
    }
  }
}

TEST(PlanarTriSum, DisjointSplitOfTheSum) {
  const auto ts = trees_upto(3, 1);
  for (const auto& x : ts) {
    for (const auto& y : ts) {
      const auto l = left_sum(one(x), one(y));
      const auto r = right_sum(one(x), one(y));
      const auto m = middle_sum(one(x), one(y));
      EXPECT_TRUE(disjoint(l, r));
      EXPECT_TRUE(disjoint(l, m));
      EXPECT_TRUE(disjoint(r, m));
      EXPECT_EQ(grove_union(grove_union(l, r), m), sum(x, y));
    }
  }
}

TEST(PlanarTriSum, ShortcutsForSpecialShapes) {
  // Last child of x empty, or first child of y empty.
  const auto ts = trees_upto(4, 1);
  for (const auto& x : ts) {
    for (const auto& y : ts) {
      if (x.degree() + y.degree() > 6) continue;
      const auto n = static_cast<Entry>(x.degree() + y.degree());
      const bool x_ends_empty = decompose_many(x).back().is_leaf();
      const bool y_starts_empty = decompose_many(y).front().is_leaf();
      if (x_ends_empty) {
        EXPECT_EQ(left_sum(one(x), one(y)), one(PTree::from_name(concat(relabel(x, n), y.name()))));
      }
      if (y_starts_empty) {
        EXPECT_EQ(right_sum(one(x), one(y)), one(PTree::from_name(concat(x.name(), relabel(y, n)))));
      }
      if (x_ends_empty || y_starts_empty) {
        EXPECT_EQ(middle_sum(one(x), one(y)), one(PTree::from_name(concat(relabel(x, n), relabel(y, n)))));
      }
    }
  }
}

// ---- sum ------------------------------------------------------------------------

TEST(PlanarSum, Examples) {
  EXPECT_EQ(sum(p("1"), p("1")), g("{12, 21, 22}"));
  EXPECT_EQ(sum(p("12"), p("1")), g("{123, 131, 133}"));
  EXPECT_EQ(sum(p("22"), p("1")), g("{223, 331, 333}"));
  EXPECT_EQ(sum(p("22"), p("22")), g("{2244, 4422, 4444}"));
}

TEST(PlanarSum, ZeroIsNeutral) {
  for (const auto& x : trees_upto(4)) {
    EXPECT_EQ(sum(x, PTree::leaf()), one(x));
    EXPECT_EQ(sum(PTree::leaf(), x), one(x));
  }
}

TEST(PlanarSum, PlusOneAttachesALeafOnTheRight) {
  for (const auto& t : trees_upto(4)) {
    EXPECT_EQ(names(sum(t, p("1"))), oracle::words(oracle::planar_plus_one(structure(t)))) << to_string(t);
  }
}

TEST(PlanarSum, AssociativeOnTriples) {
  const auto ts = trees_upto(2);
  for (const auto& x : ts) {
    for (const auto& y : ts) {
      for (const auto& z : ts) EXPECT_EQ(sum(sum(one(x), one(y)), one(z)), sum(one(x), sum(one(y), one(z))));
    }
  }
}

TEST(PlanarSum, TotalGroveIdentity) {
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned m = 0; n + m <= 6; ++m) {
      EXPECT_EQ(sum(total_grove<PTree>(n), total_grove<PTree>(m)), total_grove<PTree>(n + m)) << n << "+" << m;
    }
  }
}

TEST(PlanarSum, NoDuplicatesAcrossPairs) {
  // Sizes of the individual sums add up to the size of the total grove.
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned m = 1; n + m <= 5; ++m) {
      std::size_t count = 0;
      for (const auto& x : enumerate_planar(n)) {
        for (const auto& y : enumerate_planar(m)) count += sum(x, y).size();
      }
      EXPECT_EQ(count, total_grove<PTree>(n + m).size());
    }
  }
}

// ---- relations ----------------------------------------------------------------------

namespace {

void expect_trialgebra_relations(const PlanarGrove& x, const PlanarGrove& y, const PlanarGrove& z) {
  EXPECT_EQ(left_sum(left_sum(x, y), z), left_sum(x, sum(y, z)));
  EXPECT_EQ(left_sum(right_sum(x, y), z), right_sum(x, left_sum(y, z)));
  EXPECT_EQ(right_sum(sum(x, y), z), right_sum(x, right_sum(y, z)));
  EXPECT_EQ(middle_sum(right_sum(x, y), z), right_sum(x, middle_sum(y, z)));
  EXPECT_EQ(middle_sum(left_sum(x, y), z), middle_sum(x, right_sum(y, z)));
  EXPECT_EQ(left_sum(middle_sum(x, y), z), middle_sum(x, left_sum(y, z)));
  EXPECT_EQ(middle_sum(middle_sum(x, y), z), middle_sum(x, middle_sum(y, z)));
}

}  // namespace

TEST(PlanarRelations, ExhaustiveUpToDegreeTwo) {
  const auto ts = trees_upto(2, 1);
  for (const auto& x : ts) {
    for (const auto& y : ts) {
      for (const auto& z : ts) expect_trialgebra_relations(one(x), one(y), one(z));
    }
  }
}

TEST(PlanarRelations, RandomTriplesUpToDegreeThree) {
  const auto ts = trees_upto(3, 1);
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<std::size_t> pick(0, ts.size() - 1);
  for (int i = 0; i < 50; ++i) expect_trialgebra_relations(one(ts[pick(rng)]), one(ts[pick(rng)]), one(ts[pick(rng)]));
}

// ---- mirror ---------------------------------------------------------------------------

TEST(PlanarMirror, ReversesSums) {
  const auto ts = trees_upto(3);
  for (const auto& xt : ts) {
    for (const auto& yt : ts) {
      const auto x = one(xt), y = one(yt);
      EXPECT_EQ(mirror(sum(x, y)), sum(mirror(y), mirror(x)));
      if (xt.is_leaf() && yt.is_leaf()) continue;
      EXPECT_EQ(mirror(left_sum(x, y)), right_sum(mirror(y), mirror(x)));
      EXPECT_EQ(mirror(right_sum(x, y)), left_sum(mirror(y), mirror(x)));
      EXPECT_EQ(mirror(middle_sum(x, y)), middle_sum(mirror(y), mirror(x)));
    }
  }
}

TEST(PlanarMirror, CommutesWithProduct) {
  const auto ts = trees_upto(3);
  for (const auto& x : ts) {
    for (const auto& y : ts) {
      if (x.degree() * y.degree() > 6) continue;
      EXPECT_EQ(mirror(multiply(x, y)), multiply(mirror(x), mirror(y)));
    }
  }
}

// ---- universal expressions and products --------------------------------------------

TEST(PlanarUniversal, Examples) {
  EXPECT_EQ(to_string(universal_expression(p("22"))), "1 ⊥ 1");
  EXPECT_EQ(to_string(universal_expression(p("133"))), "1 ⊢ 1 ⊥ 1");
  EXPECT_FALSE(validate(parse_name("122"), Flavor::planar));
  EXPECT_EQ(to_string(universal_expression(p("322"))), "1 ⊣ (1 ⊥ 1)");
  EXPECT_EQ(to_string(universal_expression(p("22")), Glyphs::ascii), "1 <+> 1");
  EXPECT_THROW(universal_expression(PTree::leaf()), DegenerateInput);
}

TEST(PlanarUniversal, EvaluatesToTheTree) {
  for (const auto& x : trees_upto(5, 1)) {
    const auto e = universal_expression(x);
    EXPECT_EQ(e.unit_count(), x.degree());
    EXPECT_EQ(e.uses_middle(), !is_binary(x));
    EXPECT_EQ(eval_uexpr(e, g("1")), one(x));
  }
}

TEST(PlanarProduct, Examples) {
  EXPECT_EQ(multiply(p("12"), p("22")), g("2244"));
  EXPECT_EQ(multiply(p("22"), p("22")), g("4444"));
  EXPECT_EQ(multiply(p("22"), p("21")), g("4141"));
  EXPECT_EQ(multiply(p("21"), p("22")), g("4422"));
  EXPECT_EQ(multiply(p("12"), p("21")), g("2141"));
  EXPECT_EQ(multiply(p("313"), p("1")), g("313"));
  EXPECT_EQ(multiply(p("12"), p("133")), g("{133466, 144166, 144466}"));
}

TEST(PlanarProduct, UnitAndZero) {
  for (const auto& x : trees_upto(4)) {
    EXPECT_EQ(multiply(g("1"), one(x)), one(x));
    EXPECT_EQ(multiply(one(x), g("1")), one(x));
    EXPECT_EQ(multiply(g("0"), one(x)), g("0"));
  }
}

TEST(PlanarProduct, DegreeMultipliesAndCapApplies) {
  EXPECT_EQ(multiply(p("22"), p("133")).degree(), 6u);
  EXPECT_THROW(multiply(total_grove<PTree>(2), total_grove<PTree>(5)), ResourceLimit);
}

TEST(PlanarProduct, EqualsUniversalExpressionEvaluation) {
  for (const auto& x : trees_upto(3, 1)) {
    const auto e = universal_expression(x);
    for (const auto& y : trees_upto(2, 1)) EXPECT_EQ(multiply(x, y), eval_uexpr(e, one(y)));
    EXPECT_EQ(multiply(one(x), total_grove<PTree>(2)), eval_uexpr(e, total_grove<PTree>(2)));
  }
}

TEST(PlanarProduct, Associative) {
  const auto ts = trees_upto(2, 1);
  for (const auto& x : ts) {
    for (const auto& y : ts) {
      for (const auto& z : ts) {
        if (x.degree() * y.degree() * z.degree() > 8) continue;
        EXPECT_EQ(multiply(multiply(one(x), one(y)), one(z)), multiply(one(x), multiply(one(y), one(z))));
      }
    }
  }
}

TEST(PlanarProduct, LeftDistributive) {
  std::vector<PlanarGrove> groves;
  for (const auto& t : trees_upto(2, 1)) groves.push_back(one(t));
  groves.push_back(g("{12, 22}"));
  for (const auto& x : groves) {
    for (const auto& y : groves) {
      for (const auto& k : groves) {
        if ((x.degree() + y.degree()) * k.degree() > 8) continue;
        EXPECT_EQ(multiply(sum(x, y), k), sum(multiply(x, k), multiply(y, k)));
        if (x.degree() == y.degree()) {
          EXPECT_EQ(multiply(grove_union(x, y), k), grove_union(multiply(x, k), multiply(y, k)));
        }
      }
    }
  }
}

TEST(PlanarProduct, TotalGroveIdentity) {
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned m = 0; m <= 6 && n * m <= 6; ++m) {
      EXPECT_EQ(multiply(total_grove<PTree>(n), total_grove<PTree>(m)), total_grove<PTree>(n * m)) << n << "*" << m;
    }
  }
}

// ---- binary trees inside planar trees --------------------------------------------------

TEST(Quotient, Examples) {
  EXPECT_EQ(project_binary(g("{12, 21, 22}")), bg("{12, 21}"));
  EXPECT_EQ(project_binary(sum(p("1"), p("1"))), sum(PBTree::from_name({1}), PBTree::from_name({1})));
  EXPECT_EQ(project_binary(multiply(p("12"), p("21"))), bg("2141"));
  EXPECT_FALSE(project_binary(g("{133, 333}")).has_value());
}

TEST(Quotient, AdditiveAndMultiplicative) {
  std::vector<PBTree> bs;
  for (unsigned n = 0; n <= 3; ++n) {
    for (auto& x : enumerate_binary(n)) bs.push_back(x);
  }
  for (const auto& x : bs) {
    for (const auto& y : bs) {
      const auto ex = embed_binary(BinaryGrove(x)), ey = embed_binary(BinaryGrove(y));
      EXPECT_EQ(project_binary(sum(ex, ey)), sum(x, y));
      if (x.degree() * y.degree() > 6) continue;
      EXPECT_EQ(project_binary(multiply(ex, ey)), multiply(x, y));
    }
  }
}

TEST(Quotient, EmbedThenProjectIsIdentity) {
  for (unsigned n = 0; n <= 5; ++n) {
    const auto total = total_grove<PBTree>(n);
    EXPECT_EQ(project_binary(embed_binary(total)), total);
  }
}

// ---- filtration ------------------------------------------------------------------------

TEST(Filtration, VertexGrade) {
  EXPECT_EQ(vertex_grade(p("22")), (GradedIndex{2, 2}));
  EXPECT_EQ(vertex_grade(p("12")), (GradedIndex{2, 1}));
  EXPECT_THROW(vertex_grade(PTree::leaf()), DegenerateInput);
  for (const auto& t : oracle::trees_of_degree(4, false)) {
    const auto x = PTree::from_name(oracle::word(t));
    EXPECT_EQ(vertex_grade(x).i, 5 - oracle::vertices(t));
  }
}

TEST(Filtration, GradedSumExamples) {
  EXPECT_EQ(graded_sum(1, g("1"), g("1")), g("{12, 21}"));
  // 22 + 22 = {2244, 4422, 4444}: the first two have two vertices, 4444 has one.
  EXPECT_EQ(vertex_grade(p("2244")).i, 3u);
  EXPECT_EQ(vertex_grade(p("4422")).i, 3u);
  EXPECT_EQ(vertex_grade(p("4444")).i, 4u);
  EXPECT_FALSE(graded_sum(2, g("22"), g("22")).has_value());
  EXPECT_THROW(graded_sum(1, g("22"), g("1")), DomainError);
  EXPECT_THROW(graded_sum(2, g("{12, 22}"), g("22")), DomainError);
}

TEST(Filtration, CellOfSumIsBounded) {
  // v(x + y) lies between max(v(x), v(y)) and v(x) + v(y), v counting vertices.
  const auto ts = trees_upto(5, 1);
  for (const auto& x : ts) {
    for (const auto& y : ts) {
      if (x.degree() + y.degree() > 6) continue;
      const unsigned i = vertex_grade(x).i, j = vertex_grade(y).i;
      const unsigned vx = vertex_count(x), vy = vertex_count(y);
      for (const auto& z : sum(x, y)) {
        const unsigned k = vertex_grade(z).i;
        EXPECT_GE(k, std::max(i, j));
        EXPECT_GE(k, i + j - 1);
        EXPECT_GE(vertex_count(z), std::max(vx, vy)) << to_string(x) << " + " << to_string(y) << " -> " << to_string(z);
        EXPECT_LE(vertex_count(z), vx + vy);
      }
    }
  }
}

TEST(Filtration, CellCanExceedSumOfIndices) {
  // Two trees of cell 1 whose sum reaches cell 3.
  ASSERT_EQ(vertex_grade(p("21")).i, 1u);
  ASSERT_EQ(vertex_grade(p("12")).i, 1u);
  EXPECT_TRUE(sum(p("21"), p("12")).contains(p("4224")));
  EXPECT_EQ(vertex_grade(p("4224")).i, 3u);
}

TEST(Filtration, FirstCellRecoversBinarySum) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned m = 1; n + m <= 5; ++m) {
      for (const auto& x : enumerate_binary(n)) {
        for (const auto& y : enumerate_binary(m)) {
          const auto graded = graded_sum(1, PlanarGrove(embed_binary(x)), PlanarGrove(embed_binary(y)));
          ASSERT_TRUE(graded.has_value());
          EXPECT_EQ(project_binary(*graded), sum(x, y));
          EXPECT_EQ(graded->size(), sum(x, y).size());
        }
      }
    }
  }
}

TEST(Filtration, GradedSumIsAssociative) {
  for (unsigned i = 1; i <= 2; ++i) {
    std::vector<PTree> cell;
    for (const auto& t : trees_upto(2, 1)) {
      if (in_cell(t, i)) cell.push_back(t);
    }
    for (const auto& x : cell) {
      for (const auto& y : cell) {
        for (const auto& z : cell) {
          // An empty part acts as zero.
          const auto xy = graded_sum(i, one(x), one(y));
          const auto yz = graded_sum(i, one(y), one(z));
          const auto lhs = xy ? graded_sum(i, *xy, one(z)) : std::nullopt;
          const auto rhs = yz ? graded_sum(i, one(x), *yz) : std::nullopt;
          EXPECT_EQ(lhs, rhs);
        }
      }
    }
  }
}
