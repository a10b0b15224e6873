// Copyright 2026 The conjcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "conjcover/error.hpp"
#include "conjcover/group_table.hpp"
#include "conjcover/permutation.hpp"

namespace conjcover {
namespace {

Permutation P(const char* text, std::size_t degree) { return parse_cycles(text, degree); }

TEST(ParseCycles, ThreeCycle) {
  const Permutation p = P("(1 2 3)", 3);
  EXPECT_EQ(p(0), 1u);
  EXPECT_EQ(p(1), 2u);
  EXPECT_EQ(p(2), 0u);
}

TEST(ParseCycles, IdentityForms) {
  EXPECT_TRUE(P("e", 5).is_identity());
  EXPECT_TRUE(P("()", 5).is_identity());
  EXPECT_EQ(P("e", 5).degree(), 5u);
  EXPECT_TRUE(P("  e ", 2).is_identity());
}

TEST(ParseCycles, DoubleTranspositionSquaresToIdentity) {
  const Permutation p = P("(1 2)(3 4)", 4);
  EXPECT_FALSE(p.is_identity());
  EXPECT_TRUE((p * p).is_identity());
}

TEST(ParseCycles, CommaSeparatorsAndSingletons) {
  EXPECT_EQ(P("(1,2,3)", 4), P("(1 2 3)", 4));
  EXPECT_TRUE(P("(2)", 3).is_identity());
}

TEST(ParseCycles, Errors) {
  EXPECT_THROW(P("(1 2", 3), ParseError);
  EXPECT_THROW(P("1 2)", 3), ParseError);
  EXPECT_THROW(P("(1 2)(2 3)", 3), ParseError);
  EXPECT_THROW(P("(1 1)", 3), ParseError);
  EXPECT_THROW(P("(1 4)", 3), ParseError);
  EXPECT_THROW(P("(0 1)", 3), ParseError);
  EXPECT_THROW(P("(1 x)", 3), ParseError);
  EXPECT_THROW(P("", 3), ParseError);
  EXPECT_THROW(P("(1 2) junk", 3), ParseError);
}

TEST(ParseCycles, ErrorPositionPointsAtOffendingToken) {
  try {
    P("(1 2)(3 9)", 5);
    FAIL() << "expected a ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
  try {
    P("(1 2)(2 3)", 5);
    FAIL() << "expected a ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(Permutation, FromImagesRejectsNonBijections) {
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), InvalidArgument);
  EXPECT_THROW(Permutation::from_images({0, 3, 1}), InvalidArgument);
  EXPECT_NO_THROW(Permutation::from_images({2, 0, 1}));
}

TEST(Compose, LeftToRightConvention) {
  // Apply (1 2) first, then (1 3): 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1.
  EXPECT_EQ(P("(1 2)", 3) * P("(1 3)", 3), P("(1 2 3)", 3));
}

TEST(Compose, IdentityAndInverseLaws) {
  const Permutation g = P("(1 4 2)(3 5)", 5);
  EXPECT_EQ(Permutation(5) * g, g);
  EXPECT_EQ(g * Permutation(5), g);
  EXPECT_TRUE((g * g.inverse()).is_identity());
  EXPECT_TRUE((g.inverse() * g).is_identity());
}

TEST(Compose, DegreeMismatch) { EXPECT_THROW(P("(1 2)", 2) * P("(1 2)", 3), InvalidArgument); }

TEST(Compose, RandomAssociativity) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Permutation> ps;
    for (int i = 0; i < 3; ++i) {
      std::vector<Point> images(9);
      for (Point j = 0; j < 9; ++j) images[j] = j;
      std::shuffle(images.begin(), images.end(), rng);
      ps.push_back(Permutation::from_images(images));
    }
    EXPECT_EQ((ps[0] * ps[1]) * ps[2], ps[0] * (ps[1] * ps[2]));
  }
}

TEST(ToCycles, CanonicalRoundTrip) {
  EXPECT_EQ(Permutation(4).to_cycles(), "()");
  EXPECT_EQ(P("(3 1 2)(5 4)", 5).to_cycles(), "(1 2 3)(4 5)");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> images(8);
    for (Point j = 0; j < 8; ++j) images[j] = j;
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation p = Permutation::from_images(images);
    const std::string text = p.to_cycles();
    EXPECT_EQ(P(text.c_str(), 8), p);
    EXPECT_EQ(P(text.c_str(), 8).to_cycles(), text);
  }
}

TEST(GenerateGroup, Symmetric5) {
  const std::vector<Permutation> gens{P("(1 2 3 4 5)", 5), P("(1 2)", 5)};
  EXPECT_EQ(generate_group(5, gens).order(), 120u);
}

TEST(GenerateGroup, TrivialFromNoGenerators) {
  const GroupTable g = generate_group(3, {});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.element(kIdentity).is_identity());
  EXPECT_TRUE(g.generators().empty());
}

TEST(GenerateGroup, Dihedral14) {
  const std::vector<Permutation> gens{P("(1 2 3 4 5 6 7)", 7), P("(2 7)(3 6)(4 5)", 7)};
  EXPECT_EQ(generate_group(7, gens).order(), 14u);
}

TEST(GenerateGroup, IdentityAndDuplicateGeneratorsAreDropped) {
  const std::vector<Permutation> gens{P("e", 4), P("(1 2)", 4), P("(1 2)", 4)};
  const GroupTable g = generate_group(4, gens);
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.generators().size(), 1u);
}

TEST(GenerateGroup, CapExceeded) {
  const std::vector<Permutation> gens{P("(1 2 3 4 5)", 5), P("(1 2)", 5)};
  EXPECT_THROW(generate_group(5, gens, 100), CapExceeded);
  EXPECT_NO_THROW(generate_group(5, gens, 120));
}

TEST(GenerateGroup, DegreeMismatch) {
  const std::vector<Permutation> gens{P("(1 2)", 2), P("(1 2 3)", 3)};
  EXPECT_THROW(generate_group(3, gens), InvalidArgument);
}

TEST(GenerateGroup, EnvironmentOverridesCap) {
  ASSERT_EQ(setenv("CONJCOVER_MAX_ORDER", "50", 1), 0);
  EXPECT_EQ(default_order_cap(), 50u);
  const std::vector<Permutation> gens{P("(1 2 3 4 5)", 5), P("(1 2)", 5)};
  EXPECT_THROW(generate_group(5, gens), CapExceeded);
  ASSERT_EQ(unsetenv("CONJCOVER_MAX_ORDER"), 0);
  EXPECT_EQ(default_order_cap(), kDefaultOrderCap);
}

TEST(GenerateGroup, DeterministicBreadthFirstOrder) {
  const std::vector<Permutation> gens{P("(1 2 3)", 3), P("(1 2)", 3)};
  const GroupTable g = generate_group(3, gens);
  ASSERT_EQ(g.order(), 6u);
  EXPECT_TRUE(g.element(0).is_identity());
  EXPECT_EQ(g.element(1), gens[0]);
  EXPECT_EQ(g.element(2), gens[1]);
  // Same element set whatever the generator order.
  const std::vector<Permutation> swapped{gens[1], gens[0]};
  const GroupTable h = generate_group(3, swapped);
  std::set<Permutation> a(g.elements().begin(), g.elements().end());
  std::set<Permutation> b(h.elements().begin(), h.elements().end());
  EXPECT_EQ(a, b);
}

class TableLaws : public ::testing::TestWithParam<std::size_t> {};

// Checked on a group small enough for a Cayley table and on one without.
TEST_P(TableLaws, IdentityInverseClosureAssociativity) {
  std::vector<Permutation> gens;
  const std::size_t n = GetParam();
  std::vector<Point> cycle(n);
  for (Point i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  gens.push_back(Permutation::from_images(cycle));
  gens.push_back(P("(1 2)", n));
  const GroupTable g = generate_group(n, gens);
  EXPECT_EQ(g.has_cayley_table(), g.order() <= kCayleyTableLimit);

  std::mt19937 rng(3);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
  for (int trial = 0; trial < 500; ++trial) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
    EXPECT_EQ(g.mul(kIdentity, a), a);
    EXPECT_EQ(g.mul(a, kIdentity), a);
    EXPECT_EQ(g.mul(a, g.inv(a)), kIdentity);
    EXPECT_EQ(g.element(g.mul(a, b)), g.element(a) * g.element(b));
    EXPECT_EQ(g.index_of(g.element(a)), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Symmetric, TableLaws, ::testing::Values(4, 7));

TEST(GroupTable, PowersOrdersAndConjugation) {
  const std::vector<Permutation> gens{P("(1 2 3 4 5 6)", 6)};
  const GroupTable g = generate_group(6, gens);
  const Elem v = g.generators()[0];
  EXPECT_EQ(g.element_order(v), 6u);
  EXPECT_EQ(g.power(v, 6), kIdentity);
  EXPECT_EQ(g.power(v, -1), g.inv(v));
  EXPECT_EQ(g.power(v, 8), g.power(v, 2));
  EXPECT_EQ(g.conj(v, v), v);
  EXPECT_EQ(g.commutator(v, g.power(v, 2)), kIdentity);
  EXPECT_FALSE(g.find(P("(1 2)", 6)).has_value());
  EXPECT_THROW(g.index_of(P("(1 2)", 6)), InvalidArgument);
}

TEST(GroupTable, Translations) {
  const std::vector<Permutation> gens{P("(1 2 3)", 3), P("(1 2)", 3)};
  const GroupTable g = generate_group(3, gens);
  for (Elem x = 0; x < g.order(); ++x) {
    const auto r = g.right_translation(x);
    const auto l = g.left_translation(x);
    for (Elem y = 0; y < g.order(); ++y) {
      EXPECT_EQ(r[y], g.mul(y, x));
      EXPECT_EQ(l[y], g.mul(x, y));
    }
  }
}

}  // namespace
}  // namespace conjcover
