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

#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "conjcover/constructions.hpp"
#include "conjcover/covering.hpp"
#include "conjcover/error.hpp"
#include "conjcover/structure.hpp"

namespace conjcover {
namespace {

Elem E(const GroupTable& g, const char* cycles) { return g.index_of(parse_cycles(cycles, g.degree())); }

Subgroup Gen(const GroupTable& g, std::initializer_list<const char*> cycles) {
  std::vector<Elem> gens;
  for (const char* c : cycles) gens.push_back(E(g, c));
  return subgroup_closure(g, gens);
}

SubsetMask Set(const GroupTable& g, std::initializer_list<const char*> cycles) {
  std::vector<Elem> elems;
  for (const char* c : cycles) elems.push_back(E(g, c));
  return SubsetMask::of(g, elems);
}

SubsetMask random_subset(const GroupTable& g, std::mt19937& rng, double density) {
  std::bernoulli_distribution coin(density);
  Bitset b(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    if (coin(rng)) b.set(i);
  return SubsetMask(g, std::move(b));
}

TEST(SetProduct, KnownValues) {
  const GroupTable s3 = symmetric(3);
  const SubsetMask a = Set(s3, {"(1 2)", "(1 2 3)"});
  EXPECT_EQ(set_product(a, Set(s3, {"e"})), a);
  const Subgroup m = Gen(s3, {"(1 2)"});
  EXPECT_EQ(set_product(SubsetMask::of(m), SubsetMask::of(m)), SubsetMask::of(m));

  const SubsetMask p = set_product(Set(s3, {"e", "(1 2)"}), Set(s3, {"e", "(1 3)"}));
  EXPECT_EQ(p.cardinality(), 4u);
  for (const char* c : {"e", "(1 2)", "(1 3)", "(1 2 3)"}) EXPECT_TRUE(p.contains(E(s3, c))) << c;
}

TEST(SetProduct, ParentMismatch) {
  const GroupTable a = symmetric(3);
  const GroupTable b = symmetric(3);
  EXPECT_THROW(set_product(SubsetMask::of(Subgroup::whole(a)), SubsetMask::of(Subgroup::whole(b))),
               InvalidArgument);
}

TEST(SetProduct, MonotoneAndSubgroupFixedPoint) {
  const GroupTable g = symmetric(4);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const SubsetMask a = random_subset(g, rng, 0.2);
    Bitset bigger = a.bits();
    bigger.set(static_cast<std::size_t>(rng() % g.order()));
    const SubsetMask a2(g, bigger);
    const SubsetMask c = random_subset(g, rng, 0.2);
    EXPECT_TRUE(set_product(a, c).bits().is_subset_of(set_product(a2, c).bits()));
  }
  for (const auto& h : all_subgroups(g)) {
    EXPECT_EQ(set_product(SubsetMask::of(h), SubsetMask::of(h)), SubsetMask::of(h));
  }
  // A non-subgroup containing e is not a fixed point.
  const SubsetMask s = Set(g, {"e", "(1 2 3)"});
  EXPECT_NE(set_product(s, s), s);
}

TEST(SubgroupProducts, CosetRoutesMatchBruteForce) {
  const GroupTable g = symmetric(4);
  std::mt19937 rng(9);
  for (const auto& h : all_subgroups(g)) {
    const RightSubgroupProduct right(h);
    const LeftSubgroupProduct left(h);
    for (int trial = 0; trial < 5; ++trial) {
      const SubsetMask s = random_subset(g, rng, 0.15);
      EXPECT_EQ(right.apply(s.bits()), set_product(s, SubsetMask::of(h)).bits());
      EXPECT_EQ(left.apply(s.bits()), set_product(SubsetMask::of(h), s).bits());
      const Elem x = static_cast<Elem>(rng() % g.order());
      const Elem xs[] = {x};
      EXPECT_EQ(right_translate(s.bits(), g.right_translation(x)),
                set_product(s, SubsetMask::of(g, xs)).bits());
    }
  }
}

TEST(Gamma, OrderingAndSerialization) {
  EXPECT_LT(Gamma::finite(3), Gamma::finite(4));
  EXPECT_LT(Gamma::finite(1000), Gamma::infinite());
  EXPECT_LE(Gamma::infinite(), Gamma::infinite());
  EXPECT_EQ(Gamma::infinite(), Gamma::infinite());
  EXPECT_EQ(Gamma::infinite().to_string(), "infinity");
  EXPECT_EQ(Gamma::finite(5).to_string(), "5");
  EXPECT_THROW(Gamma::infinite().value(), Error);
}

TEST(Rank, KnownValues) {
  const GroupTable s3 = symmetric(3);
  EXPECT_EQ(rank(s3, Gen(s3, {"(1 2)"})).r, 2u);
  const GroupTable c6 = cyclic(6);
  const Subgroup c3 = subgroup_closure(c6, std::vector<Elem>{c6.power(c6.generators()[0], 2)});
  ASSERT_EQ(c3.order(), 3u);
  EXPECT_EQ(rank(c6, c3).r, 2u);
  const GroupTable a5 = alternating(5);
  EXPECT_EQ(rank(a5, point_stabilizer(a5, 0)).r, 2u);
  EXPECT_THROW(rank(s3, Subgroup::whole(s3)), InvalidArgument);
}

TEST(Rank, EqualsDoubleCosetCountAndPointOrbits) {
  const GroupTable s5 = symmetric(5);
  // Stabilizer of {1, 2} as a set: orbits on 2-subsets have sizes 1, 6, 3.
  const Subgroup m = Gen(s5, {"(1 2)", "(3 4 5)", "(3 4)"});
  const RankResult r = rank(s5, m);
  EXPECT_EQ(r.r, 3u);
  EXPECT_EQ(r.r, double_cosets(m).representative.size());
  EXPECT_EQ(r.representatives.front(), kIdentity);
}

TEST(VerifyWitness, KnownValues) {
  const GroupTable s3 = symmetric(3);
  const Subgroup m = Gen(s3, {"(1 2)"});
  // (<(1 2)>, <(1 3)>, <(1 2)>): conjugate (1 2) by (2 3) to get (1 3).
  const CoveringWitness w{m, {kIdentity, E(s3, "(2 3)"), kIdentity}};
  const WitnessReport ok = verify_witness(s3, w);
  EXPECT_TRUE(ok.valid);
  EXPECT_EQ(ok.product_size, 6u);
  EXPECT_TRUE(ok.pairwise_conjugate);
  EXPECT_TRUE(ok.factors_proper);
  EXPECT_EQ(w.factors()[1], Gen(s3, {"(1 3)"}));

  for (Elem a = 0; a < s3.order(); ++a)
    for (Elem b = 0; b < s3.order(); ++b)
      EXPECT_FALSE(verify_witness(s3, CoveringWitness{m, {a, b}}).valid);

  const WitnessReport whole = verify_witness(s3, CoveringWitness{Subgroup::whole(s3), {0, 0, 0}});
  EXPECT_FALSE(whole.valid);
  EXPECT_FALSE(whole.factors_proper);

  EXPECT_THROW(verify_witness(s3, CoveringWitness{m, {0, 99}}), InvalidArgument);
}

TEST(VerifyWitness, AgreesWithBruteForceExpansion) {
  const GroupTable g = symmetric(4);
  std::mt19937 rng(2);
  for (const auto& h : all_subgroups(g)) {
    if (!h.is_proper()) continue;
    std::vector<Elem> conj(3);
    for (auto& c : conj) c = static_cast<Elem>(rng() % g.order());
    const CoveringWitness w{h, conj};
    EXPECT_EQ(verify_witness(g, w).product_size, witness_product_bruteforce(w).cardinality());
  }
}

TEST(RankFactorization, KnownValues) {
  const GroupTable s3 = symmetric(3);
  const RankFactorization a = rank_factorization(s3, Gen(s3, {"(1 2)"}));
  EXPECT_EQ(a.witness.length(), 3u);
  EXPECT_EQ(a.k0, 1u);
  EXPECT_EQ(a.r, 2u);
  EXPECT_TRUE(verify_witness(s3, a.witness).valid);

  const GroupTable a5 = alternating(5);
  const RankFactorization b = rank_factorization(a5, point_stabilizer(a5, 0));
  EXPECT_EQ(b.witness.length(), 3u);
  EXPECT_TRUE(verify_witness(a5, b.witness).valid);

  const GroupTable a4 = alternating(4);
  const RankFactorization c = rank_factorization(a4, Gen(a4, {"(1 2 3)"}));
  EXPECT_EQ(c.witness.length(), 3u);
  EXPECT_TRUE(verify_witness(a4, c.witness).valid);
}

TEST(RankFactorization, Errors) {
  const GroupTable a4 = alternating(4);
  EXPECT_THROW(rank_factorization(a4, Gen(a4, {"(1 2)(3 4)", "(1 3)(2 4)"})), InvalidArgument);
  const GroupTable s4 = symmetric(4);
  EXPECT_THROW(rank_factorization(s4, Gen(s4, {"(1 2)"})), InvalidArgument);  // not maximal
}

TEST(RankFactorization, RecurrenceAndBoundOnEveryMaximalClass) {
  for (std::size_t n : {5u, 6u, 9u, 15u}) {
    const GroupTable g = dihedral(n);
    for (const auto& m : maximal_subgroups(g)) {
      if (m.is_normal) continue;
      for (bool minimize : {false, true}) {
        const RankFactorization rf = rank_factorization(g, m.subgroup, {minimize});
        EXPECT_TRUE(rf.recurrence_holds);
        EXPECT_TRUE(verify_witness(g, rf.witness).valid);
        EXPECT_LE(rf.witness.length(), rf.r + 1);
        EXPECT_EQ(rf.power_sizes.size(), rf.k0 + 1);
        EXPECT_TRUE(std::is_sorted(rf.power_sizes.begin(), rf.power_sizes.end()));
        EXPECT_EQ(rf.power_sizes.back(), g.order());
      }
    }
  }
}

TEST(GammaForSubgroup, KnownValues) {
  const GroupTable s3 = symmetric(3);
  const SubgroupGamma a = gamma_for_subgroup(s3, Gen(s3, {"(1 2)"}), 5);
  ASSERT_TRUE(a.k.has_value());
  EXPECT_EQ(*a.k, 3u);
  EXPECT_EQ(a.conjugators.front(), kIdentity);

  const GroupTable d14 = dihedral(7);
  const Subgroup b = subgroup_closure(d14, std::vector<Elem>{d14.generators()[1]});
  const SubgroupGamma d = gamma_for_subgroup(d14, b, 6);
  ASSERT_TRUE(d.k.has_value());
  EXPECT_EQ(*d.k, 4u);
  EXPECT_TRUE(verify_witness(d14, CoveringWitness{b, d.conjugators}).valid);

  const GroupTable a4 = alternating(4);
  EXPECT_THROW(gamma_for_subgroup(a4, Gen(a4, {"(1 2)(3 4)", "(1 3)(2 4)"}), 6), InvalidArgument);
  EXPECT_THROW(gamma_for_subgroup(a4, Subgroup::whole(a4), 6), InvalidArgument);
}

TEST(GammaForSubgroup, ExceededLimit) {
  const GroupTable d14 = dihedral(7);
  const Subgroup b = subgroup_closure(d14, std::vector<Elem>{d14.generators()[1]});
  EXPECT_FALSE(gamma_for_subgroup(d14, b, 3).k.has_value());
}

// The reported witness is the lexicographically least minimal one: check it
// against a plain enumeration of all conjugator sequences on small cases.
TEST(GammaForSubgroup, LexicographicallySmallestWitness) {
  const GroupTable g = dihedral(5);
  const Subgroup b = subgroup_closure(g, std::vector<Elem>{g.generators()[1]});
  const SubgroupGamma sg = gamma_for_subgroup(g, b, 6);
  ASSERT_TRUE(sg.k.has_value());
  const auto conj = conjugates_with_conjugators(b);
  // Enumerate sequences of conjugate indices starting from b itself.
  const std::size_t k = *sg.k;
  std::vector<std::size_t> idx(k, 0);
  std::optional<std::vector<Elem>> first;
  for (;;) {
    std::vector<Elem> seq;
    for (std::size_t i = 0; i < k; ++i) seq.push_back(conj[idx[i]].conjugator);
    if (idx[0] == 0 && verify_witness(g, CoveringWitness{b, seq}).valid) {
      first = seq;
      break;
    }
    std::size_t pos = k;
    while (pos > 1 && ++idx[pos - 1] == conj.size()) idx[--pos] = 0;
    if (pos == 1) break;
  }
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(sg.conjugators, *first);
}

TEST(GammaForSubgroup, DominationPruningGivesSameAnswer) {
  for (std::size_t n : {7u, 9u, 15u}) {
    const GroupTable g = dihedral(n);
    const Subgroup b = subgroup_closure(g, std::vector<Elem>{g.generators()[1]});
    const SubgroupGamma plain = gamma_for_subgroup(g, b, 10);
    const SubgroupGamma pruned = gamma_for_subgroup(g, b, 10, SearchOptions{true, 1});
    EXPECT_EQ(plain.k, pruned.k);
    EXPECT_EQ(plain.conjugators, pruned.conjugators);
  }
}

TEST(OrderLowerBound, Values) {
  EXPECT_EQ(order_lower_bound(6, 2), 3u);
  EXPECT_EQ(order_lower_bound(134, 2), 8u);
  EXPECT_EQ(order_lower_bound(60, 12), 3u);
  EXPECT_EQ(order_lower_bound(1024, 2), 10u);
}

TEST(GammaCpExact, KnownValues) {
  EXPECT_TRUE(gamma_cp_exact(cyclic(12), 8).value.is_infinite());
  EXPECT_FALSE(gamma_cp_exact(cyclic(12), 8).witness.has_value());
  EXPECT_EQ(gamma_cp_exact(dihedral(7), 8).value, Gamma::finite(4));
  EXPECT_EQ(gamma_cp_exact(symmetric(3), 8).value, Gamma::finite(3));
  EXPECT_EQ(gamma_cp_exact(alternating(5), 8).value, Gamma::finite(3));
}

TEST(GammaCpExact, WitnessVerifiesAndThreadsAgree) {
  for (std::size_t n : {9u, 15u, 21u}) {
    const GroupTable g = dihedral(n);
    const GammaResult one = gamma_cp_exact(g, 10);
    const GammaResult four = gamma_cp_exact(g, 10, SearchOptions{false, 4});
    ASSERT_TRUE(one.witness.has_value());
    EXPECT_TRUE(verify_witness(g, *one.witness).valid);
    EXPECT_EQ(one.witness->length(), one.value.value());
    EXPECT_EQ(one.value, four.value);
    EXPECT_EQ(one.witness->conjugators, four.witness->conjugators);
  }
}

TEST(GammaCpExact, LimitExhaustedOnEveryClass) {
  try {
    gamma_cp_exact(dihedral(7), 3);
    FAIL() << "expected SearchLimitExceeded";
  } catch (const SearchLimitExceeded& e) {
    ASSERT_FALSE(e.per_class().empty());
    for (const auto& c : e.per_class()) EXPECT_FALSE(c.k.has_value());
  }
}

TEST(GammaCpExact, ExplicitCandidates) {
  const GroupTable a5 = alternating(5);
  const Subgroup stab = point_stabilizer(a5, 0);
  const Subgroup cands[] = {stab};
  const GammaResult r = gamma_cp_exact(a5, cands, 6);
  EXPECT_EQ(r.value, Gamma::finite(3));
}

TEST(Oracle, KnownValues) {
  EXPECT_EQ(gamma_bruteforce_oracle(symmetric(3), 4).value, Gamma::finite(3));
  EXPECT_TRUE(gamma_bruteforce_oracle(cyclic(6), 4).value.is_infinite());
  EXPECT_EQ(gamma_bruteforce_oracle(alternating(4), 4).value, Gamma::finite(3));
  EXPECT_THROW(gamma_bruteforce_oracle(dihedral(7), 3), SearchLimitExceeded);
}

TEST(Oracle, AgreesWithExactOnSmallDihedrals) {
  for (std::size_t n = 3; n <= 12; ++n) {
    const GroupTable g = dihedral(n);
    EXPECT_EQ(gamma_bruteforce_oracle(g, 6).value, gamma_cp_exact(g, 6).value) << n;
  }
}

}  // namespace
}  // namespace conjcover
