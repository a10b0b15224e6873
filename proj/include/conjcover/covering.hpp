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

// Products of subsets of a finite group, and coverings of the group by
// products of conjugates of one proper subgroup.
//
// A covering of length k is a sequence of conjugates M^{g_1}, ..., M^{g_k}
// of a proper subgroup M whose ordered setwise product is all of G. The
// covering number gamma(G) is the least such k, or infinity when G is
// nilpotent (every maximal subgroup is then normal and no covering exists).

#ifndef CONJCOVER_COVERING_HPP_
#define CONJCOVER_COVERING_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conjcover/bitset.hpp"
#include "conjcover/error.hpp"
#include "conjcover/group_table.hpp"
#include "conjcover/subgroup.hpp"

namespace conjcover {

// An arbitrary subset of a group's elements.
class SubsetMask {
 public:
  SubsetMask(const GroupTable& parent, Bitset bits);

  static SubsetMask of(const Subgroup& h) { return SubsetMask(h.parent(), h.mask()); }
  static SubsetMask of(const GroupTable& parent, std::span<const Elem> elems);

  const GroupTable& parent() const noexcept { return *parent_; }
  const Bitset& bits() const noexcept { return bits_; }
  std::size_t cardinality() const noexcept { return cardinality_; }
  bool contains(Elem g) const { return bits_.test(g); }
  bool is_full() const noexcept { return cardinality_ == parent_->order(); }

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.parent_ == b.parent_ && a.bits_ == b.bits_;
  }

 private:
  const GroupTable* parent_;
  Bitset bits_;
  std::size_t cardinality_;
};

// {ab : a in A, b in B}, by O(|A||B|) index compositions. Throws
// InvalidArgument when the parents differ.
SubsetMask set_product(const SubsetMask& a, const SubsetMask& b);

// S -> S * H in O(|G|): S * H is the union of the left cosets gH that meet S.
class RightSubgroupProduct {
 public:
  explicit RightSubgroupProduct(const Subgroup& h);
  Bitset apply(const Bitset& s) const;

 private:
  std::vector<Elem> label_;
  std::vector<Elem> offsets_;  // coset c occupies members_[offsets_[c], offsets_[c+1])
  std::vector<Elem> members_;
};

// S -> H * S in O(|G|), via right cosets Hg.
class LeftSubgroupProduct {
 public:
  explicit LeftSubgroupProduct(const Subgroup& h);
  Bitset apply(const Bitset& s) const;

 private:
  std::vector<Elem> label_;
  std::vector<Elem> offsets_;
  std::vector<Elem> members_;
};

// S -> S * x, given the right-translation map of x.
Bitset right_translate(const Bitset& s, std::span<const Elem> translation);

// gamma(G): a positive integer or infinity, with n < infinity for every n.
class Gamma {
 public:
  static Gamma finite(unsigned k) { return Gamma(k); }
  static Gamma infinite() { return Gamma(); }

  bool is_infinite() const noexcept { return !value_; }
  // Throws Error when infinite.
  unsigned value() const;
  // "infinity" or the decimal value.
  std::string to_string() const;

  friend bool operator==(const Gamma&, const Gamma&) = default;
  friend std::strong_ordering operator<=>(const Gamma& a, const Gamma& b) {
    if (a.is_infinite() || b.is_infinite())
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    return *a.value_ <=> *b.value_;
  }

 private:
  Gamma() = default;
  explicit Gamma(unsigned k) : value_(k) {}
  std::optional<unsigned> value_;
};

// Certifies G = base^{g_1} * ... * base^{g_k}.
struct CoveringWitness {
  Subgroup base;
  std::vector<Elem> conjugators;

  std::size_t length() const noexcept { return conjugators.size(); }
  // The k factors, in order.
  std::vector<Subgroup> factors() const;
};

struct WitnessReport {
  bool valid;
  std::size_t product_size;
  bool pairwise_conjugate;
  bool factors_proper;
};

// Expands the ordered product of the witness factors. Valid iff k >= 2,
// every factor is proper and the product is all of G. Throws
// InvalidArgument on out-of-range conjugators.
WitnessReport verify_witness(const GroupTable& g, const CoveringWitness& w);

// The witness product by plain set_product; an independent check of the
// coset-based expansion used by verify_witness.
SubsetMask witness_product_bruteforce(const CoveringWitness& w);

struct RankResult {
  std::size_t r;
  // Lowest-index element of each double coset MxM; the first is identity.
  std::vector<Elem> representatives;
};

// Number of double cosets of M (= M-orbits on the right cosets of M).
// Throws InvalidArgument when M = G.
RankResult rank(const GroupTable& g, const Subgroup& m);

struct RankFactorizationOptions {
  // Try every conjugate M1 and every x in M1 - M and keep the smallest k0.
  // Otherwise the lowest-index conjugate M1 not inside M and the lowest-index
  // x in M1 - M are used.
  bool minimize_k0 = false;
};

struct RankFactorization {
  // (M, M^{x^-1}, ..., M^{x^-k0}, M1).
  CoveringWitness witness;
  std::size_t k0;
  std::size_t r;
  Elem x;
  Elem m1_conjugator;
  // |B^i| for i = 1 .. k0 + 1, with B = M u MxM.
  std::vector<std::size_t> power_sizes;
  // B^{i+1} = B^i u (MxM)^{i+1} and B^i in B^{i+1} held at every step.
  bool recurrence_holds;
};

// Covering of length k0 + 2 <= rank + 1 for a maximal non-normal M, built
// from the powers of B = M u MxM. Throws InvalidArgument when M is normal
// or not maximal.
RankFactorization rank_factorization(const GroupTable& g, const Subgroup& m,
                                     const RankFactorizationOptions& options = {});

struct SearchOptions {
  // Skip a state contained in a state already known to fail at the same or
  // a shallower depth.
  bool domination_pruning = false;
  // Worker threads for independent per-class searches.
  unsigned threads = 1;
};

struct SubgroupGamma {
  // Least covering length, or nullopt if none exists within the limit.
  std::optional<unsigned> k;
  // Conjugators of the lexicographically smallest minimal covering; the
  // first is always the identity.
  std::vector<Elem> conjugators;
  std::size_t states_visited = 0;
};

// Least k <= limit with G = M^{g_1} ... M^{g_k}. Every covering conjugates to
// one whose first factor is M, so the search is rooted at M. Throws
// InvalidArgument when M is normal in G (this includes M = G).
SubgroupGamma gamma_for_subgroup(const GroupTable& g, const Subgroup& m, unsigned limit,
                                 const SearchOptions& options = {});

// Smallest L >= 3 with |M|^L >= |G|; no covering by conjugates of M is
// shorter.
unsigned order_lower_bound(std::size_t group_order, std::size_t subgroup_order);

struct ClassGamma {
  Subgroup representative;
  std::optional<unsigned> k;  // nullopt: exceeded the limit
};

struct GammaResult {
  Gamma value;
  std::optional<CoveringWitness> witness;
  std::vector<ClassGamma> per_class;
};

// Every class search ran out of depth.
class SearchLimitExceeded : public Error {
 public:
  SearchLimitExceeded(const std::string& what, std::vector<ClassGamma> per_class)
      : Error(what), per_class_(std::move(per_class)) {}
  const std::vector<ClassGamma>& per_class() const noexcept { return per_class_; }

 private:
  std::vector<ClassGamma> per_class_;
};

// gamma(G), minimizing over one representative of each conjugacy class of
// non-normal maximal subgroups. If G = A^{g_1}...A^{g_k}, any maximal M
// containing A gives G = M^{g_1}...M^{g_k}, and M cannot be normal, so
// nothing is lost.
GammaResult gamma_cp_exact(const GroupTable& g, unsigned limit,
                           const SearchOptions& options = {},
                           const LatticeCaps& caps = {});

// Same, with the non-normal maximal class representatives supplied by the
// caller (for groups beyond the lattice cap).
GammaResult gamma_cp_exact(const GroupTable& g, std::span<const Subgroup> candidates,
                           unsigned limit, const SearchOptions& options = {});

// Exhaustive breadth-first search over all proper subgroups and all
// sequences of their conjugates up to `maxlen`, deduplicating exact states
// only. Meant for groups of order <= 24 or so. Throws SearchLimitExceeded if
// G is not nilpotent but nothing is found within maxlen.
GammaResult gamma_bruteforce_oracle(const GroupTable& g, unsigned maxlen);

}  // namespace conjcover

#endif  // CONJCOVER_COVERING_HPP_
