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

#ifndef CONJCOVER_GROUP_TABLE_HPP_
#define CONJCOVER_GROUP_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "conjcover/permutation.hpp"

namespace conjcover {

// Index of an element inside a GroupTable.
using Elem = std::uint32_t;

inline constexpr Elem kIdentity = 0;

// Largest group the engine enumerates unless overridden; see
// default_order_cap().
inline constexpr std::size_t kDefaultOrderCap = 10000;

// Groups up to this order get a precomputed multiplication table.
inline constexpr std::size_t kCayleyTableLimit = 2048;

// kDefaultOrderCap, or the value of CONJCOVER_MAX_ORDER when set.
std::size_t default_order_cap();

// A finite permutation group with every element enumerated and indexed.
//
// Element 0 is the identity; the rest appear in breadth-first discovery
// order from the generators (generator index breaks ties). Tables are
// immutable once built. Subgroup, SubsetMask and friends hold a pointer to
// their table, so a table must outlive everything built on it.
class GroupTable {
 public:
  // Closes `gens` (all of degree `degree`) under composition. Throws
  // CapExceeded when the closure has more than `cap` elements and
  // InvalidArgument on a degree mismatch.
  static GroupTable generate(std::size_t degree, std::span<const Permutation> gens,
                             std::size_t cap = default_order_cap());

  GroupTable(GroupTable&&) = default;
  GroupTable& operator=(GroupTable&&) = default;
  GroupTable(const GroupTable&) = delete;
  GroupTable& operator=(const GroupTable&) = delete;

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }

  const Permutation& element(Elem i) const { return elements_[i]; }
  std::span<const Permutation> elements() const noexcept { return elements_; }

  // Indices of the defining generators (identity and repeated generators
  // are dropped).
  std::span<const Elem> generators() const noexcept { return generators_; }

  std::optional<Elem> find(const Permutation& p) const;
  // Like find() but throws InvalidArgument when p is not in the group.
  Elem index_of(const Permutation& p) const;

  // a * b, applying a first.
  Elem mul(Elem a, Elem b) const {
    if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(a) * order() + b];
    return mul_slow(a, b);
  }
  Elem inv(Elem a) const { return inverse_[a]; }
  // h^g = g^-1 h g.
  Elem conj(Elem h, Elem g) const { return mul(mul(inv(g), h), g); }
  // [a, b] = a^-1 b^-1 a b.
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem power(Elem a, std::int64_t e) const;
  std::size_t element_order(Elem a) const;

  // Index map g -> g * x for every element g.
  std::vector<Elem> right_translation(Elem x) const;
  // Index map g -> x * g for every element g.
  std::vector<Elem> left_translation(Elem x) const;

  bool has_cayley_table() const noexcept { return !cayley_.empty(); }

 private:
  GroupTable() = default;
  Elem mul_slow(Elem a, Elem b) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Elem, PermutationHash> index_;
  std::vector<Elem> generators_;
  std::vector<Elem> inverse_;
  std::vector<Elem> cayley_;
};

// Free-function spelling of GroupTable::generate.
inline GroupTable generate_group(std::size_t degree, std::span<const Permutation> gens,
                                 std::size_t cap = default_order_cap()) {
  return GroupTable::generate(degree, gens, cap);
}

}  // namespace conjcover

#endif  // CONJCOVER_GROUP_TABLE_HPP_
