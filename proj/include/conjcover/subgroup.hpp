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

#ifndef CONJCOVER_SUBGROUP_HPP_
#define CONJCOVER_SUBGROUP_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "conjcover/bitset.hpp"
#include "conjcover/group_table.hpp"

namespace conjcover {

// A subgroup of a GroupTable, stored both as a sorted index list and as a
// membership mask over the parent's elements.
class Subgroup {
 public:
  // `mask` must describe a subgroup of `parent`; this is not re-checked.
  Subgroup(const GroupTable& parent, Bitset mask, std::vector<Elem> generators);

  // The trivial subgroup and the whole group.
  static Subgroup trivial(const GroupTable& parent);
  static Subgroup whole(const GroupTable& parent);

  const GroupTable& parent() const noexcept { return *parent_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const noexcept { return parent_->order() / members_.size(); }
  std::span<const Elem> members() const noexcept { return members_; }
  const Bitset& mask() const noexcept { return mask_; }
  std::span<const Elem> generators() const noexcept { return generators_; }

  bool contains(Elem g) const { return mask_.test(g); }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_->order(); }
  bool is_proper() const noexcept { return !is_whole(); }
  bool is_subgroup_of(const Subgroup& other) const { return mask_.is_subset_of(other.mask_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.mask_ == b.mask_;
  }

 private:
  const GroupTable* parent_;
  Bitset mask_;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
};

// The subgroup with the given member mask; `mask` must be closed. A small
// generating set is chosen greedily in index order.
Subgroup subgroup_from_mask(const GroupTable& g, Bitset mask);

// Smallest subgroup containing `gens`.
Subgroup subgroup_closure(const GroupTable& g, std::span<const Elem> gens);

// <H, x>, extending H coset by coset.
Subgroup join(const Subgroup& h, Elem x);
// <H, K>.
Subgroup join(const Subgroup& h, const Subgroup& k);

Subgroup intersection(const Subgroup& h, const Subgroup& k);

// H^x = x^-1 H x.
Subgroup conjugate(const Subgroup& h, Elem x);

// A conjugate H^x together with the lowest-index x that produces it.
struct ConjugateSubgroup {
  Subgroup subgroup;
  Elem conjugator;
};

// The distinct conjugates of H, ordered by their lowest conjugating
// element; H itself comes first with conjugator kIdentity.
std::vector<ConjugateSubgroup> conjugates_with_conjugators(const Subgroup& h);
std::vector<Subgroup> conjugates_of(const GroupTable& g, const Subgroup& h);

// {x in G : H^x = H}.
Subgroup normalizer(const GroupTable& g, const Subgroup& h);
bool is_normal(const Subgroup& h);
// Largest normal subgroup of G inside H.
Subgroup core(const Subgroup& h);

// Coset labels: label[g] is the index of the coset containing g; cosets are
// numbered in order of their lowest-index element, so the subgroup itself is
// coset 0.
struct CosetLabels {
  std::vector<Elem> label;
  std::vector<Elem> representative;  // lowest-index element of each coset
};
// Right cosets Hg.
CosetLabels right_cosets(const Subgroup& h);
// Left cosets gH.
CosetLabels left_cosets(const Subgroup& h);
// Double cosets HgH, numbered by lowest-index element (HeH = H is 0).
CosetLabels double_cosets(const Subgroup& h);

struct LatticeCaps {
  std::size_t max_group_order = 2000;
  std::size_t max_subgroups = 20000;
};

// Every subgroup of G exactly once, sorted by order and then by member list.
// Seeds with the cyclic subgroups and closes under joins with cyclic
// generators until nothing new appears. Throws CapExceeded when |G| or the
// subgroup count passes the caps.
std::vector<Subgroup> all_subgroups(const GroupTable& g, const LatticeCaps& caps = {});

struct MaximalSubgroup {
  Subgroup subgroup;
  bool is_normal;
};

// The maximal proper subgroups of G, read off the lattice.
std::vector<MaximalSubgroup> maximal_subgroups(const GroupTable& g,
                                               const LatticeCaps& caps = {});
// Same, filtering an already computed lattice.
std::vector<MaximalSubgroup> maximal_subgroups(std::span<const Subgroup> lattice);

// Maximality test without a lattice: <H, x> = G for one x per double coset
// HxH outside H.
bool is_maximal(const Subgroup& h);

// One representative per conjugacy class, keeping the first member of each
// class in input order.
std::vector<Subgroup> conjugacy_class_representatives(std::span<const Subgroup> subgroups);

}  // namespace conjcover

#endif  // CONJCOVER_SUBGROUP_HPP_
