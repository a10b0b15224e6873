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

#ifndef CONJCOVER_STRUCTURE_HPP_
#define CONJCOVER_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "conjcover/group_table.hpp"
#include "conjcover/subgroup.hpp"

namespace conjcover {

// G acting on the right cosets of H by right multiplication.
struct CosetAction {
  GroupTable table;
  // projection[g] is the index in `table` of the permutation induced by g.
  std::vector<Elem> projection;
  // Point i of the action is the right coset H * coset_representatives[i].
  std::vector<Elem> coset_representatives;
};

CosetAction coset_action(const GroupTable& g, const Subgroup& h);

// G/N as a permutation group on the right cosets of N. Throws
// InvalidArgument unless N is normal in G.
CosetAction quotient(const GroupTable& g, const Subgroup& n);

// Smallest normal subgroup of G containing `elems`.
Subgroup normal_closure(const GroupTable& g, std::span<const Elem> elems);

// [A, B] = <[a, b] : a in A, b in B>.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

Subgroup center(const GroupTable& g);

// G = g_1 > g_2 > ... with g_{i+1} = [G, g_i], up to and including the first
// repeated term.
std::vector<Subgroup> lower_central_series(const GroupTable& g);
std::vector<Subgroup> derived_series(const GroupTable& g);

// Last term of the lower central series: the smallest normal subgroup with
// nilpotent quotient.
Subgroup nilpotent_residual(const GroupTable& g);
bool is_nilpotent(const GroupTable& g);
bool is_solvable(const GroupTable& g);

// Representatives (lowest index) of the conjugacy classes of elements.
std::vector<Elem> element_class_representatives(const GroupTable& g);

// Every normal subgroup, sorted by order: normal closures of single
// classes, then closed under products.
std::vector<Subgroup> normal_subgroups(const GroupTable& g);

// The minimal elements among the nontrivial normal subgroups.
std::vector<Subgroup> minimal_normal_subgroups(const GroupTable& g);

// {g : g fixes point}, read directly off the enumerated elements.
Subgroup point_stabilizer(const GroupTable& g, Point point);

// A Sylow p-subgroup: seeded with the lowest-index element of order p and
// grown inside its normalizer until it reaches the full p-part of |G|.
// Returns the trivial subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const GroupTable& g, std::size_t p);

struct StructureOptions {
  // Compute the lattice-dependent fields (Frattini subgroup, core-free
  // maximal subgroups).
  bool use_lattice = true;
  LatticeCaps caps = {};
};

struct StructureReport {
  std::vector<Subgroup> lower_central_series;
  Subgroup nilpotent_residual;
  bool is_nilpotent;
  bool is_solvable;
  Subgroup center;
  std::optional<Subgroup> frattini;
  std::vector<Subgroup> minimal_normals;
  bool is_qmnn;
  // Some maximal subgroup has trivial core, i.e. G has a faithful primitive
  // action. Only set when the lattice is used.
  std::optional<bool> has_core_free_maximal;
};

// Throws CapExceeded if use_lattice is set and the lattice is too large.
StructureReport structure_report(const GroupTable& g, const StructureOptions& options = {});

// Non-nilpotent with every proper quotient nilpotent. Checks the quotient by
// each minimal normal subgroup; nilpotency passes to further quotients.
bool is_qmnn(const GroupTable& g);

}  // namespace conjcover

#endif  // CONJCOVER_STRUCTURE_HPP_
