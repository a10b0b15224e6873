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

#ifndef CONJCOVER_CONSTRUCTIONS_HPP_
#define CONJCOVER_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "conjcover/covering.hpp"
#include "conjcover/group_table.hpp"
#include "conjcover/subgroup.hpp"

namespace conjcover {

using GroupPtr = std::shared_ptr<const GroupTable>;

// Standard permutation groups. Degrees below 1 are bumped to 1 so that the
// trivial cases still have a table.
GroupTable symmetric(std::size_t n, std::size_t cap = default_order_cap());
GroupTable alternating(std::size_t n, std::size_t cap = default_order_cap());
GroupTable cyclic(std::size_t n, std::size_t cap = default_order_cap());
GroupTable quaternion8();
// M11 on 11 points, generated by (1 2 ... 11) and (3 7 11 8)(4 10 5 6).
GroupTable mathieu11(std::size_t cap = default_order_cap());
// A6 acting on the 10 cosets of a Sylow 3-normalizer (a 2-transitive
// action different from the natural one).
GroupTable alternating6_degree10();

// D_2n on n points: generator 0 is the rotation v = (1 2 ... n), generator 1
// the reflection b fixing 1. Throws InvalidArgument for n < 3.
GroupTable dihedral(std::size_t n);

// The covering of D_2p by the reflection subgroup <b> conjugated by
// v, v^2, v^4, ..., v^(2^(m-1)) and then e, with m = ceil(log2 p).
struct DihedralCovering {
  GroupPtr group;
  CoveringWitness witness;
  // Every rotation lies in the product.
  bool rotations_covered;
  // <v><b> = G, which with the previous line forces the product to be G.
  bool rotations_times_reflection_is_group;
  // v^(-2x) lies in the product for every x in X_m.
  bool alternating_sums_covered;
};

// Throws InvalidArgument unless p is an odd prime.
DihedralCovering dihedral_factorization(unsigned p);

// The set X_n of alternating sums 2^a0 - 2^a1 + 2^a2 - ... over strictly
// increasing exponents in [0, n).
struct XSet {
  unsigned n;
  std::vector<std::int64_t> values;  // sorted
};

// Builds X_n from X_(n-1) by adjoining the top exponent, then checks it
// against the interval [-2^(n-1)+1, 2^(n-1)] minus 0 and throws Error on a
// mismatch. n must be in [1, 24].
XSet x_set(unsigned n);

// Whether {1..k} lies in X_n mod (k+1). Requires 1 <= k < 2^n.
bool x_set_mod_coverage(unsigned n, std::uint64_t k);

// G = V x| K with V elementary abelian of order p^n and K acting
// irreducibly.
struct SolvableFrame {
  GroupPtr group;
  unsigned p;
  unsigned n;
  Subgroup v;
  Subgroup k;
  std::vector<Elem> basis;
};

// Throws InvalidArgument describing the first violated frame invariant.
void validate_frame(const SolvableFrame& frame);

// F_p acted on by translations and by the order-k subgroup of F_p^*, as a
// permutation group on the p field elements. Requires p an odd prime and
// k > 1 dividing p - 1.
SolvableFrame agl1(unsigned p, unsigned k);

// Returns t in V with v in K K^t: picks the lowest-index nontrivial x in
// Z(K), solves x^-1 w x w^-1 = v for w in V by scanning, and returns w^-1.
Elem central_commutator_solve(const SolvableFrame& frame, Elem v);

// The covering K K^{t_11} K K^{t_12} ... with 2^j v_i in K K^{t_ij}, of
// length 2 n ceil(log2 p).
CoveringWitness solvable_covering(const SolvableFrame& frame);

struct SolvableBounds {
  unsigned lower;  // ceil(n log2 p / log2 k + 1)
  double upper;    // 2 n (log2 p + 1)
};

// Throws InvalidArgument for k < 2.
SolvableBounds solvable_bounds(unsigned p, unsigned n, unsigned k);

// Smallest prime p with 2^(n-2) < p < 2^(n-1); n in [3, 62].
std::uint64_t bertrand_prime(unsigned n);

// ceil(log2 x) for x >= 1.
unsigned ceil_log2(std::uint64_t x);
bool is_prime(std::uint64_t n);

// Embeds a permutation of `block_degree` points into block `block` of
// `copies` consecutive blocks.
Permutation embed_in_block(const Permutation& p, std::size_t block, std::size_t copies);

// base wr top acting imprimitively on base.degree() * copies points; block i
// is points [i * d, (i+1) * d). Throws InvalidArgument unless top has degree
// `copies`, and CapExceeded if |base|^copies |top| is over `cap`.
GroupTable wreath_product(const GroupTable& base, std::size_t copies, const GroupTable& top,
                          std::size_t cap = default_order_cap());

}  // namespace conjcover

#endif  // CONJCOVER_CONSTRUCTIONS_HPP_
