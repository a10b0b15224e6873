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

#include "conjcover/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "conjcover/error.hpp"
#include "conjcover/structure.hpp"

namespace conjcover {

namespace {

Permutation cycle_on(std::size_t degree, const std::vector<Point>& points) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < points.size(); ++i)
    images[points[i]] = points[(i + 1) % points.size()];
  return Permutation::from_images(std::move(images));
}

Permutation full_cycle(std::size_t n) {
  std::vector<Point> pts(n);
  std::iota(pts.begin(), pts.end(), Point{0});
  return cycle_on(n, pts);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned ceil_log2(std::uint64_t x) {
  unsigned k = 0;
  while ((std::uint64_t{1} << k) < x) ++k;
  return k;
}

GroupTable symmetric(std::size_t n, std::size_t cap) {
  const std::size_t degree = std::max<std::size_t>(n, 1);
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(full_cycle(n));
    gens.push_back(cycle_on(n, {0, 1}));
  }
  return GroupTable::generate(degree, gens, cap);
}

GroupTable alternating(std::size_t n, std::size_t cap) {
  const std::size_t degree = std::max<std::size_t>(n, 1);
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(cycle_on(n, {0, 1, static_cast<Point>(i)}));
  return GroupTable::generate(degree, gens, cap);
}

GroupTable cyclic(std::size_t n, std::size_t cap) {
  const std::size_t degree = std::max<std::size_t>(n, 1);
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(full_cycle(n));
  return GroupTable::generate(degree, gens, cap);
}

GroupTable quaternion8() {
  const std::vector<Permutation> gens{parse_cycles("(1 2 3 4)(5 6 7 8)", 8),
                                      parse_cycles("(1 5 3 7)(2 8 4 6)", 8)};
  return GroupTable::generate(8, gens);
}

GroupTable mathieu11(std::size_t cap) {
  const std::vector<Permutation> gens{parse_cycles("(1 2 3 4 5 6 7 8 9 10 11)", 11),
                                      parse_cycles("(3 7 11 8)(4 10 5 6)", 11)};
  return GroupTable::generate(11, gens, cap);
}

GroupTable alternating6_degree10() {
  const GroupTable a6 = alternating(6);
  const Subgroup p = sylow_subgroup(a6, 3);
  return coset_action(a6, normalizer(a6, p)).table;
}

GroupTable dihedral(std::size_t n) {
  if (n < 3) throw InvalidArgument("dihedral group needs n >= 3, got " + std::to_string(n));
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((n - i) % n);
  const std::vector<Permutation> gens{full_cycle(n), Permutation::from_images(images)};
  return GroupTable::generate(n, gens);
}

DihedralCovering dihedral_factorization(unsigned p) {
  if (p < 3 || !is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not an odd prime");
  auto group = std::make_shared<const GroupTable>(dihedral(p));
  const GroupTable& g = *group;
  const Elem v = g.generators()[0];
  const Elem b = g.generators()[1];
  const Elem one[] = {b};
  const Subgroup reflection = subgroup_closure(g, one);

  const unsigned m = ceil_log2(p);
  std::vector<Elem> conjugators;
  for (unsigned j = 0; j < m; ++j) conjugators.push_back(g.power(v, std::int64_t{1} << j));
  conjugators.push_back(kIdentity);

  CoveringWitness witness{reflection, conjugators};
  const SubsetMask product = witness_product_bruteforce(witness);

  const Elem rot[] = {v};
  const Subgroup rotations = subgroup_closure(g, rot);
  bool rotations_covered = rotations.mask().is_subset_of(product.bits());
  const bool closes = set_product(SubsetMask::of(rotations), SubsetMask::of(reflection)).is_full();

  bool sums_covered = true;
  for (std::int64_t x : x_set(m).values)
    sums_covered = sums_covered && product.contains(g.power(v, -2 * x));

  return DihedralCovering{std::move(group), std::move(witness), rotations_covered, closes,
                          sums_covered};
}

XSet x_set(unsigned n) {
  if (n < 1 || n > 24) throw InvalidArgument("x_set needs 1 <= n <= 24");
  // Sums over tuples with top exponent < e, split by tuple length parity.
  // Adjoining exponent e as the new last term adds +2^e after an even-length
  // tuple and -2^e after an odd-length one.
  std::set<std::int64_t> even{0};
  std::set<std::int64_t> odd;
  for (unsigned e = 0; e < n; ++e) {
    const std::int64_t term = std::int64_t{1} << e;
    std::set<std::int64_t> new_odd = odd;
    std::set<std::int64_t> new_even = even;
    for (std::int64_t s : even) new_odd.insert(s + term);
    for (std::int64_t s : odd) new_even.insert(s - term);
    even = std::move(new_even);
    odd = std::move(new_odd);
  }
  // Only the empty tuple sums to 0: the smallest term fixes the lowest set
  // bit of any other sum.
  std::set<std::int64_t> all = std::move(odd);
  all.insert(even.begin(), even.end());
  all.erase(0);

  XSet out{n, std::vector<std::int64_t>(all.begin(), all.end())};
  std::vector<std::int64_t> interval;
  const std::int64_t half = std::int64_t{1} << (n - 1);
  for (std::int64_t x = -half + 1; x <= half; ++x)
    if (x != 0) interval.push_back(x);
  if (out.values != interval)
    throw Error("X_" + std::to_string(n) + " differs from its closed form");
  return out;
}

bool x_set_mod_coverage(unsigned n, std::uint64_t k) {
  if (n < 1 || n > 24 || k < 1 || k >= (std::uint64_t{1} << n))
    throw InvalidArgument("x_set_mod_coverage needs 1 <= k < 2^n");
  const auto xs = x_set(n);
  const std::int64_t mod = static_cast<std::int64_t>(k) + 1;
  std::vector<bool> hit(static_cast<std::size_t>(mod), false);
  for (std::int64_t x : xs.values) hit[static_cast<std::size_t>(((x % mod) + mod) % mod)] = true;
  for (std::int64_t r = 1; r <= static_cast<std::int64_t>(k); ++r)
    if (!hit[static_cast<std::size_t>(r)]) return false;
  return true;
}

void validate_frame(const SolvableFrame& f) {
  const GroupTable& g = *f.group;
  std::size_t pn = 1;
  for (unsigned i = 0; i < f.n; ++i) pn *= f.p;
  if (f.v.order() != pn) throw InvalidArgument("|V| is not p^n");
  if (!is_normal(f.v)) throw InvalidArgument("V is not normal");
  if (!intersection(f.v, f.k).is_trivial()) throw InvalidArgument("V and K intersect");
  if (f.v.order() * f.k.order() != g.order()) throw InvalidArgument("|V||K| != |G|");
  if (f.basis.size() != f.n) throw InvalidArgument("basis has the wrong size");
  for (Elem x : f.v.members()) {
    if (x != kIdentity && g.element_order(x) != f.p)
      throw InvalidArgument("V is not elementary abelian");
    for (Elem y : f.v.generators())
      if (g.mul(x, y) != g.mul(y, x)) throw InvalidArgument("V is not abelian");
  }
  // Irreducible: the K-invariant subgroup generated by any nontrivial v is V.
  for (Elem x : f.v.members()) {
    if (x == kIdentity) continue;
    Subgroup w = subgroup_closure(g, std::span<const Elem>(&x, 1));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < w.generators().size(); ++i) {
        for (Elem s : f.k.generators()) {
          const Elem c = g.conj(w.generators()[i], s);
          if (!w.contains(c)) {
            w = join(w, c);
            changed = true;
          }
        }
      }
    }
    if (!(w == f.v)) throw InvalidArgument("K does not act irreducibly on V");
  }
}

SolvableFrame agl1(unsigned p, unsigned k) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
  if (k < 2 || (p - 1) % k != 0)
    throw InvalidArgument("k = " + std::to_string(k) + " must be > 1 and divide p - 1");

  unsigned root = 0;
  for (unsigned a = 2; a < p && root == 0; ++a) {
    unsigned order = 1;
    for (std::uint64_t x = a; x != 1; x = x * a % p) ++order;
    if (order == p - 1) root = a;
  }
  if (p == 3) root = 2;
  std::uint64_t multiplier = 1;
  for (unsigned i = 0; i < (p - 1) / k; ++i) multiplier = multiplier * root % p;

  std::vector<Point> translate(p), scale(p);
  for (unsigned x = 0; x < p; ++x) {
    translate[x] = (x + 1) % p;
    scale[x] = static_cast<Point>(x * multiplier % p);
  }
  const std::vector<Permutation> gens{Permutation::from_images(translate),
                                      Permutation::from_images(scale)};
  auto group = std::make_shared<const GroupTable>(GroupTable::generate(p, gens));
  const GroupTable& g = *group;
  const Elem t[] = {g.index_of(gens[0])};
  const Elem s[] = {g.index_of(gens[1])};
  Subgroup v = subgroup_closure(g, t);
  Subgroup kk = subgroup_closure(g, s);
  Elem basis = v.members()[1];

  SolvableFrame frame{std::move(group), p, 1, std::move(v), std::move(kk), {basis}};
  validate_frame(frame);
  return frame;
}

Elem central_commutator_solve(const SolvableFrame& frame, Elem v) {
  const GroupTable& g = *frame.group;
  if (!frame.v.contains(v)) throw InvalidArgument("element is not in V");

  std::optional<Elem> x;
  for (Elem c : frame.k.members()) {
    if (c == kIdentity) continue;
    bool central = true;
    for (Elem s : frame.k.generators()) central = central && g.mul(c, s) == g.mul(s, c);
    if (central) {
      x = c;
      break;
    }
  }
  if (!x) throw Error("K has trivial center");

  for (Elem w : frame.v.members()) {
    if (g.mul(g.mul(g.inv(*x), w), g.mul(*x, g.inv(w))) != v) continue;
    const Elem t = g.inv(w);
    const SubsetMask kkt =
        set_product(SubsetMask::of(frame.k), SubsetMask::of(conjugate(frame.k, t)));
    if (!kkt.contains(v)) throw Error("solved commutator is not in K K^t");
    return t;
  }
  throw Error("no w in V with [x, w] = v; frame hypotheses are violated");
}

CoveringWitness solvable_covering(const SolvableFrame& frame) {
  const GroupTable& g = *frame.group;
  const unsigned m = ceil_log2(frame.p);
  std::vector<Elem> conjugators;
  for (Elem vi : frame.basis) {
    for (unsigned j = 0; j < m; ++j) {
      const Elem t = central_commutator_solve(frame, g.power(vi, std::int64_t{1} << j));
      conjugators.push_back(kIdentity);
      conjugators.push_back(t);
    }
  }
  return CoveringWitness{frame.k, std::move(conjugators)};
}

SolvableBounds solvable_bounds(unsigned p, unsigned n, unsigned k) {
  if (k < 2) throw InvalidArgument("solvable_bounds needs k >= 2");
  if (p < 2 || n < 1) throw InvalidArgument("solvable_bounds needs p >= 2 and n >= 1");
  // Smallest e with k^e >= p^n, exactly while it fits in 128 bits.
  using u128 = unsigned __int128;
  constexpr u128 kLimit = u128{1} << 120;
  u128 target = 1;
  bool exact = true;
  for (unsigned i = 0; i < n && exact; ++i) {
    target *= p;
    exact = target < kLimit;
  }
  unsigned e = 0;
  if (exact) {
    for (u128 acc = 1; acc < target; acc *= k) ++e;
  } else {
    e = static_cast<unsigned>(std::ceil(n * std::log2(p) / std::log2(k)));
  }
  return SolvableBounds{e + 1, 2.0 * n * (std::log2(static_cast<double>(p)) + 1.0)};
}

std::uint64_t bertrand_prime(unsigned n) {
  if (n < 3 || n > 62) throw InvalidArgument("bertrand_prime needs 3 <= n <= 62");
  const std::uint64_t lo = std::uint64_t{1} << (n - 2);
  const std::uint64_t hi = std::uint64_t{1} << (n - 1);
  for (std::uint64_t q = lo + 1; q < hi; ++q)
    if (is_prime(q)) return q;
  throw Error("no prime in the Bertrand interval");
}

Permutation embed_in_block(const Permutation& p, std::size_t block, std::size_t copies) {
  const std::size_t d = p.degree();
  std::vector<Point> images(d * copies);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < d; ++i)
    images[block * d + i] = static_cast<Point>(block * d + p(static_cast<Point>(i)));
  return Permutation::from_images(std::move(images));
}

GroupTable wreath_product(const GroupTable& base, std::size_t copies, const GroupTable& top,
                          std::size_t cap) {
  if (copies == 0) throw InvalidArgument("wreath product needs at least one copy");
  if (top.degree() != copies)
    throw InvalidArgument("top group has degree " + std::to_string(top.degree()) +
                          ", expected " + std::to_string(copies));
  std::size_t order = top.order();
  for (std::size_t i = 0; i < copies; ++i) {
    if (order > cap / base.order())
      throw CapExceeded("wreath product order exceeds the cap " + std::to_string(cap));
    order *= base.order();
  }
  if (order > cap) throw CapExceeded("wreath product order exceeds the cap " + std::to_string(cap));

  const std::size_t d = base.degree();
  std::vector<Permutation> gens;
  for (std::size_t block = 0; block < copies; ++block)
    for (Elem s : base.generators()) gens.push_back(embed_in_block(base.element(s), block, copies));
  for (Elem s : top.generators()) {
    const Permutation& t = top.element(s);
    std::vector<Point> images(d * copies);
    for (std::size_t block = 0; block < copies; ++block)
      for (std::size_t i = 0; i < d; ++i)
        images[block * d + i] = static_cast<Point>(t(static_cast<Point>(block)) * d + i);
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return GroupTable::generate(d * copies, gens, cap);
}

}  // namespace conjcover
