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

#include "conjcover/structure.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "conjcover/error.hpp"

namespace conjcover {

namespace {

// Smallest subgroup of `ambient` containing `elems` and normalized by it.
Subgroup normal_closure_in(const Subgroup& ambient, std::span<const Elem> elems) {
  const GroupTable& g = ambient.parent();
  Subgroup k = subgroup_closure(g, elems);
  bool changed = true;
  while (changed) {
    changed = false;
    // k.generators() grows as we join, so index rather than iterate.
    for (std::size_t i = 0; i < k.generators().size(); ++i) {
      for (Elem x : ambient.generators()) {
        const Elem c = g.conj(k.generators()[i], x);
        if (!k.contains(c)) {
          k = join(k, c);
          changed = true;
        }
      }
    }
  }
  return k;
}

// [H, N] for N normal in H: the normal closure in H of the commutators of
// generators.
Subgroup commutator_with_normal(const Subgroup& h, const Subgroup& n) {
  const GroupTable& g = h.parent();
  std::vector<Elem> comms;
  for (Elem a : h.generators())
    for (Elem b : n.generators()) comms.push_back(g.commutator(a, b));
  return normal_closure_in(h, comms);
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

CosetAction coset_action(const GroupTable& g, const Subgroup& h) {
  const CosetLabels cosets = right_cosets(h);
  const std::size_t degree = cosets.representative.size();

  auto induced = [&](Elem x) {
    std::vector<Point> images(degree);
    for (std::size_t c = 0; c < degree; ++c)
      images[c] = cosets.label[g.mul(cosets.representative[c], x)];
    return Permutation::from_images(std::move(images));
  };

  std::vector<Permutation> gens;
  for (Elem s : g.generators()) gens.push_back(induced(s));
  GroupTable table = GroupTable::generate(degree, gens, g.order());

  std::vector<Elem> gen_images;
  for (const auto& p : gens) gen_images.push_back(table.index_of(p));

  // The projection is a homomorphism, so it is determined along a
  // breadth-first walk of G by generators.
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> projection(g.order(), kUnset);
  projection[kIdentity] = kIdentity;
  std::vector<Elem> queue{kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t j = 0; j < g.generators().size(); ++j) {
      const Elem y = g.mul(x, g.generators()[j]);
      if (projection[y] != kUnset) continue;
      projection[y] = table.mul(projection[x], gen_images[j]);
      queue.push_back(y);
    }
  }
  return CosetAction{std::move(table), std::move(projection), cosets.representative};
}

CosetAction quotient(const GroupTable& g, const Subgroup& n) {
  if (!is_normal(n)) throw InvalidArgument("quotient by a subgroup that is not normal");
  return coset_action(g, n);
}

Subgroup normal_closure(const GroupTable& g, std::span<const Elem> elems) {
  return normal_closure_in(Subgroup::whole(g), elems);
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const GroupTable& g = a.parent();
  Subgroup k = Subgroup::trivial(g);
  for (Elem x : a.members())
    for (Elem y : b.members()) k = join(k, g.commutator(x, y));
  return k;
}

Subgroup center(const GroupTable& g) {
  Bitset mask(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem s : g.generators())
      central = central && g.mul(static_cast<Elem>(x), s) == g.mul(s, static_cast<Elem>(x));
    if (central) mask.set(x);
  }
  return subgroup_from_mask(g, std::move(mask));
}

std::vector<Subgroup> lower_central_series(const GroupTable& g) {
  const Subgroup whole = Subgroup::whole(g);
  std::vector<Subgroup> series{whole};
  for (;;) {
    Subgroup next = commutator_with_normal(whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> derived_series(const GroupTable& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  for (;;) {
    Subgroup next = commutator_with_normal(series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

Subgroup nilpotent_residual(const GroupTable& g) { return lower_central_series(g).back(); }

bool is_nilpotent(const GroupTable& g) { return nilpotent_residual(g).is_trivial(); }

bool is_solvable(const GroupTable& g) { return derived_series(g).back().is_trivial(); }

std::vector<Elem> element_class_representatives(const GroupTable& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(static_cast<Elem>(x));
    std::vector<Elem> stack{static_cast<Elem>(x)};
    seen[x] = true;
    while (!stack.empty()) {
      const Elem y = stack.back();
      stack.pop_back();
      for (Elem s : g.generators()) {
        const Elem z = g.conj(y, s);
        if (!seen[z]) {
          seen[z] = true;
          stack.push_back(z);
        }
      }
    }
  }
  return reps;
}

namespace {

std::vector<Subgroup> class_closures(const GroupTable& g) {
  std::vector<Subgroup> out;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (Elem x : element_class_representatives(g)) {
    const Elem one[] = {x};
    Subgroup n = normal_closure(g, one);
    if (seen.insert(n.mask()).second) out.push_back(std::move(n));
  }
  return out;
}

void sort_by_order(std::vector<Subgroup>& subs) {
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                        b.members().begin(), b.members().end());
  });
}

}  // namespace

std::vector<Subgroup> normal_subgroups(const GroupTable& g) {
  std::vector<Subgroup> subs = class_closures(g);
  std::unordered_set<Bitset, BitsetHash> seen;
  for (const auto& s : subs) seen.insert(s.mask());
  // A product of normal subgroups is their join.
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Subgroup k = join(subs[i], subs[j]);
      if (seen.insert(k.mask()).second) subs.push_back(std::move(k));
    }
  }
  sort_by_order(subs);
  return subs;
}

std::vector<Subgroup> minimal_normal_subgroups(const GroupTable& g) {
  // Every minimal normal subgroup is the normal closure of any of its
  // nontrivial elements.
  std::vector<Subgroup> closures = class_closures(g);
  sort_by_order(closures);
  std::vector<Subgroup> out;
  for (const auto& n : closures) {
    if (n.is_trivial()) continue;
    bool minimal = true;
    for (const auto& m : out) minimal = minimal && !m.is_subgroup_of(n);
    if (minimal) out.push_back(n);
  }
  return out;
}

Subgroup point_stabilizer(const GroupTable& g, Point point) {
  if (point >= g.degree())
    throw InvalidArgument("point " + std::to_string(point + 1) + " outside degree " +
                          std::to_string(g.degree()));
  Bitset mask(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element(static_cast<Elem>(x))(point) == point) mask.set(x);
  return subgroup_from_mask(g, std::move(mask));
}

Subgroup sylow_subgroup(const GroupTable& g, std::size_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  std::size_t p_part = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) p_part *= p;
  if (p_part == 1) return Subgroup::trivial(g);

  auto is_p_power = [p](std::size_t n) {
    while (n % p == 0) n /= p;
    return n == 1;
  };

  Subgroup sylow = Subgroup::trivial(g);
  for (std::size_t x = 1; x < g.order(); ++x) {
    if (g.element_order(static_cast<Elem>(x)) == p) {
      sylow = join(sylow, static_cast<Elem>(x));
      break;
    }
  }
  // While P is not Sylow, p divides [N(P) : P], and any element of N(P) - P
  // of p-power order extends P to a larger p-group.
  while (sylow.order() < p_part) {
    const Subgroup n = normalizer(g, sylow);
    bool grown = false;
    for (Elem x : n.members()) {
      if (sylow.contains(x) || !is_p_power(g.element_order(x))) continue;
      sylow = join(sylow, x);
      grown = true;
      break;
    }
    if (!grown) throw Error("Sylow growth stalled; group table is inconsistent");
  }
  return sylow;
}

bool is_qmnn(const GroupTable& g) {
  if (is_nilpotent(g)) return false;
  for (const auto& n : minimal_normal_subgroups(g))
    if (!is_nilpotent(quotient(g, n).table)) return false;
  return true;
}

StructureReport structure_report(const GroupTable& g, const StructureOptions& options) {
  std::vector<Subgroup> lcs = lower_central_series(g);
  Subgroup residual = lcs.back();
  const bool nilpotent = residual.is_trivial();
  std::vector<Subgroup> minimal = minimal_normal_subgroups(g);

  bool qmnn = !nilpotent;
  for (const auto& n : minimal) {
    if (!qmnn) break;
    qmnn = is_nilpotent(quotient(g, n).table);
  }

  std::optional<Subgroup> frattini;
  std::optional<bool> core_free;
  if (options.use_lattice) {
    const auto maximals = maximal_subgroups(g, options.caps);
    Bitset mask(g.order());
    mask.set_all();
    bool any_core_free = false;
    for (const auto& m : maximals) {
      mask &= m.subgroup.mask();
      any_core_free = any_core_free || core(m.subgroup).is_trivial();
    }
    frattini = subgroup_from_mask(g, std::move(mask));
    if (maximals.empty()) frattini = Subgroup::trivial(g);
    core_free = any_core_free;
  }

  return StructureReport{std::move(lcs),  std::move(residual), nilpotent,
                         is_solvable(g),  center(g),           std::move(frattini),
                         std::move(minimal), qmnn,             core_free};
}

}  // namespace conjcover
