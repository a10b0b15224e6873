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

#include "conjcover/subgroup.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>

#include "conjcover/error.hpp"

namespace conjcover {

namespace {

constexpr Elem kNoLabel = std::numeric_limits<Elem>::max();

std::vector<Elem> members_of(const Bitset& mask) {
  std::vector<Elem> out;
  out.reserve(mask.count());
  mask.for_each([&](std::size_t i) { out.push_back(static_cast<Elem>(i)); });
  return out;
}

}  // namespace

Subgroup subgroup_from_mask(const GroupTable& g, Bitset mask) {
  Subgroup k = Subgroup::trivial(g);
  mask.for_each([&](std::size_t i) {
    if (!k.contains(static_cast<Elem>(i))) k = join(k, static_cast<Elem>(i));
  });
  return Subgroup(g, std::move(mask), std::vector<Elem>(k.generators().begin(),
                                                         k.generators().end()));
}

Subgroup::Subgroup(const GroupTable& parent, Bitset mask, std::vector<Elem> generators)
    : parent_(&parent),
      mask_(std::move(mask)),
      members_(members_of(mask_)),
      generators_(std::move(generators)) {}

Subgroup Subgroup::trivial(const GroupTable& parent) {
  Bitset mask(parent.order());
  mask.set(kIdentity);
  return Subgroup(parent, std::move(mask), {});
}

Subgroup Subgroup::whole(const GroupTable& parent) {
  Bitset mask(parent.order());
  mask.set_all();
  return Subgroup(parent, std::move(mask),
                  std::vector<Elem>(parent.generators().begin(), parent.generators().end()));
}

Subgroup join(const Subgroup& h, Elem x) {
  if (h.contains(x)) return h;
  const GroupTable& g = h.parent();
  std::vector<Elem> gens(h.generators().begin(), h.generators().end());
  gens.push_back(x);

  // <H, x> is a union of right cosets Hy; right multiplication by a
  // generator permutes them, so a breadth-first walk over coset
  // representatives reaches every coset.
  Bitset mask = h.mask();
  std::vector<Elem> reps{kIdentity};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Elem s : gens) {
      const Elem y = g.mul(reps[i], s);
      if (mask.test(y)) continue;
      for (Elem m : h.members()) mask.set(g.mul(m, y));
      reps.push_back(y);
    }
  }
  return Subgroup(g, std::move(mask), std::move(gens));
}

Subgroup join(const Subgroup& h, const Subgroup& k) {
  Subgroup out = h;
  for (Elem x : k.generators()) out = join(out, x);
  return out;
}

Subgroup subgroup_closure(const GroupTable& g, std::span<const Elem> gens) {
  Subgroup h = Subgroup::trivial(g);
  for (Elem x : gens) {
    if (x >= g.order()) throw InvalidArgument("element index out of range");
    h = join(h, x);
  }
  return h;
}

Subgroup intersection(const Subgroup& h, const Subgroup& k) {
  return subgroup_from_mask(h.parent(), h.mask() & k.mask());
}

Subgroup conjugate(const Subgroup& h, Elem x) {
  const GroupTable& g = h.parent();
  Bitset mask(g.order());
  for (Elem m : h.members()) mask.set(g.conj(m, x));
  std::vector<Elem> gens;
  for (Elem s : h.generators()) gens.push_back(g.conj(s, x));
  return Subgroup(g, std::move(mask), std::move(gens));
}

Subgroup normalizer(const GroupTable& g, const Subgroup& h) {
  Bitset mask(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool fixes = true;
    for (Elem s : h.generators()) {
      if (!h.contains(g.conj(s, static_cast<Elem>(x)))) {
        fixes = false;
        break;
      }
    }
    if (fixes) mask.set(x);
  }
  return subgroup_from_mask(g, std::move(mask));
}

bool is_normal(const Subgroup& h) {
  const GroupTable& g = h.parent();
  for (Elem s : h.generators())
    for (Elem x : g.generators())
      if (!h.contains(g.conj(s, x))) return false;
  return true;
}

std::vector<ConjugateSubgroup> conjugates_with_conjugators(const Subgroup& h) {
  const GroupTable& g = h.parent();
  // H^x = H^y iff Nx = Ny for N the normalizer, so the lowest-index element
  // of each right coset of N is the lowest conjugator of its conjugate.
  const Subgroup n = normalizer(g, h);
  const CosetLabels cosets = right_cosets(n);
  std::vector<ConjugateSubgroup> out;
  out.reserve(cosets.representative.size());
  for (Elem x : cosets.representative) out.push_back({conjugate(h, x), x});
  return out;
}

std::vector<Subgroup> conjugates_of(const GroupTable& g, const Subgroup& h) {
  if (&h.parent() != &g) throw InvalidArgument("subgroup belongs to a different group");
  std::vector<Subgroup> out;
  for (auto& c : conjugates_with_conjugators(h)) out.push_back(std::move(c.subgroup));
  return out;
}

Subgroup core(const Subgroup& h) {
  Bitset mask = h.mask();
  for (const auto& c : conjugates_with_conjugators(h)) mask &= c.subgroup.mask();
  return subgroup_from_mask(h.parent(), std::move(mask));
}

CosetLabels right_cosets(const Subgroup& h) {
  const GroupTable& g = h.parent();
  CosetLabels out;
  out.label.assign(g.order(), kNoLabel);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (out.label[x] != kNoLabel) continue;
    const Elem id = static_cast<Elem>(out.representative.size());
    out.representative.push_back(static_cast<Elem>(x));
    for (Elem m : h.members()) out.label[g.mul(m, static_cast<Elem>(x))] = id;
  }
  return out;
}

CosetLabels left_cosets(const Subgroup& h) {
  const GroupTable& g = h.parent();
  CosetLabels out;
  out.label.assign(g.order(), kNoLabel);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (out.label[x] != kNoLabel) continue;
    const Elem id = static_cast<Elem>(out.representative.size());
    out.representative.push_back(static_cast<Elem>(x));
    for (Elem m : h.members()) out.label[g.mul(static_cast<Elem>(x), m)] = id;
  }
  return out;
}

CosetLabels double_cosets(const Subgroup& h) {
  const GroupTable& g = h.parent();
  const CosetLabels right = right_cosets(h);
  const std::size_t n_cosets = right.representative.size();

  // H acts on its right cosets by right multiplication; the orbits are the
  // double cosets. Coset numbering follows lowest element, so scanning
  // cosets in order numbers orbits by lowest element too.
  std::vector<Elem> orbit(n_cosets, kNoLabel);
  CosetLabels out;
  for (std::size_t c = 0; c < n_cosets; ++c) {
    if (orbit[c] != kNoLabel) continue;
    const Elem id = static_cast<Elem>(out.representative.size());
    out.representative.push_back(right.representative[c]);
    std::vector<std::size_t> stack{c};
    orbit[c] = id;
    while (!stack.empty()) {
      const std::size_t d = stack.back();
      stack.pop_back();
      for (Elem s : h.generators()) {
        const Elem e = right.label[g.mul(right.representative[d], s)];
        if (orbit[e] == kNoLabel) {
          orbit[e] = id;
          stack.push_back(e);
        }
      }
    }
  }
  out.label.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) out.label[x] = orbit[right.label[x]];
  return out;
}

std::vector<Subgroup> all_subgroups(const GroupTable& g, const LatticeCaps& caps) {
  if (g.order() > caps.max_group_order)
    throw CapExceeded("subgroup lattice of a group of order " + std::to_string(g.order()) +
                      " exceeds the lattice cap " + std::to_string(caps.max_group_order) +
                      "; use action-provided subgroups instead");

  std::vector<Subgroup> subs;
  std::unordered_set<Bitset, BitsetHash> seen;
  auto add = [&](Subgroup s) {
    if (!seen.insert(s.mask()).second) return;
    if (subs.size() >= caps.max_subgroups)
      throw CapExceeded("subgroup lattice has more than " +
                        std::to_string(caps.max_subgroups) +
                        " subgroups; use action-provided subgroups instead");
    subs.push_back(std::move(s));
  };

  add(Subgroup::trivial(g));
  std::vector<Elem> cyclic_gens;
  for (std::size_t x = 1; x < g.order(); ++x) {
    Subgroup c = join(Subgroup::trivial(g), static_cast<Elem>(x));
    if (seen.contains(c.mask())) continue;
    cyclic_gens.push_back(static_cast<Elem>(x));
    add(std::move(c));
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Subgroup h = subs[i];
    for (Elem c : cyclic_gens) {
      if (h.contains(c)) continue;
      add(join(h, c));
    }
  }

  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                        b.members().begin(), b.members().end());
  });
  return subs;
}

std::vector<MaximalSubgroup> maximal_subgroups(std::span<const Subgroup> lattice) {
  std::vector<MaximalSubgroup> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Subgroup& h = lattice[i];
    if (!h.is_proper()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < lattice.size() && maximal; ++j) {
      const Subgroup& k = lattice[j];
      if (k.is_proper() && k.order() > h.order() && h.is_subgroup_of(k)) maximal = false;
    }
    if (maximal) out.push_back({h, is_normal(h)});
  }
  return out;
}

std::vector<MaximalSubgroup> maximal_subgroups(const GroupTable& g, const LatticeCaps& caps) {
  const auto lattice = all_subgroups(g, caps);
  return maximal_subgroups(lattice);
}

bool is_maximal(const Subgroup& h) {
  if (!h.is_proper()) return false;
  const CosetLabels dc = double_cosets(h);
  for (std::size_t i = 1; i < dc.representative.size(); ++i)
    if (!join(h, dc.representative[i]).is_whole()) return false;
  return true;
}

std::vector<Subgroup> conjugacy_class_representatives(std::span<const Subgroup> subgroups) {
  std::vector<Subgroup> reps;
  std::unordered_set<Bitset, BitsetHash> covered;
  for (const auto& h : subgroups) {
    if (covered.contains(h.mask())) continue;
    reps.push_back(h);
    for (const auto& c : conjugates_with_conjugators(h)) covered.insert(c.subgroup.mask());
  }
  return reps;
}

}  // namespace conjcover
