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

#include "conjcover/covering.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "conjcover/structure.hpp"

namespace conjcover {

SubsetMask::SubsetMask(const GroupTable& parent, Bitset bits)
    : parent_(&parent), bits_(std::move(bits)), cardinality_(bits_.count()) {
  if (bits_.size() != parent.order())
    throw InvalidArgument("mask size does not match the group order");
}

SubsetMask SubsetMask::of(const GroupTable& parent, std::span<const Elem> elems) {
  Bitset bits(parent.order());
  for (Elem e : elems) {
    if (e >= parent.order()) throw InvalidArgument("element index out of range");
    bits.set(e);
  }
  return SubsetMask(parent, std::move(bits));
}

SubsetMask set_product(const SubsetMask& a, const SubsetMask& b) {
  if (&a.parent() != &b.parent())
    throw InvalidArgument("set_product of subsets of different groups");
  const GroupTable& g = a.parent();
  std::vector<Elem> rhs;
  rhs.reserve(b.cardinality());
  b.bits().for_each([&](std::size_t y) { rhs.push_back(static_cast<Elem>(y)); });
  Bitset out(g.order());
  a.bits().for_each([&](std::size_t x) {
    for (Elem y : rhs) out.set(g.mul(static_cast<Elem>(x), y));
  });
  return SubsetMask(g, std::move(out));
}

namespace {

void bucket_cosets(const CosetLabels& cosets, std::vector<Elem>& offsets,
                   std::vector<Elem>& members) {
  const std::size_t n = cosets.representative.size();
  offsets.assign(n + 1, 0);
  for (Elem l : cosets.label) ++offsets[l + 1];
  for (std::size_t c = 0; c < n; ++c) offsets[c + 1] += offsets[c];
  members.resize(cosets.label.size());
  std::vector<Elem> fill(offsets.begin(), offsets.end() - 1);
  for (std::size_t x = 0; x < cosets.label.size(); ++x)
    members[fill[cosets.label[x]]++] = static_cast<Elem>(x);
}

Bitset union_of_hit_cosets(const Bitset& s, std::span<const Elem> label,
                           std::span<const Elem> offsets, std::span<const Elem> members) {
  Bitset out(s.size());
  std::vector<bool> hit(offsets.size() - 1, false);
  s.for_each([&](std::size_t x) {
    const Elem c = label[x];
    if (hit[c]) return;
    hit[c] = true;
    for (Elem i = offsets[c]; i < offsets[c + 1]; ++i) out.set(members[i]);
  });
  return out;
}

}  // namespace

RightSubgroupProduct::RightSubgroupProduct(const Subgroup& h) {
  CosetLabels cosets = left_cosets(h);
  bucket_cosets(cosets, offsets_, members_);
  label_ = std::move(cosets.label);
}

Bitset RightSubgroupProduct::apply(const Bitset& s) const {
  return union_of_hit_cosets(s, label_, offsets_, members_);
}

LeftSubgroupProduct::LeftSubgroupProduct(const Subgroup& h) {
  CosetLabels cosets = right_cosets(h);
  bucket_cosets(cosets, offsets_, members_);
  label_ = std::move(cosets.label);
}

Bitset LeftSubgroupProduct::apply(const Bitset& s) const {
  return union_of_hit_cosets(s, label_, offsets_, members_);
}

Bitset right_translate(const Bitset& s, std::span<const Elem> translation) {
  Bitset out(s.size());
  s.for_each([&](std::size_t x) { out.set(translation[x]); });
  return out;
}

unsigned Gamma::value() const {
  if (!value_) throw Error("gamma is infinite");
  return *value_;
}

std::string Gamma::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("infinity");
}

std::vector<Subgroup> CoveringWitness::factors() const {
  std::vector<Subgroup> out;
  out.reserve(conjugators.size());
  for (Elem c : conjugators) out.push_back(conjugate(base, c));
  return out;
}

WitnessReport verify_witness(const GroupTable& g, const CoveringWitness& w) {
  if (&w.base.parent() != &g) throw InvalidArgument("witness belongs to a different group");
  for (Elem c : w.conjugators)
    if (c >= g.order()) throw InvalidArgument("conjugator index out of range");

  WitnessReport report{false, 0, true, w.base.is_proper()};
  if (w.conjugators.empty()) return report;
  const auto factors = w.factors();
  Bitset product = factors.front().mask();
  for (std::size_t i = 1; i < factors.size(); ++i)
    product = RightSubgroupProduct(factors[i]).apply(product);
  report.product_size = product.count();
  report.valid = report.factors_proper && w.length() >= 2 && report.product_size == g.order();
  return report;
}

SubsetMask witness_product_bruteforce(const CoveringWitness& w) {
  const auto factors = w.factors();
  SubsetMask product = SubsetMask::of(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i)
    product = set_product(product, SubsetMask::of(factors[i]));
  return product;
}

RankResult rank(const GroupTable& g, const Subgroup& m) {
  if (&m.parent() != &g) throw InvalidArgument("subgroup belongs to a different group");
  if (!m.is_proper()) throw InvalidArgument("rank of the whole group is undefined");
  CosetLabels dc = double_cosets(m);
  return RankResult{dc.representative.size(), std::move(dc.representative)};
}

namespace {

struct PowerTrace {
  std::size_t k0;
  std::vector<std::size_t> sizes;
  bool recurrence_holds;
  bool reaches_group;
};

// Powers of B = M u MxM. Every power is a union of double cosets, so
// B^k B = B^k u B^k x M and (MxM)^{k+1} = (MxM)^k x M.
PowerTrace power_trace(const GroupTable& g, const Subgroup& m, Elem x,
                       const RightSubgroupProduct& times_m,
                       const LeftSubgroupProduct& m_times) {
  const std::vector<Elem> times_x = g.right_translation(x);
  Bitset single(g.order());
  single.set(x);
  Bitset d = m_times.apply(times_m.apply(single));  // MxM
  Bitset b = m.mask() | d;

  PowerTrace trace{0, {b.count()}, true, false};
  for (std::size_t k = 1;; ++k) {
    Bitset next_b = b | times_m.apply(right_translate(b, times_x));
    Bitset next_d = times_m.apply(right_translate(d, times_x));
    if (!(next_b == (b | next_d)) || !b.is_subset_of(next_b)) trace.recurrence_holds = false;
    trace.sizes.push_back(next_b.count());
    if (next_b == b) {
      trace.k0 = k;
      trace.reaches_group = b.all();
      return trace;
    }
    b = std::move(next_b);
    d = std::move(next_d);
  }
}

}  // namespace

RankFactorization rank_factorization(const GroupTable& g, const Subgroup& m,
                                     const RankFactorizationOptions& options) {
  if (&m.parent() != &g) throw InvalidArgument("subgroup belongs to a different group");
  if (is_normal(m)) throw InvalidArgument("rank factorization needs a non-normal subgroup");
  if (!is_maximal(m)) throw InvalidArgument("rank factorization needs a maximal subgroup");

  const RightSubgroupProduct times_m(m);
  const LeftSubgroupProduct m_times(m);
  const auto conjugates = conjugates_with_conjugators(m);

  struct Choice {
    Elem x;
    Elem m1_conjugator;
    PowerTrace trace;
  };
  std::optional<Choice> best;
  std::vector<bool> tried_double_coset;
  CosetLabels dc;
  if (options.minimize_k0) {
    dc = double_cosets(m);
    tried_double_coset.assign(dc.representative.size(), false);
  }

  for (const auto& c : conjugates) {
    if (c.subgroup.is_subgroup_of(m)) continue;
    for (Elem x : c.subgroup.members()) {
      if (m.contains(x)) continue;
      // k0 depends on x only through its double coset MxM.
      if (options.minimize_k0) {
        if (tried_double_coset[dc.label[x]]) continue;
        tried_double_coset[dc.label[x]] = true;
      }
      PowerTrace trace = power_trace(g, m, x, times_m, m_times);
      if (!best || trace.k0 < best->trace.k0) best = Choice{x, c.conjugator, std::move(trace)};
      if (!options.minimize_k0) break;
    }
    if (best && !options.minimize_k0) break;
  }
  if (!best) throw InvalidArgument("every conjugate lies inside the subgroup");
  if (!best->trace.reaches_group)
    throw InvalidArgument("powers of M u MxM stabilize below G; subgroup is not maximal");

  std::vector<Elem> conjugators{kIdentity};
  for (std::size_t i = 1; i <= best->trace.k0; ++i)
    conjugators.push_back(g.power(best->x, -static_cast<std::int64_t>(i)));
  conjugators.push_back(best->m1_conjugator);

  return RankFactorization{CoveringWitness{m, std::move(conjugators)},
                           best->trace.k0,
                           rank(g, m).r,
                           best->x,
                           best->m1_conjugator,
                           std::move(best->trace.sizes),
                           best->trace.recurrence_holds};
}

unsigned order_lower_bound(std::size_t group_order, std::size_t subgroup_order) {
  if (subgroup_order <= 1) return std::numeric_limits<unsigned>::max();
  unsigned k = 0;
  for (std::size_t reach = 1; reach < group_order; ++k) {
    reach = reach > group_order / subgroup_order ? group_order : reach * subgroup_order;
  }
  return std::max(k, 3u);
}

namespace {

// Iterative deepening over the covering length; depth-first in conjugator
// order inside each round, so the first covering found has the
// lexicographically smallest conjugator sequence among the shortest ones.
class CoveringSearch {
 public:
  CoveringSearch(const GroupTable& g, const Subgroup& m, const SearchOptions& options)
      : g_(g), m_(m), options_(options), conjugates_(conjugates_with_conjugators(m)) {
    products_.reserve(conjugates_.size());
    for (const auto& c : conjugates_) products_.emplace_back(c.subgroup);
  }

  SubgroupGamma run(unsigned limit) {
    SubgroupGamma result;
    for (unsigned bound = order_lower_bound(g_.order(), m_.order()); bound <= limit; ++bound) {
      bound_ = bound;
      failed_.clear();
      path_.clear();
      if (descend(m_.mask(), 1)) {
        result.k = bound;
        result.conjugators.push_back(kIdentity);
        for (std::size_t c : path_) result.conjugators.push_back(conjugates_[c].conjugator);
        break;
      }
    }
    result.states_visited = visited_;
    return result;
  }

 private:
  // Whether |S| |M|^(remaining) can still reach |G|.
  bool can_reach(std::size_t size, unsigned remaining) const {
    std::size_t reach = size;
    for (unsigned i = 0; i < remaining && reach < g_.order(); ++i) reach *= m_.order();
    return reach >= g_.order();
  }

  bool known_failure(const Bitset& s, unsigned depth) const {
    auto it = failed_.find(s);
    if (it != failed_.end() && it->second <= depth) return true;
    if (options_.domination_pruning) {
      for (const auto& [state, d] : failed_)
        if (d <= depth && s.is_subset_of(state)) return true;
    }
    return false;
  }

  bool descend(const Bitset& s, unsigned depth) {
    ++visited_;
    const std::size_t size = s.count();
    if (size == g_.order()) return true;
    if (depth >= bound_ || !can_reach(size, bound_ - depth)) return false;
    if (known_failure(s, depth)) return false;

    for (std::size_t c = 0; c < products_.size(); ++c) {
      Bitset next = products_[c].apply(s);
      // A step that adds nothing could be dropped to give a shorter
      // covering, and shorter ones were already ruled out.
      if (next == s) continue;
      path_.push_back(c);
      if (descend(next, depth + 1)) return true;
      path_.pop_back();
    }
    auto [it, inserted] = failed_.emplace(s, depth);
    if (!inserted) it->second = std::min(it->second, depth);
    return false;
  }

  const GroupTable& g_;
  const Subgroup& m_;
  SearchOptions options_;
  std::vector<ConjugateSubgroup> conjugates_;
  std::vector<RightSubgroupProduct> products_;
  std::unordered_map<Bitset, unsigned, BitsetHash> failed_;
  std::vector<std::size_t> path_;
  unsigned bound_ = 0;
  std::size_t visited_ = 0;
};

template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  }
}

}  // namespace

SubgroupGamma gamma_for_subgroup(const GroupTable& g, const Subgroup& m, unsigned limit,
                                 const SearchOptions& options) {
  if (&m.parent() != &g) throw InvalidArgument("subgroup belongs to a different group");
  if (!m.is_proper()) throw InvalidArgument("covering subgroup must be proper");
  if (is_normal(m))
    throw InvalidArgument("a normal subgroup has no covering: all its conjugates coincide");
  return CoveringSearch(g, m, options).run(limit);
}

GammaResult gamma_cp_exact(const GroupTable& g, std::span<const Subgroup> candidates,
                           unsigned limit, const SearchOptions& options) {
  if (is_nilpotent(g)) return GammaResult{Gamma::infinite(), std::nullopt, {}};

  std::vector<SubgroupGamma> found(candidates.size());
  parallel_for(candidates.size(), options.threads, [&](std::size_t i) {
    found[i] = gamma_for_subgroup(g, candidates[i], limit, options);
  });

  GammaResult result{Gamma::infinite(), std::nullopt, {}};
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    result.per_class.push_back({candidates[i], found[i].k});
    if (found[i].k && (!best || *found[i].k < *found[*best].k)) best = i;
  }
  if (!best)
    throw SearchLimitExceeded("no covering of length <= " + std::to_string(limit) +
                                  " for any candidate subgroup",
                              std::move(result.per_class));
  result.value = Gamma::finite(*found[*best].k);
  result.witness = CoveringWitness{candidates[*best], std::move(found[*best].conjugators)};
  return result;
}

GammaResult gamma_cp_exact(const GroupTable& g, unsigned limit, const SearchOptions& options,
                           const LatticeCaps& caps) {
  if (is_nilpotent(g)) return GammaResult{Gamma::infinite(), std::nullopt, {}};
  std::vector<Subgroup> non_normal;
  for (auto& m : maximal_subgroups(g, caps))
    if (!m.is_normal) non_normal.push_back(std::move(m.subgroup));
  const auto reps = conjugacy_class_representatives(non_normal);
  return gamma_cp_exact(g, reps, limit, options);
}

GammaResult gamma_bruteforce_oracle(const GroupTable& g, unsigned maxlen) {
  if (is_nilpotent(g)) return GammaResult{Gamma::infinite(), std::nullopt, {}};

  struct Node {
    SubsetMask state;
    std::size_t parent;  // index into nodes, or npos for roots
    Elem conjugator;
  };
  constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::optional<CoveringWitness> best;
  for (const auto& a : all_subgroups(g, LatticeCaps{g.order(), 1u << 20})) {
    if (!a.is_proper()) continue;
    const auto conjugates = conjugates_with_conjugators(a);

    std::vector<Node> nodes;
    std::unordered_set<Bitset, BitsetHash> seen;
    std::size_t level_begin = 0;
    for (const auto& c : conjugates) {
      if (seen.insert(c.subgroup.mask()).second)
        nodes.push_back({SubsetMask::of(c.subgroup), npos, c.conjugator});
    }
    std::optional<std::size_t> hit;
    for (unsigned length = 2; length <= maxlen && !hit; ++length) {
      if (best && length >= best->length()) break;
      const std::size_t level_end = nodes.size();
      for (std::size_t i = level_begin; i < level_end && !hit; ++i) {
        for (const auto& c : conjugates) {
          SubsetMask next = set_product(nodes[i].state, SubsetMask::of(c.subgroup));
          if (!seen.insert(next.bits()).second) continue;
          const bool full = next.is_full();
          nodes.push_back({std::move(next), i, c.conjugator});
          if (full) {
            hit = nodes.size() - 1;
            break;
          }
        }
      }
      level_begin = level_end;
    }
    if (!hit) continue;
    std::vector<Elem> conjugators;
    for (std::size_t i = *hit; i != npos; i = nodes[i].parent)
      conjugators.push_back(nodes[i].conjugator);
    std::reverse(conjugators.begin(), conjugators.end());
    best = CoveringWitness{a, std::move(conjugators)};
  }

  if (!best)
    throw SearchLimitExceeded("oracle found no covering of length <= " + std::to_string(maxlen),
                              {});
  return GammaResult{Gamma::finite(static_cast<unsigned>(best->length())), std::move(best), {}};
}

}  // namespace conjcover
