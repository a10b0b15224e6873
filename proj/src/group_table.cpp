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

#include "conjcover/group_table.hpp"

#include <cstdlib>
#include <string>

#include "conjcover/error.hpp"

namespace conjcover {

std::size_t default_order_cap() {
  if (const char* env = std::getenv("CONJCOVER_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultOrderCap;
}

GroupTable GroupTable::generate(std::size_t degree, std::span<const Permutation> gens,
                                std::size_t cap) {
  if (degree == 0) throw InvalidArgument("degree must be positive");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw InvalidArgument("generator of degree " + std::to_string(g.degree()) +
                            " in a group of degree " + std::to_string(degree));

  GroupTable t;
  t.degree_ = degree;
  t.elements_.emplace_back(degree);
  t.index_.emplace(t.elements_.back(), kIdentity);

  std::vector<Permutation> distinct;
  for (const auto& g : gens) {
    if (g.is_identity()) continue;
    bool repeated = false;
    for (const auto& d : distinct) repeated = repeated || d == g;
    if (!repeated) distinct.push_back(g);
  }

  for (std::size_t head = 0; head < t.elements_.size(); ++head) {
    for (const auto& g : distinct) {
      Permutation next = compose(t.elements_[head], g);
      if (t.index_.contains(next)) continue;
      if (t.elements_.size() >= cap)
        throw CapExceeded("group too large for desk-scale engine (order exceeds " +
                          std::to_string(cap) + ")");
      t.index_.emplace(next, static_cast<Elem>(t.elements_.size()));
      t.elements_.push_back(std::move(next));
    }
  }

  for (const auto& g : distinct) t.generators_.push_back(t.index_.at(g));

  const std::size_t n = t.order();
  t.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.inverse_[i] = t.index_.at(t.elements_[i].inverse());

  if (n <= kCayleyTableLimit) {
    t.cayley_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        t.cayley_[a * n + b] = t.index_.at(compose(t.elements_[a], t.elements_[b]));
  }
  return t;
}

std::optional<Elem> GroupTable::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem GroupTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw InvalidArgument("permutation " + p.to_cycles() + " is not in the group");
  return it->second;
}

Elem GroupTable::mul_slow(Elem a, Elem b) const {
  const auto& pa = elements_[a];
  const auto& pb = elements_[b];
  std::vector<Point> images(degree_);
  for (std::size_t i = 0; i < degree_; ++i) images[i] = pb(pa(static_cast<Point>(i)));
  return index_.at(Permutation::from_images(std::move(images)));
}

Elem GroupTable::power(Elem a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elem result = kIdentity;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t GroupTable::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != kIdentity; x = mul(x, a)) ++k;
  return k;
}

std::vector<Elem> GroupTable::right_translation(Elem x) const {
  std::vector<Elem> out(order());
  for (std::size_t g = 0; g < out.size(); ++g) out[g] = mul(static_cast<Elem>(g), x);
  return out;
}

std::vector<Elem> GroupTable::left_translation(Elem x) const {
  std::vector<Elem> out(order());
  for (std::size_t g = 0; g < out.size(); ++g) out[g] = mul(x, static_cast<Elem>(g));
  return out;
}

}  // namespace conjcover
