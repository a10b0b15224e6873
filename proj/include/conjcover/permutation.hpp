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

#ifndef CONJCOVER_PERMUTATION_HPP_
#define CONJCOVER_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace conjcover {

using Point = std::uint32_t;

// A bijection of {0, ..., degree-1}. Points are 0-based internally and
// 1-based in cycle notation.
//
// Products are read left to right: (a * b)(x) = b(a(x)), i.e. apply `a`
// first. Under this convention right cosets Mg and the conjugate
// H^g = g^-1 H g compose in the order they are written.
class Permutation {
 public:
  Permutation() = default;

  // The identity on `degree` points.
  explicit Permutation(std::size_t degree);

  // Throws InvalidArgument if `images` is not a bijection.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  // Disjoint-cycle form, 1-based, cycles ordered by smallest point and
  // each rotated to start at its smallest point; the identity is "()".
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

// a * b: apply a first, then b. Throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

// Parses disjoint cycle notation such as "(1 2 3)(4,5)", "()" or "e".
// Throws ParseError with the offending offset on malformed input, repeated
// points or points outside 1..degree.
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace conjcover

#endif  // CONJCOVER_PERMUTATION_HPP_
