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

#include "conjcover/permutation.hpp"

#include <cctype>
#include <numeric>
#include <utility>

#include "conjcover/error.hpp"

namespace conjcover {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw InvalidArgument("image array is not a bijection");
    seen[x] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[images_[i]] = static_cast<Point>(i);
  return p;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    Point x = static_cast<Point>(start);
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(x + 1);
      seen[x] = true;
      x = images_[x];
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw InvalidArgument("cannot compose permutations of degree " +
                          std::to_string(a.degree()) + " and " +
                          std::to_string(b.degree()));
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b(a(static_cast<Point>(i)));
  return Permutation::from_images(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (Point x : p.images()) h = (h ^ x) * 0x100000001b3ull;
  return h;
}

namespace {

bool is_separator(char c) { return c == ' ' || c == ',' || c == '\t'; }

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::size_t pos = 0;
  auto skip_blanks = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_blanks();
  if (pos == text.size()) throw ParseError("empty permutation", pos);

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});

  if (text[pos] == 'e') {
    ++pos;
    skip_blanks();
    if (pos != text.size()) throw ParseError("unexpected text after identity 'e'", pos);
    return Permutation::from_images(std::move(images));
  }

  std::vector<bool> used(degree, false);
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      while (pos < text.size() && is_separator(text[pos])) ++pos;
      if (pos == text.size()) throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
      const std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (value <= degree) value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
      }
      if (value == 0 || value > degree)
        throw ParseError("point " + std::string(text.substr(start, pos - start)) +
                             " out of range 1.." + std::to_string(degree),
                         start);
      const Point point = static_cast<Point>(value - 1);
      if (used[point]) throw ParseError("point " + std::to_string(value) + " repeated", start);
      used[point] = true;
      cycle.push_back(point);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_blanks();
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace conjcover
