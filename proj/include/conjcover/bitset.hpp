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

#ifndef CONJCOVER_BITSET_HPP_
#define CONJCOVER_BITSET_HPP_

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace conjcover {

// Fixed-size dynamic bitset over the elements of a group table. All binary
// operations require operands of equal size.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < size_);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void reset(std::size_t i) {
    assert(i < size_);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void set_all() {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool all() const noexcept { return count() == size_; }
  bool none() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const Bitset& other) const {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& other) {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& other) {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  // Calls f(i) for every set bit in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const int tz = std::countr_zero(bits);
        f(w * kWordBits + static_cast<std::size_t>(tz));
        bits &= bits - 1;
      }
    }
  }

  // Index of the lowest set bit, or size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w])
        return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
  }

  const std::vector<Word>& words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ull ^ size_;
    for (Word w : words_) {
      h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  void trim() {
    if (size_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace conjcover

#endif  // CONJCOVER_BITSET_HPP_
