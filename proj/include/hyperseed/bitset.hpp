// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hyperseed {

/// Fixed-size bitset with runtime length.
class DynamicBitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t n) : size_(n), words_((n + kBits - 1) / kBits, 0) {}

  std::size_t size() const { return size_; }
  std::size_t num_words() const { return words_.size(); }

  bool test(std::size_t i) const { return (words_[i / kBits] >> (i % kBits)) & 1u; }
  void set(std::size_t i) { words_[i / kBits] |= Word{1} << (i % kBits); }
  void reset(std::size_t i) { words_[i / kBits] &= ~(Word{1} << (i % kBits)); }
  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  DynamicBitset& operator|=(const DynamicBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        fn(w * kBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  bool operator==(const DynamicBitset&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace hyperseed
