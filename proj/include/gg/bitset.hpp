#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gg {

/// Flat bit set with a fixed capacity chosen at construction.
/// Used for subgroup membership sets and graph adjacency rows.
class DynBitset {
public:
  DynBitset() = default;
  explicit DynBitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::size_t(std::popcount(w));
    return c;
  }

  bool none() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const DynBitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  void unite_with(const DynBitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }

  bool operator==(const DynBitset&) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

  /// Visit set positions in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(wi * 64 + std::size_t(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gg
