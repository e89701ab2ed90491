#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace permemc {

/// Fixed-length bitset sized at runtime; just enough for the solvers'
/// adjacency rows and cell masks.
class DynamicBitset {
 public:
  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }

  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) noexcept { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool none() const noexcept {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  bool any() const noexcept { return !none(); }

  bool intersects(const DynamicBitset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & other.words_[k]) return true;
    }
    return false;
  }
  /// True iff every bit of *this is also set in other.
  bool is_subset_of(const DynamicBitset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~other.words_[k]) return false;
    }
    return true;
  }

  DynamicBitset& operator&=(const DynamicBitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  DynamicBitset& operator|=(const DynamicBitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  /// Clears every bit that is set in other.
  DynamicBitset& subtract(const DynamicBitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept {
    if (from >= bits_) return bits_;
    std::size_t k = from / 64;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (w != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == words_.size()) return bits_;
      w = words_[k];
    }
  }
  std::size_t find_first() const noexcept { return find_next(0); }

  friend bool operator==(const DynamicBitset&, const DynamicBitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

inline DynamicBitset operator&(DynamicBitset a, const DynamicBitset& b) { return a &= b; }
inline DynamicBitset operator|(DynamicBitset a, const DynamicBitset& b) { return a |= b; }

}  // namespace permemc
