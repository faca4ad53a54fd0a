#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace conscale {

/// Fixed-width set of indices [0, size) backed by 64-bit words.
///
/// Index order is the declared order of the owning ground set; lectic
/// comparisons treat index 0 as the most significant element.
class BitSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitSet() = default;
  explicit BitSet(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

  static BitSet full(std::size_t size);
  static BitSet from_indices(std::size_t size, const std::vector<std::size_t>& indices);

  std::size_t size() const { return size_; }
  std::size_t count() const;
  bool empty() const { return none(); }
  bool none() const;
  bool all() const { return count() == size_; }

  bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
  void set(std::size_t i) { words_[i / word_bits] |= Word{1} << (i % word_bits); }
  void reset(std::size_t i) { words_[i / word_bits] &= ~(Word{1} << (i % word_bits)); }
  void set(std::size_t i, bool value) { value ? set(i) : reset(i); }

  /// Keeps only indices < bound.
  BitSet prefix(std::size_t bound) const;

  bool is_subset_of(const BitSet& other) const;
  bool is_proper_subset_of(const BitSet& other) const { return is_subset_of(other) && *this != other; }
  bool intersects(const BitSet& other) const;

  BitSet& operator&=(const BitSet& other);
  BitSet& operator|=(const BitSet& other);
  /// Set difference.
  BitSet& operator-=(const BitSet& other);
  BitSet operator~() const;

  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

  friend bool operator==(const BitSet& a, const BitSet& b) = default;
  /// Total order usable for std::map keys; not the lectic order.
  friend std::strong_ordering operator<=>(const BitSet& a, const BitSet& b);

  /// First index at or after `from` that is set, or size().
  std::size_t find_next(std::size_t from) const;
  std::vector<std::size_t> indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(__builtin_ctzll(word));
        f(w * word_bits + bit);
        word &= word - 1;
      }
    }
  }

  std::size_t hash() const;
  /// Renders as a 0/1 string in index order.
  std::string to_string() const;

private:
  void trim();

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Lectic order: a < b iff the first index where they differ belongs to b.
bool lectic_less(const BitSet& a, const BitSet& b);

struct BitSetHash {
  std::size_t operator()(const BitSet& s) const { return s.hash(); }
};

}  // namespace conscale
