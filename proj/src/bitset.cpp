#include "conscale/bitset.hpp"

#include <bit>
#include <stdexcept>

namespace conscale {

BitSet BitSet::full(std::size_t size) {
  BitSet s(size);
  for (auto& w : s.words_) w = ~Word{0};
  s.trim();
  return s;
}

BitSet BitSet::from_indices(std::size_t size, const std::vector<std::size_t>& indices) {
  BitSet s(size);
  for (auto i : indices) {
    if (i >= size) throw std::out_of_range("bit index out of range");
    s.set(i);
  }
  return s;
}

void BitSet::trim() {
  if (size_ % word_bits != 0 && !words_.empty())
    words_.back() &= (Word{1} << (size_ % word_bits)) - 1;
}

std::size_t BitSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitSet::none() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

BitSet BitSet::prefix(std::size_t bound) const {
  BitSet r = *this;
  for (std::size_t w = 0; w < r.words_.size(); ++w) {
    const std::size_t lo = w * word_bits;
    if (lo >= bound) {
      r.words_[w] = 0;
    } else if (bound - lo < word_bits) {
      r.words_[w] &= (Word{1} << (bound - lo)) - 1;
    }
  }
  return r;
}

bool BitSet::is_subset_of(const BitSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

bool BitSet::intersects(const BitSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

BitSet& BitSet::operator&=(const BitSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitSet& BitSet::operator|=(const BitSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

BitSet& BitSet::operator-=(const BitSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

BitSet BitSet::operator~() const {
  BitSet r = *this;
  for (auto& w : r.words_) w = ~w;
  r.trim();
  return r;
}

std::strong_ordering operator<=>(const BitSet& a, const BitSet& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.words_ <=> b.words_;
}

std::size_t BitSet::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from / word_bits;
  Word word = words_[w] & (~Word{0} << (from % word_bits));
  while (true) {
    if (word != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(word));
    if (++w == words_.size()) return size_;
    word = words_[w];
  }
}

std::vector<std::size_t> BitSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t BitSet::hash() const {
  std::size_t h = std::hash<std::size_t>{}(size_);
  for (auto w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string BitSet::to_string() const {
  std::string s(size_, '0');
  for_each([&](std::size_t i) { s[i] = '1'; });
  return s;
}

bool lectic_less(const BitSet& a, const BitSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool x = a.test(i);
    const bool y = b.test(i);
    if (x != y) return y;
  }
  return false;
}

}  // namespace conscale
