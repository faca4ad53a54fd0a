#include "conscale/ideal.hpp"

#include <algorithm>
#include <bit>

#include "conscale/errors.hpp"

namespace conscale {

EnumeratedIdeal::EnumeratedIdeal(const ClosureFamily& extents, const OracleBounds& bounds, bool elements_only)
    : extents_(extents) {
  k_ = extents_.size();
  if (k_ > bounds.max_extents || k_ > 31)
    throw BoundExceeded("ideal enumeration refused: " + std::to_string(k_) + " extents exceeds the bound of " +
                        std::to_string(std::min<std::size_t>(bounds.max_extents, 31)));
  const auto& ext = extents_.members();
  top_bit_ = Mask{1} << (k_ - 1);  // G is lectically last
  full_mask_ = static_cast<Mask>((std::uint64_t{1} << k_) - 1);

  meet_bit_.assign(k_, std::vector<Mask>(k_, 0));
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j) {
      const auto pos = std::lower_bound(ext.begin(), ext.end(), ext[i] & ext[j], lectic_less);
      meet_bit_[i][j] = Mask{1} << static_cast<std::size_t>(pos - ext.begin());
    }

  index_.assign(std::size_t{1} << k_, -1);
  const Mask rest = full_mask_ & ~top_bit_;
  for (Mask sub = 0;; sub = (sub - rest) & rest) {
    const Mask m = sub | top_bit_;
    bool closed = true;
    for (Mask a = m; a != 0 && closed; a &= a - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(a));
      for (Mask b = m; b != 0; b &= b - 1) {
        if ((meet_bit_[i][static_cast<std::size_t>(std::countr_zero(b))] & ~m) != 0) {
          closed = false;
          break;
        }
      }
    }
    if (closed) {
      index_[m] = static_cast<std::int32_t>(elements_.size());
      elements_.push_back(m);
    }
    if (sub == rest) break;
  }
  if (elements_only) return;
  build_hasse();
  if (elements_.size() <= bounds.max_ideal_elements) build_tables();
}

std::size_t EnumeratedIdeal::index_of(Mask m) const {
  if (m >= index_.size() || index_[m] < 0) return npos;
  return static_cast<std::size_t>(index_[m]);
}

EnumeratedIdeal::Mask EnumeratedIdeal::mask_of(const ClosureFamily& f) const {
  const auto& ext = extents_.members();
  Mask m = 0;
  for (const auto& member : f) {
    const auto pos = std::lower_bound(ext.begin(), ext.end(), member, lectic_less);
    if (pos == ext.end() || *pos != member) throw ContractError("family is not contained in Ext(K)");
    m |= Mask{1} << static_cast<std::size_t>(pos - ext.begin());
  }
  return m;
}

ClosureFamily EnumeratedIdeal::family(std::size_t i) const {
  std::vector<ObjectSet> members;
  for (Mask m = elements_[i]; m != 0; m &= m - 1) members.push_back(extents_.members()[static_cast<std::size_t>(std::countr_zero(m))]);
  return ClosureFamily(extents_.ground_size(), std::move(members));
}

std::size_t EnumeratedIdeal::cardinality(std::size_t i) const {
  return static_cast<std::size_t>(std::popcount(elements_[i]));
}

EnumeratedIdeal::Mask EnumeratedIdeal::close(Mask m) const {
  m |= top_bit_;
  while (true) {
    Mask next = m;
    for (Mask a = m; a != 0; a &= a - 1)
      for (Mask b = a; b != 0; b &= b - 1)
        next |= meet_bit_[static_cast<std::size_t>(std::countr_zero(a))][static_cast<std::size_t>(std::countr_zero(b))];
    if (next == m) return m;
    m = next;
  }
}

void EnumeratedIdeal::build_hasse() {
  const std::size_t n = elements_.size();
  lower_.assign(n, {});
  upper_.assign(n, {});
  std::vector<std::size_t> below;
  for (std::size_t y = 0; y < n; ++y) {
    below.clear();
    const Mask rest = elements_[y] & ~top_bit_;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask m = sub | top_bit_;
      if (m != elements_[y] && index_[m] >= 0) below.push_back(static_cast<std::size_t>(index_[m]));
      if (sub == 0) break;
    }
    std::stable_sort(below.begin(), below.end(), [&](std::size_t a, std::size_t b) { return cardinality(a) > cardinality(b); });
    for (auto x : below) {
      const bool dominated = std::any_of(lower_[y].begin(), lower_[y].end(), [&](std::size_t z) { return leq(x, z); });
      if (!dominated) lower_[y].push_back(x);
    }
    for (auto x : lower_[y]) upper_[x].push_back(y);
  }
}

bool EnumeratedIdeal::is_cover(std::size_t lower, std::size_t upper) const {
  const auto& l = lower_[upper];
  return std::find(l.begin(), l.end(), lower) != l.end();
}

void EnumeratedIdeal::build_tables() {
  const std::size_t n = elements_.size();
  join_table_.assign(n * n, 0);
  meet_table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const auto j = static_cast<std::uint16_t>(index_[close(elements_[a] | elements_[b])]);
      const auto m = static_cast<std::uint16_t>(index_[elements_[a] & elements_[b]]);
      join_table_[a * n + b] = join_table_[b * n + a] = j;
      meet_table_[a * n + b] = meet_table_[b * n + a] = m;
    }
}

std::size_t EnumeratedIdeal::join(std::size_t a, std::size_t b) const {
  if (!has_tables()) throw BoundExceeded("ideal too large for pairwise join tables");
  return join_table_[a * size() + b];
}

std::size_t EnumeratedIdeal::meet(std::size_t a, std::size_t b) const {
  if (!has_tables()) throw BoundExceeded("ideal too large for pairwise meet tables");
  return meet_table_[a * size() + b];
}

bool EnumeratedIdeal::is_neutral_by_definition(std::size_t x) const {
  const std::size_t n = size();
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = y + 1; z < n; ++z) {
      const auto lhs = join(join(meet(x, y), meet(y, z)), meet(z, x));
      const auto rhs = meet(meet(join(x, y), join(y, z)), join(z, x));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace conscale
