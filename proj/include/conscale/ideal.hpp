#pragma once

#include <cstdint>
#include <vector>

#include "conscale/closure_family.hpp"
#include "conscale/lattice.hpp"

namespace conscale {

/// Brute-force materialization of ↓Ext(K).
///
/// Each element is a bitmask over the indices of Ext(K) (lectic order, G
/// last). Covers are computed as maximal proper sub-elements, without using
/// any of the structural characterizations, so this class serves as the
/// reference the closure-lattice operations are checked against.
class EnumeratedIdeal {
public:
  using Mask = std::uint32_t;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// With `elements_only`, covers and tables are skipped.
  explicit EnumeratedIdeal(const ClosureFamily& extents, const OracleBounds& bounds = {}, bool elements_only = false);

  const ClosureFamily& extents() const { return extents_; }
  const std::vector<ObjectSet>& extent_list() const { return extents_.members(); }
  std::size_t size() const { return elements_.size(); }
  Mask mask(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(Mask m) const;
  std::size_t index_of(const ClosureFamily& f) const { return index_of(mask_of(f)); }
  Mask mask_of(const ClosureFamily& f) const;
  ClosureFamily family(std::size_t i) const;
  std::size_t bottom() const { return index_of(top_bit_); }
  std::size_t top() const { return index_of(full_mask_); }
  std::size_t cardinality(std::size_t i) const;

  /// Intersection-closure of a set of extent indices.
  Mask close(Mask m) const;
  bool leq(std::size_t a, std::size_t b) const { return (elements_[a] & ~elements_[b]) == 0; }

  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_[i]; }
  bool is_cover(std::size_t lower, std::size_t upper) const;

  /// Pairwise tables; only available when size() ≤ bounds.max_ideal_elements.
  bool has_tables() const { return !join_table_.empty(); }
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;

  /// Neutrality by definition: for all y, z the median identity
  /// (x∧y)∨(y∧z)∨(z∧x) = (x∨y)∧(y∨z)∧(z∨x) holds.
  bool is_neutral_by_definition(std::size_t x) const;

private:
  void build_hasse();
  void build_tables();

  ClosureFamily extents_;
  std::size_t k_ = 0;
  Mask top_bit_ = 0;
  Mask full_mask_ = 0;
  std::vector<std::vector<Mask>> meet_bit_;
  std::vector<Mask> elements_;
  std::vector<std::int32_t> index_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::uint16_t> join_table_;
  std::vector<std::uint16_t> meet_table_;
};

}  // namespace conscale
