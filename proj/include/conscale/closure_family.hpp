#pragma once

#include <vector>

#include "conscale/bitset.hpp"
#include "conscale/context.hpp"

namespace conscale {

/// True iff `ground` (the full set) is a member and members are closed under
/// pairwise intersection. Members must all have width `ground_size`.
bool is_closure_family(const std::vector<ObjectSet>& members, std::size_t ground_size);

/// A closure system on an object set: contains the full set and is closed
/// under intersection. Members are kept duplicate-free in lectic order, so
/// equality is structural.
class ClosureFamily {
public:
  ClosureFamily() = default;
  /// Throws ContractError unless `members` form a closure system.
  ClosureFamily(std::size_t ground_size, std::vector<ObjectSet> members);

  /// Smallest closure system containing `generators` (and the full set).
  static ClosureFamily generated_by(std::size_t ground_size, std::vector<ObjectSet> generators);
  static ClosureFamily trivial(std::size_t ground_size) { return generated_by(ground_size, {}); }
  static ClosureFamily of_extents(const FormalContext& context);

  std::size_t ground_size() const { return ground_size_; }
  ObjectSet ground() const { return ObjectSet::full(ground_size_); }
  std::size_t size() const { return members_.size(); }
  const std::vector<ObjectSet>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const ObjectSet& s) const;
  bool is_subfamily_of(const ClosureFamily& other) const;
  /// Smallest member containing `s`.
  ObjectSet close(const ObjectSet& s) const;

  /// Members with exactly one upper cover in (members, ⊆); never the ground set.
  std::vector<ObjectSet> meet_irreducible_members() const;
  /// Number of pairs A ≺ B in (members, ⊆).
  std::size_t cover_pair_count() const;
  /// Upper covers of member `a` in (members, ⊆).
  std::vector<ObjectSet> upper_covers(const ObjectSet& a) const;

  friend bool operator==(const ClosureFamily&, const ClosureFamily&) = default;

private:
  struct Unchecked {};
  ClosureFamily(Unchecked, std::size_t ground_size, std::vector<ObjectSet> members);

  std::size_t ground_size_ = 0;
  std::vector<ObjectSet> members_;
};

/// Sorts lectically and removes duplicates.
void canonicalize(std::vector<ObjectSet>& sets);

}  // namespace conscale
