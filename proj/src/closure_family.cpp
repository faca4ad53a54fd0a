#include "conscale/closure_family.hpp"

#include <algorithm>
#include <unordered_set>

#include "conscale/closure.hpp"
#include "conscale/errors.hpp"

namespace conscale {

void canonicalize(std::vector<ObjectSet>& sets) {
  std::sort(sets.begin(), sets.end(), lectic_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

bool is_closure_family(const std::vector<ObjectSet>& members, std::size_t ground_size) {
  std::unordered_set<ObjectSet, BitSetHash> set;
  for (const auto& m : members) {
    if (m.size() != ground_size) return false;
    set.insert(m);
  }
  if (!set.contains(ObjectSet::full(ground_size))) return false;
  for (const auto& a : set)
    for (const auto& b : set)
      if (!set.contains(a & b)) return false;
  return true;
}

ClosureFamily::ClosureFamily(std::size_t ground_size, std::vector<ObjectSet> members)
    : ground_size_(ground_size), members_(std::move(members)) {
  if (!is_closure_family(members_, ground_size_))
    throw ContractError("family is not a closure system (needs the ground set and closure under intersection)");
  canonicalize(members_);
}

ClosureFamily::ClosureFamily(Unchecked, std::size_t ground_size, std::vector<ObjectSet> members)
    : ground_size_(ground_size), members_(std::move(members)) {
  canonicalize(members_);
}

ClosureFamily ClosureFamily::generated_by(std::size_t ground_size, std::vector<ObjectSet> generators) {
  std::unordered_set<ObjectSet, BitSetHash> closed;
  std::vector<ObjectSet> members;
  auto add = [&](ObjectSet s) {
    if (s.size() != ground_size) throw ContractError("generator width does not match ground set");
    if (closed.insert(s).second) members.push_back(std::move(s));
  };
  add(ObjectSet::full(ground_size));
  for (auto& g : generators) add(std::move(g));
  // Worklist: intersect each newly admitted member with all earlier ones.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(members[i] & members[j]);
  return ClosureFamily(Unchecked{}, ground_size, std::move(members));
}

ClosureFamily ClosureFamily::of_extents(const FormalContext& context) {
  return ClosureFamily(Unchecked{}, context.object_count(), extents(context));
}

bool ClosureFamily::contains(const ObjectSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s, lectic_less);
}

bool ClosureFamily::is_subfamily_of(const ClosureFamily& other) const {
  if (ground_size_ != other.ground_size_) return false;
  return std::all_of(members_.begin(), members_.end(), [&](const ObjectSet& m) { return other.contains(m); });
}

ObjectSet ClosureFamily::close(const ObjectSet& s) const {
  ObjectSet out = ground();
  for (const auto& m : members_)
    if (s.is_subset_of(m)) out &= m;
  return out;
}

std::vector<ObjectSet> ClosureFamily::upper_covers(const ObjectSet& a) const {
  std::vector<ObjectSet> above;
  for (const auto& m : members_)
    if (a.is_proper_subset_of(m)) above.push_back(m);
  std::vector<ObjectSet> out;
  for (const auto& m : above) {
    const bool minimal = std::none_of(above.begin(), above.end(), [&](const ObjectSet& d) { return d.is_proper_subset_of(m); });
    if (minimal) out.push_back(m);
  }
  return out;
}

std::vector<ObjectSet> ClosureFamily::meet_irreducible_members() const {
  std::vector<ObjectSet> out;
  const ObjectSet top = ground();
  for (const auto& a : members_) {
    if (a == top) continue;
    // In a closure system a member is meet-irreducible iff it is not the
    // intersection of the members strictly above it.
    ObjectSet meet = top;
    for (const auto& m : members_)
      if (a.is_proper_subset_of(m)) meet &= m;
    if (meet != a) out.push_back(a);
  }
  return out;
}

std::size_t ClosureFamily::cover_pair_count() const {
  std::size_t n = 0;
  for (const auto& a : members_) n += upper_covers(a).size();
  return n;
}

}  // namespace conscale
