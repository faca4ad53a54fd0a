#pragma once

#include <vector>

#include "conscale/context.hpp"

namespace conscale {

/// Object implication premise -> conclusion over the objects of a context.
struct ObjectImplication {
  ObjectSet premise;
  ObjectSet conclusion;

  friend bool operator==(const ObjectImplication&, const ObjectImplication&) = default;
};

/// Ordered, duplicate-free list of object implications.
class ImplicationTheory {
public:
  ImplicationTheory() = default;
  explicit ImplicationTheory(std::vector<ObjectImplication> implications);

  /// Appends unless an extensionally equal implication is already present.
  bool add(ObjectImplication implication);

  std::size_t size() const { return implications_.size(); }
  bool empty() const { return implications_.empty(); }
  const std::vector<ObjectImplication>& implications() const { return implications_; }
  auto begin() const { return implications_.begin(); }
  auto end() const { return implications_.end(); }

  /// Smallest superset of `objects` respecting every implication.
  ObjectSet closure(const ObjectSet& objects) const;
  bool is_closed(const ObjectSet& objects) const;

private:
  std::vector<ObjectImplication> implications_;
};

/// A -> B holds in K iff A' ⊆ B'.
bool implication_holds(const FormalContext& context, const ObjectImplication& implication);

inline ObjectSet theory_closure(const ImplicationTheory& theory, const ObjectSet& objects) {
  return theory.closure(objects);
}

}  // namespace conscale
