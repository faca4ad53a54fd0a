#include "conscale/implication.hpp"

#include <algorithm>

namespace conscale {

ImplicationTheory::ImplicationTheory(std::vector<ObjectImplication> implications) {
  for (auto& imp : implications) add(std::move(imp));
}

bool ImplicationTheory::add(ObjectImplication implication) {
  if (std::find(implications_.begin(), implications_.end(), implication) != implications_.end()) return false;
  implications_.push_back(std::move(implication));
  return true;
}

ObjectSet ImplicationTheory::closure(const ObjectSet& objects) const {
  ObjectSet result = objects;
  // Plain fixpoint iteration; theories here stay small enough that LinClosure does not pay off.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& imp : implications_) {
      if (imp.premise.is_subset_of(result) && !imp.conclusion.is_subset_of(result)) {
        result |= imp.conclusion;
        changed = true;
      }
    }
  }
  return result;
}

bool ImplicationTheory::is_closed(const ObjectSet& objects) const {
  return std::all_of(implications_.begin(), implications_.end(), [&](const ObjectImplication& imp) {
    return !imp.premise.is_subset_of(objects) || imp.conclusion.is_subset_of(objects);
  });
}

bool implication_holds(const FormalContext& context, const ObjectImplication& implication) {
  return context.intent_of(implication.premise).is_subset_of(context.intent_of(implication.conclusion));
}

}  // namespace conscale
