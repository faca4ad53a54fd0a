#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "conscale/context.hpp"
#include "conscale/implication.hpp"

namespace conscale {

using ClosureOperator = std::function<ObjectSet(const ObjectSet&)>;

/// Lectically next closed set after `current`, or nullopt once `current` is
/// the full ground set. Throws ContractError if `current` is not closed.
std::optional<ObjectSet> next_closure(const ObjectSet& current, const ClosureOperator& close);

/// Same step without the closedness check. Exploration-style algorithms call
/// this right after adding an implication whose premise is `current`.
std::optional<ObjectSet> next_closure_step(const ObjectSet& current, const ClosureOperator& close);

/// All closed sets of `close` on a ground set of `size` elements, in lectic order.
std::vector<ObjectSet> all_closed_sets(std::size_t size, const ClosureOperator& close);

/// All extents of the context, in lectic order.
std::vector<ObjectSet> extents(const FormalContext& context);

/// All formal concepts, ordered lectically by extent.
std::vector<FormalConcept> concepts(const FormalContext& context);

/// Duquenne-Guigues base of the object implications valid in the context:
/// pseudo-closed premises, conclusions their closures.
ImplicationTheory object_canonical_base(const FormalContext& context);

}  // namespace conscale
