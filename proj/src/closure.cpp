#include "conscale/closure.hpp"

#include "conscale/errors.hpp"

namespace conscale {

std::optional<ObjectSet> next_closure_step(const ObjectSet& current, const ClosureOperator& close) {
  const std::size_t n = current.size();
  for (std::size_t k = n; k-- > 0;) {
    if (current.test(k)) continue;
    ObjectSet seed = current.prefix(k);
    seed.set(k);
    ObjectSet candidate = close(seed);
    // Accept only if nothing lectically more significant than k was added.
    if ((candidate - current).prefix(k).none()) return candidate;
  }
  return std::nullopt;
}

std::optional<ObjectSet> next_closure(const ObjectSet& current, const ClosureOperator& close) {
  if (close(current) != current) throw ContractError("next_closure: current set is not closed");
  return next_closure_step(current, close);
}

std::vector<ObjectSet> all_closed_sets(std::size_t size, const ClosureOperator& close) {
  std::vector<ObjectSet> out;
  std::optional<ObjectSet> a = close(ObjectSet(size));
  while (a) {
    out.push_back(*a);
    a = next_closure_step(*a, close);
  }
  return out;
}

std::vector<ObjectSet> extents(const FormalContext& context) {
  return all_closed_sets(context.object_count(), [&](const ObjectSet& s) { return context.closure(s); });
}

std::vector<FormalConcept> concepts(const FormalContext& context) {
  std::vector<FormalConcept> out;
  for (auto& e : extents(context)) {
    auto intent = context.intent_of(e);
    out.push_back({std::move(e), std::move(intent)});
  }
  return out;
}

ImplicationTheory object_canonical_base(const FormalContext& context) {
  ImplicationTheory base;
  const auto close = [&](const ObjectSet& s) { return base.closure(s); };
  std::optional<ObjectSet> a = ObjectSet(context.object_count());
  while (a && !a->all()) {
    auto closed = context.closure(*a);
    if (closed != *a) base.add({*a, std::move(closed)});
    a = next_closure_step(*a, close);
  }
  return base;
}

}  // namespace conscale
