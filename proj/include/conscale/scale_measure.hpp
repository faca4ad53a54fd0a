#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conscale/closure_family.hpp"
#include "conscale/context.hpp"

namespace conscale {

/// A map σ from the objects of a base context K into the objects of a scale S.
/// Validity is a separate question answered by is_scale_measure().
struct ScaleMeasure {
  FormalContext base;
  FormalContext scale;
  /// sigma[g] = index of σ(g) among the scale's objects.
  std::vector<std::size_t> sigma;

  /// σ = id; requires the scale's objects to be the base objects in the same order.
  static ScaleMeasure identity(FormalContext base, FormalContext scale);
  /// σ given by object name mapping base -> scale.
  static ScaleMeasure with_map(FormalContext base, FormalContext scale,
                               const std::vector<std::pair<std::string, std::string>>& mapping);

  bool is_identity() const;
  /// σ⁻¹(A) for an object set of the scale.
  ObjectSet preimage(const ObjectSet& scale_objects) const;
};

/// Raised when a scale extent pulls back to a non-extent of K.
class InvalidScaleMeasure : public std::runtime_error {
public:
  InvalidScaleMeasure(std::string message, ObjectSet scale_extent)
      : std::runtime_error(std::move(message)), witness_(std::move(scale_extent)) {}
  /// Extent A of S with σ⁻¹(A) ∉ Ext(K).
  const ObjectSet& witness() const { return witness_; }

private:
  ObjectSet witness_;
};

/// A scale extent whose preimage is not an extent of K, if any.
std::optional<ObjectSet> find_violation(const ScaleMeasure& sm);
bool is_scale_measure(const ScaleMeasure& sm);

/// σ⁻¹(Ext(S)); throws InvalidScaleMeasure if sm is not a scale-measure.
ClosureFamily reflected_extents(const ScaleMeasure& sm);

/// (G, family, ∈), attributes named by the rendered extent.
FormalContext canonical_scale(const std::vector<std::string>& objects, const ClosureFamily& family);

/// (id, canonical scale of the reflected extents).
ScaleMeasure canonical_representation(const ScaleMeasure& sm);

enum class ScaleOrder { finer, coarser, equivalent, incomparable };
const char* to_string(ScaleOrder order);

/// Position of `a` relative to `b` in the scale hierarchy.
ScaleOrder compare(const ScaleMeasure& a, const ScaleMeasure& b);

/// Conjunction of base attributes whose extent in K is a reflected extent.
struct LogicalAttribute {
  std::string label;
  AttributeSet source_attributes;
  ObjectSet extent;
};

struct ConjunctiveScale {
  ScaleMeasure measure;
  std::vector<LogicalAttribute> attributes;
};

/// "m1∧m2∧…" over the given attributes; "⊤" for the empty conjunction.
std::string conjunction_label(const FormalContext& base, const AttributeSet& attributes);

ConjunctiveScale conjunctive_normalform(const ScaleMeasure& sm);

/// Side-by-side combination of scale-measures on the same base context.
ScaleMeasure apposition(const std::vector<ScaleMeasure>& measures);

}  // namespace conscale
