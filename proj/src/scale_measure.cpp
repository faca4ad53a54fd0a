#include "conscale/scale_measure.hpp"

#include <set>
#include <unordered_set>

#include "conscale/closure.hpp"
#include "conscale/errors.hpp"

namespace conscale {

ScaleMeasure ScaleMeasure::identity(FormalContext base, FormalContext scale) {
  if (base.objects() != scale.objects())
    throw ContractError("identity scale-measure needs the scale to have the base objects in the same order");
  std::vector<std::size_t> sigma(base.object_count());
  for (std::size_t g = 0; g < sigma.size(); ++g) sigma[g] = g;
  return {std::move(base), std::move(scale), std::move(sigma)};
}

ScaleMeasure ScaleMeasure::with_map(FormalContext base, FormalContext scale,
                                    const std::vector<std::pair<std::string, std::string>>& mapping) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> sigma(base.object_count(), unset);
  for (const auto& [from, to] : mapping) {
    const auto g = base.object_index(from);
    if (sigma[g] != unset) throw ContractError("object '" + from + "' mapped twice");
    sigma[g] = scale.object_index(to);
  }
  for (std::size_t g = 0; g < sigma.size(); ++g)
    if (sigma[g] == unset) throw ContractError("sigma is not total: object '" + base.objects()[g] + "' is unmapped");
  return {std::move(base), std::move(scale), std::move(sigma)};
}

bool ScaleMeasure::is_identity() const {
  if (base.objects() != scale.objects()) return false;
  for (std::size_t g = 0; g < sigma.size(); ++g)
    if (sigma[g] != g) return false;
  return true;
}

ObjectSet ScaleMeasure::preimage(const ObjectSet& scale_objects) const {
  ObjectSet out = base.no_objects();
  for (std::size_t g = 0; g < sigma.size(); ++g)
    if (scale_objects.test(sigma[g])) out.set(g);
  return out;
}

namespace {

void require_total(const ScaleMeasure& sm) {
  if (sm.sigma.size() != sm.base.object_count()) throw ContractError("sigma is not total on the base objects");
  for (auto t : sm.sigma)
    if (t >= sm.scale.object_count()) throw ContractError("sigma maps outside the scale's objects");
}

}  // namespace

std::optional<ObjectSet> find_violation(const ScaleMeasure& sm) {
  require_total(sm);
  for (const auto& a : extents(sm.scale))
    if (!sm.base.is_extent(sm.preimage(a))) return a;
  return std::nullopt;
}

bool is_scale_measure(const ScaleMeasure& sm) { return !find_violation(sm).has_value(); }

ClosureFamily reflected_extents(const ScaleMeasure& sm) {
  require_total(sm);
  std::vector<ObjectSet> reflected;
  for (const auto& a : extents(sm.scale)) {
    auto pre = sm.preimage(a);
    if (!sm.base.is_extent(pre))
      throw InvalidScaleMeasure("not a scale-measure: scale extent " + render_set(sm.scale.object_names(a)) +
                                    " pulls back to " + render_set(sm.base.object_names(pre)) +
                                    ", which is not an extent of the base context",
                                a);
    reflected.push_back(std::move(pre));
  }
  return ClosureFamily(sm.base.object_count(), std::move(reflected));
}

FormalContext canonical_scale(const std::vector<std::string>& objects, const ClosureFamily& family) {
  if (family.ground_size() != objects.size()) throw ContractError("family ground set does not match object list");
  std::vector<std::string> attributes;
  std::vector<AttributeSet> rows(objects.size(), AttributeSet(family.size()));
  for (std::size_t j = 0; j < family.size(); ++j) {
    const auto& member = family.members()[j];
    std::vector<std::string> names;
    member.for_each([&](std::size_t g) {
      names.push_back(objects[g]);
      rows[g].set(j);
    });
    attributes.push_back(render_set(names));
  }
  return FormalContext(objects, std::move(attributes), std::move(rows));
}

ScaleMeasure canonical_representation(const ScaleMeasure& sm) {
  auto family = reflected_extents(sm);
  return ScaleMeasure::identity(sm.base, canonical_scale(sm.base.objects(), family));
}

const char* to_string(ScaleOrder order) {
  switch (order) {
    case ScaleOrder::finer: return "finer";
    case ScaleOrder::coarser: return "coarser";
    case ScaleOrder::equivalent: return "equivalent";
    case ScaleOrder::incomparable: return "incomparable";
  }
  return "?";
}

ScaleOrder compare(const ScaleMeasure& a, const ScaleMeasure& b) {
  if (!(a.base == b.base)) throw ContractError("scale-measures over different base contexts");
  const auto ra = reflected_extents(a);
  const auto rb = reflected_extents(b);
  const bool a_finer = rb.is_subfamily_of(ra);
  const bool b_finer = ra.is_subfamily_of(rb);
  if (a_finer && b_finer) return ScaleOrder::equivalent;
  if (a_finer) return ScaleOrder::finer;
  if (b_finer) return ScaleOrder::coarser;
  return ScaleOrder::incomparable;
}

std::string conjunction_label(const FormalContext& base, const AttributeSet& attributes) {
  if (attributes.none()) return "⊤";
  std::string label;
  attributes.for_each([&](std::size_t m) {
    if (!label.empty()) label += "∧";
    label += base.attributes()[m];
  });
  return label;
}

ConjunctiveScale conjunctive_normalform(const ScaleMeasure& sm) {
  const auto family = reflected_extents(sm);
  const auto& base = sm.base;
  ConjunctiveScale out;
  std::vector<std::string> labels;
  std::vector<AttributeSet> rows(base.object_count(), AttributeSet(family.size()));
  for (std::size_t j = 0; j < family.size(); ++j) {
    const auto& extent = family.members()[j];
    auto intent = base.intent_of(extent);
    auto label = conjunction_label(base, intent);
    labels.push_back(label);
    extent.for_each([&](std::size_t g) { rows[g].set(j); });
    out.attributes.push_back({std::move(label), std::move(intent), extent});
  }
  out.measure = ScaleMeasure::identity(base, FormalContext(base.objects(), std::move(labels), std::move(rows)));
  return out;
}

ScaleMeasure apposition(const std::vector<ScaleMeasure>& measures) {
  if (measures.empty()) throw ContractError("apposition of an empty list");
  const auto& base = measures.front().base;
  std::vector<FormalContext> parts;
  for (const auto& sm : measures) {
    if (!(sm.base == base)) throw ContractError("apposition of scale-measures over different base contexts");
    if (sm.is_identity()) {
      if (!is_scale_measure(sm)) reflected_extents(sm);  // throws with a witness
      parts.push_back(sm.scale);
    } else {
      parts.push_back(canonical_representation(sm).scale);
    }
  }

  std::set<std::string> names;
  bool collision = false;
  std::size_t total = 0;
  for (const auto& p : parts)
    for (const auto& m : p.attributes()) {
      collision = collision || !names.insert(m).second;
      ++total;
    }

  std::vector<std::string> attributes;
  std::vector<AttributeSet> rows(base.object_count(), AttributeSet(total));
  std::size_t offset = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const auto& p = parts[j];
    for (std::size_t m = 0; m < p.attribute_count(); ++m) {
      attributes.push_back(collision ? std::to_string(j) + "." + p.attributes()[m] : p.attributes()[m]);
      for (std::size_t g = 0; g < base.object_count(); ++g)
        if (p.incident(g, m)) rows[g].set(offset + m);
    }
    offset += p.attribute_count();
  }
  FormalContext scale(base.objects(), std::move(attributes), std::move(rows), {.allow_empty_attributes = true});
  return ScaleMeasure::identity(base, std::move(scale));
}

}  // namespace conscale
