#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conscale/bitset.hpp"

namespace conscale {

using ObjectSet = BitSet;
using AttributeSet = BitSet;

struct FormalConcept {
  ObjectSet extent;
  AttributeSet intent;

  friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

struct ContextOptions {
  /// Scale contexts may start with no attributes at all.
  bool allow_empty_attributes = false;
};

/// A formal context (G, M, I) with explicitly ordered objects and attributes.
///
/// Incidence is stored twice: one attribute row per object and one object
/// column per attribute, so both derivations are word-parallel intersections.
class FormalContext {
public:
  using Options = ContextOptions;

  FormalContext() = default;
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                const std::vector<std::pair<std::size_t, std::size_t>>& incidence, Options options = {});
  /// Builds from per-object attribute rows.
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                std::vector<AttributeSet> rows, Options options = {});
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                std::vector<AttributeSet> rows, std::string name, Options options = {});

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool incident(std::size_t g, std::size_t m) const { return rows_[g].test(m); }
  const AttributeSet& row(std::size_t g) const { return rows_[g]; }
  const ObjectSet& column(std::size_t m) const { return columns_[m]; }
  std::size_t incidence_count() const;

  /// A' for an object set A.
  AttributeSet intent_of(const ObjectSet& objects) const;
  /// B' for an attribute set B.
  ObjectSet extent_of(const AttributeSet& attributes) const;
  ObjectSet closure(const ObjectSet& objects) const { return extent_of(intent_of(objects)); }
  AttributeSet attribute_closure(const AttributeSet& attributes) const { return intent_of(extent_of(attributes)); }
  bool is_extent(const ObjectSet& objects) const { return closure(objects) == objects; }

  ObjectSet all_objects() const { return ObjectSet::full(object_count()); }
  AttributeSet all_attributes() const { return AttributeSet::full(attribute_count()); }
  ObjectSet no_objects() const { return ObjectSet(object_count()); }
  AttributeSet no_attributes() const { return AttributeSet(attribute_count()); }

  std::size_t object_index(const std::string& name) const;
  std::size_t attribute_index(const std::string& name) const;
  ObjectSet object_set(const std::vector<std::string>& names) const;
  AttributeSet attribute_set(const std::vector<std::string>& names) const;
  std::vector<std::string> object_names(const ObjectSet& objects) const;
  std::vector<std::string> attribute_names(const AttributeSet& attributes) const;

  /// Same context with objects permuted into `order` (which must list every object once).
  FormalContext with_object_order(const std::vector<std::string>& order) const;

  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
  }

private:
  void validate(const Options& options) const;
  void build_columns();

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> columns_;
};

/// "{a, b}" rendering of a named subset, in ground-set order.
std::string render_set(const std::vector<std::string>& names);

}  // namespace conscale
