#include "conscale/context.hpp"

#include <unordered_set>

#include "conscale/errors.hpp"

namespace conscale {

namespace {

void check_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw DomainError(std::string("duplicate ") + what + " name '" + n + "'");
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             const std::vector<std::pair<std::size_t, std::size_t>>& incidence, Options options)
    : objects_(std::move(objects)), attributes_(std::move(attributes)) {
  rows_.assign(objects_.size(), AttributeSet(attributes_.size()));
  for (auto [g, m] : incidence) {
    if (g >= objects_.size() || m >= attributes_.size())
      throw DomainError("incidence pair references an undeclared object or attribute");
    rows_[g].set(m);
  }
  validate(options);
  build_columns();
}

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<AttributeSet> rows, Options options)
    : FormalContext(std::move(objects), std::move(attributes), std::move(rows), std::string{}, options) {}

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<AttributeSet> rows, std::string name, Options options)
    : name_(std::move(name)), objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
  if (rows_.size() != objects_.size()) throw DomainError("row count does not match object count");
  for (const auto& r : rows_)
    if (r.size() != attributes_.size()) throw DomainError("row width does not match attribute count");
  validate(options);
  build_columns();
}

void FormalContext::validate(const Options& options) const {
  if (objects_.empty()) throw DomainError("a formal context needs at least one object");
  if (attributes_.empty() && !options.allow_empty_attributes)
    throw DomainError("a formal context needs at least one attribute");
  check_unique(objects_, "object");
  check_unique(attributes_, "attribute");
}

void FormalContext::build_columns() {
  columns_.assign(attributes_.size(), ObjectSet(objects_.size()));
  for (std::size_t g = 0; g < rows_.size(); ++g) rows_[g].for_each([&](std::size_t m) { columns_[m].set(g); });
}

std::size_t FormalContext::incidence_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

AttributeSet FormalContext::intent_of(const ObjectSet& objects) const {
  AttributeSet out = all_attributes();
  objects.for_each([&](std::size_t g) { out &= rows_[g]; });
  return out;
}

ObjectSet FormalContext::extent_of(const AttributeSet& attributes) const {
  ObjectSet out = all_objects();
  attributes.for_each([&](std::size_t m) { out &= columns_[m]; });
  return out;
}

std::size_t FormalContext::object_index(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  throw DomainError("unknown object '" + name + "'");
}

std::size_t FormalContext::attribute_index(const std::string& name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i)
    if (attributes_[i] == name) return i;
  throw DomainError("unknown attribute '" + name + "'");
}

ObjectSet FormalContext::object_set(const std::vector<std::string>& names) const {
  ObjectSet s = no_objects();
  for (const auto& n : names) s.set(object_index(n));
  return s;
}

AttributeSet FormalContext::attribute_set(const std::vector<std::string>& names) const {
  AttributeSet s = no_attributes();
  for (const auto& n : names) s.set(attribute_index(n));
  return s;
}

std::vector<std::string> FormalContext::object_names(const ObjectSet& objects) const {
  std::vector<std::string> out;
  objects.for_each([&](std::size_t g) { out.push_back(objects_[g]); });
  return out;
}

std::vector<std::string> FormalContext::attribute_names(const AttributeSet& attributes) const {
  std::vector<std::string> out;
  attributes.for_each([&](std::size_t m) { out.push_back(attributes_[m]); });
  return out;
}

FormalContext FormalContext::with_object_order(const std::vector<std::string>& order) const {
  if (order.size() != objects_.size())
    throw DomainError("object order must list all " + std::to_string(objects_.size()) + " objects exactly once");
  std::vector<AttributeSet> rows;
  rows.reserve(order.size());
  ObjectSet seen = no_objects();
  for (const auto& name : order) {
    const auto g = object_index(name);
    if (seen.test(g)) throw DomainError("object '" + name + "' listed twice in object order");
    seen.set(g);
    rows.push_back(rows_[g]);
  }
  return FormalContext(order, attributes_, std::move(rows), name_, {.allow_empty_attributes = true});
}

std::string render_set(const std::vector<std::string>& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i != 0) s += ", ";
    s += names[i];
  }
  return s + "}";
}

}  // namespace conscale
