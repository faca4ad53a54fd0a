#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conscale/context.hpp"

namespace conscale {

/// Non-negative exact fraction, always reduced.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct ConceptScore {
  FormalConcept formal_concept;
  Rational score;
};

/// Returns nullopt where the measure is undefined for a concept.
using ConceptMeasure = std::function<std::optional<Rational>(const FormalContext&, const FormalConcept&)>;

class UndefinedScore : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// |A|·|B| divided by the number of incidences in the rows of A and the columns of B.
/// Throws UndefinedScore for an empty extent or intent.
Rational separation_index(const FormalContext& context, const FormalConcept& formal_concept);

/// Name-keyed measures available to the ranking and the automatic expert.
class MeasureRegistry {
public:
  static MeasureRegistry& global();

  void add(std::string name, ConceptMeasure measure);
  bool contains(const std::string& name) const { return measures_.contains(name); }
  const ConceptMeasure& get(const std::string& name) const;
  std::vector<std::string> names() const;

private:
  MeasureRegistry();
  std::map<std::string, ConceptMeasure> measures_;
};

/// Top-k concepts by descending score; ties broken by lectic order of extents.
std::vector<ConceptScore> rank_concepts(const FormalContext& context, const ConceptMeasure& measure, std::size_t k);
std::vector<ConceptScore> rank_concepts(const FormalContext& context, const std::string& measure, std::size_t k);

}  // namespace conscale
