#include "conscale/importance.hpp"

#include <algorithm>
#include <numeric>

#include "conscale/closure.hpp"
#include "conscale/errors.hpp"

namespace conscale {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0 || numerator < 0) throw std::invalid_argument("Rational needs numerator >= 0 and denominator > 0");
  const auto g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {
__extension__ using wide = __int128;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<wide>(a.num_) * b.den_ <=> static_cast<wide>(b.num_) * a.den_;
}

Rational separation_index(const FormalContext& context, const FormalConcept& formal_concept) {
  if (formal_concept.extent.none() || formal_concept.intent.none())
    throw UndefinedScore("separation index is undefined for a concept with empty extent or intent");
  const auto a = static_cast<std::int64_t>(formal_concept.extent.count());
  const auto b = static_cast<std::int64_t>(formal_concept.intent.count());
  std::int64_t touched = 0;
  formal_concept.extent.for_each([&](std::size_t g) { touched += static_cast<std::int64_t>(context.row(g).count()); });
  formal_concept.intent.for_each([&](std::size_t m) { touched += static_cast<std::int64_t>(context.column(m).count()); });
  return Rational(a * b, touched - a * b);
}

MeasureRegistry::MeasureRegistry() {
  add("separation", [](const FormalContext& ctx, const FormalConcept& c) -> std::optional<Rational> {
    if (c.extent.none() || c.intent.none()) return std::nullopt;
    return separation_index(ctx, c);
  });
}

MeasureRegistry& MeasureRegistry::global() {
  static MeasureRegistry registry;
  return registry;
}

void MeasureRegistry::add(std::string name, ConceptMeasure measure) { measures_[std::move(name)] = std::move(measure); }

const ConceptMeasure& MeasureRegistry::get(const std::string& name) const {
  const auto it = measures_.find(name);
  if (it == measures_.end()) throw DomainError("unknown importance measure '" + name + "'");
  return it->second;
}

std::vector<std::string> MeasureRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : measures_) out.push_back(name);
  return out;
}

std::vector<ConceptScore> rank_concepts(const FormalContext& context, const ConceptMeasure& measure, std::size_t k) {
  if (k == 0) throw std::invalid_argument("rank_concepts needs k >= 1");
  std::vector<ConceptScore> scored;
  for (auto& c : concepts(context)) {
    auto s = measure(context, c);
    if (s) scored.push_back({std::move(c), *s});
  }
  std::stable_sort(scored.begin(), scored.end(), [](const ConceptScore& x, const ConceptScore& y) {
    if (x.score != y.score) return x.score > y.score;
    return lectic_less(x.formal_concept.extent, y.formal_concept.extent);
  });
  if (scored.size() > k) scored.resize(k);
  return scored;
}

std::vector<ConceptScore> rank_concepts(const FormalContext& context, const std::string& measure, std::size_t k) {
  return rank_concepts(context, MeasureRegistry::global().get(measure), k);
}

}  // namespace conscale
