#include "conscale/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "conscale/errors.hpp"
#include "conscale/ideal.hpp"

namespace conscale {

namespace {

void require_same_ground(const ClosureFamily& a, const ClosureFamily& b) {
  if (a.ground_size() != b.ground_size()) throw ContractError("closure families over different ground sets");
}

void require_within(const ClosureFamily& r, const ClosureFamily& extents) {
  require_same_ground(r, extents);
  if (!r.is_subfamily_of(extents)) throw ContractError("family is not an element of the ideal below Ext(K)");
}

std::string describe(const ClosureFamily& f) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f.members()[i].to_string();
  os << "}";
  return os.str();
}

}  // namespace

std::vector<ClosureFamily> enumerate_ideal(const ClosureFamily& extents, const OracleBounds& bounds) {
  EnumeratedIdeal ideal(extents, bounds, /*elements_only=*/true);
  std::vector<ClosureFamily> out;
  out.reserve(ideal.size());
  for (std::size_t i = 0; i < ideal.size(); ++i) out.push_back(ideal.family(i));
  return out;
}

bool covers(const ClosureFamily& lower, const ClosureFamily& upper) {
  require_same_ground(lower, upper);
  if (upper.size() != lower.size() + 1 || !lower.is_subfamily_of(upper)) return false;
  const auto added = std::find_if(upper.begin(), upper.end(), [&](const ObjectSet& m) { return !lower.contains(m); });
  const auto irreducible = upper.meet_irreducible_members();
  return std::find(irreducible.begin(), irreducible.end(), *added) != irreducible.end();
}

std::vector<ClosureFamily> join_irreducibles(const ClosureFamily& extents) {
  std::vector<ClosureFamily> out;
  const ObjectSet top = extents.ground();
  for (const auto& a : extents)
    if (a != top) out.push_back(ClosureFamily(extents.ground_size(), {top, a}));
  return out;
}

ClosureFamily model_family(const ClosureFamily& extents, const ObjectSet& premise, const ObjectSet& conclusion) {
  std::vector<ObjectSet> models;
  for (const auto& d : extents)
    if (!premise.is_subset_of(d) || conclusion.is_subset_of(d)) models.push_back(d);
  return ClosureFamily(extents.ground_size(), std::move(models));
}

std::vector<IdealElementDescriptor> meet_irreducibles(const ClosureFamily& extents) {
  std::vector<IdealElementDescriptor> out;
  for (const auto& a : extents) {
    const auto covers_of_a = extents.upper_covers(a);
    for (std::size_t i = 0; i < extents.ground_size(); ++i) {
      if (a.test(i)) continue;
      ObjectSet seed = a;
      seed.set(i);
      const ObjectSet b = extents.close(seed);
      if (std::find(covers_of_a.begin(), covers_of_a.end(), b) == covers_of_a.end()) continue;
      ObjectSet single(extents.ground_size());
      single.set(i);
      auto family = model_family(extents, a, single);
      const bool seen = std::any_of(out.begin(), out.end(), [&](const IdealElementDescriptor& d) { return d.family == family; });
      if (seen) continue;
      IdealElementDescriptor d{std::move(family), true, false, IdealElementDescriptor::GeneratorPair{a, i}};
      d.is_join_irreducible = d.family.size() == 2;
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::size_t count_meet_irreducibles(const ClosureFamily& extents) { return meet_irreducibles(extents).size(); }

ClosureFamily ideal_meet(const ClosureFamily& a, const ClosureFamily& b) {
  require_same_ground(a, b);
  std::vector<ObjectSet> common;
  for (const auto& m : a)
    if (b.contains(m)) common.push_back(m);
  return ClosureFamily(a.ground_size(), std::move(common));
}

ClosureFamily ideal_join(const ClosureFamily& a, const ClosureFamily& b) {
  require_same_ground(a, b);
  std::vector<ObjectSet> all(a.members());
  all.insert(all.end(), b.begin(), b.end());
  return ClosureFamily::generated_by(a.ground_size(), std::move(all));
}

ClosureFamily join_complement(const ClosureFamily& r, const ClosureFamily& extents) {
  require_within(r, extents);
  const auto in_r = r.meet_irreducible_members();
  std::vector<ObjectSet> missing;
  for (auto& m : extents.meet_irreducible_members())
    if (std::find(in_r.begin(), in_r.end(), m) == in_r.end()) missing.push_back(std::move(m));
  return ClosureFamily::generated_by(extents.ground_size(), std::move(missing));
}

InducedClosure induced_closure_operator(const ClosureFamily& r) { return InducedClosure(r); }

namespace {

/// One sweep of the triple condition; returns members to add, empty if none.
std::vector<ObjectSet> neutrality_violations(const ClosureFamily& r, const ClosureFamily& extents) {
  std::vector<ObjectSet> missing;
  const auto& ext = extents.members();
  for (std::size_t i = 0; i < ext.size(); ++i)
    for (std::size_t j = i + 1; j < ext.size(); ++j) {
      const auto& a = ext[i];
      const auto& b = ext[j];
      if (a.is_subset_of(b) || b.is_subset_of(a)) continue;
      const ObjectSet c = a & b;
      const bool ha = r.contains(a), hb = r.contains(b), hc = r.contains(c);
      if ((ha || hb || hc) && !(ha && hb && hc)) {
        if (!ha) missing.push_back(a);
        if (!hb) missing.push_back(b);
        if (!hc) missing.push_back(c);
      }
    }
  return missing;
}

}  // namespace

bool is_neutral(const ClosureFamily& r, const ClosureFamily& extents) {
  require_within(r, extents);
  return neutrality_violations(r, extents).empty();
}

ClosureFamily neutral_closure(const ClosureFamily& r, const ClosureFamily& extents) {
  require_within(r, extents);
  ClosureFamily current = r;
  while (true) {
    auto missing = neutrality_violations(current, extents);
    if (missing.empty()) return current;
    missing.insert(missing.end(), current.begin(), current.end());
    current = ClosureFamily::generated_by(extents.ground_size(), std::move(missing));
  }
}

std::vector<ClosureFamily> neutral_elements(const ClosureFamily& extents, const OracleBounds& bounds) {
  std::vector<ClosureFamily> out;
  for (const auto& seed : enumerate_ideal(extents, bounds)) {
    auto fixpoint = neutral_closure(seed, extents);
    if (std::find(out.begin(), out.end(), fixpoint) == out.end()) out.push_back(std::move(fixpoint));
  }
  return out;
}

bool PropertyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

PropertyReport property_suite(const ClosureFamily& extents, const OracleBounds& bounds) {
  EnumeratedIdeal ideal(extents, bounds);
  if (!ideal.has_tables())
    throw BoundExceeded("property suite refused: ideal has " + std::to_string(ideal.size()) + " elements, bound is " +
                        std::to_string(bounds.max_ideal_elements));
  const std::size_t n = ideal.size();
  const std::size_t top = ideal.top();
  PropertyReport report{extents.size(), n, {}};
  auto fam = [&](std::size_t i) { return describe(ideal.family(i)); };

  {
    // x∨y = x∨z ⇒ x∨y = x∨(y∧z); equivalently every join class of x is closed under meets.
    PropertyResult res{"join-semidistributive", true, {}};
    std::vector<std::size_t> acc(n);
    std::vector<bool> seen(n);
    for (std::size_t x = 0; x < n && res.passed; ++x) {
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t y = 0; y < n; ++y) {
        const auto v = ideal.join(x, y);
        acc[v] = seen[v] ? ideal.meet(acc[v], y) : y;
        seen[v] = true;
      }
      for (std::size_t v = 0; v < n && res.passed; ++v)
        if (seen[v] && ideal.join(x, acc[v]) != v) {
          res.passed = false;
          res.witness = "x=" + fam(x) + " join class " + fam(v) + " not closed under meet";
        }
    }
    report.results.push_back(res);
  }
  {
    PropertyResult res{"lower-semimodular", true, {}};
    for (std::size_t x = 0; x < n && res.passed; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (ideal.is_cover(x, ideal.join(x, y)) && !ideal.is_cover(ideal.meet(x, y), y)) {
          res.passed = false;
          res.witness = "x=" + fam(x) + " y=" + fam(y);
          break;
        }
    report.results.push_back(res);
  }
  {
    // Every interval [meet of lower covers of y, y] is Boolean.
    PropertyResult res{"meet-distributive", true, {}};
    for (std::size_t y = 0; y < n && res.passed; ++y) {
      const auto& lc = ideal.lower_covers(y);
      std::size_t m = y;
      for (auto c : lc) m = ideal.meet(m, c);
      std::size_t interval = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (ideal.leq(m, z) && ideal.leq(z, y)) ++interval;
      if (lc.size() >= 63 || interval != (std::size_t{1} << lc.size())) {
        res.passed = false;
        res.witness = "interval below " + fam(y) + " is not Boolean";
      }
    }
    report.results.push_back(res);
  }
  {
    PropertyResult res{"join-pseudocomplemented", true, {}};
    for (std::size_t x = 0; x < n && res.passed; ++x) {
      std::size_t least = top;
      for (std::size_t y = 0; y < n; ++y)
        if (ideal.join(x, y) == top) least = ideal.meet(least, y);
      const auto complement = ideal.index_of(join_complement(ideal.family(x), extents));
      if (ideal.join(x, least) != top) {
        res.passed = false;
        res.witness = "no least complement for " + fam(x);
      } else if (complement != least) {
        res.passed = false;
        res.witness = "join_complement(" + fam(x) + ") differs from least complement " + fam(least);
      }
    }
    report.results.push_back(res);
  }
  {
    PropertyResult res{"ranked", true, {}};
    for (std::size_t y = 0; y < n && res.passed; ++y)
      for (auto x : ideal.lower_covers(y))
        if (ideal.cardinality(x) + 1 != ideal.cardinality(y)) {
          res.passed = false;
          res.witness = fam(x) + " ≺ " + fam(y) + " breaks rank |R|-1";
          break;
        }
    report.results.push_back(res);
  }
  {
    PropertyResult res{"atomistic", true, {}};
    const std::size_t bottom = ideal.bottom();
    std::vector<std::size_t> atoms;
    for (std::size_t i = 0; i < n; ++i)
      if (ideal.is_cover(bottom, i)) atoms.push_back(i);
    for (std::size_t x = 0; x < n && res.passed; ++x) {
      std::size_t j = bottom;
      for (auto a : atoms)
        if (ideal.leq(a, x)) j = ideal.join(j, a);
      if (j != x) {
        res.passed = false;
        res.witness = fam(x) + " is not a join of atoms";
      }
    }
    report.results.push_back(res);
  }
  return report;
}

}  // namespace conscale
