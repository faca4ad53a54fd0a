#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conscale/closure_family.hpp"

namespace conscale {

/// Defaults for the brute-force (oracle-grade) operations over ↓Ext(K).
struct OracleBounds {
  /// enumerate_ideal scans 2^(extents-1) subfamilies.
  std::size_t max_extents = 16;
  /// Table-driven checks keep |ideal|² join/meet entries.
  std::size_t max_ideal_elements = 2048;
};

/// An element of ↓Ext(K) together with its irreducibility flags.
struct IdealElementDescriptor {
  ClosureFamily family;
  bool is_meet_irreducible = false;
  bool is_join_irreducible = false;
  /// (A, i) such that family = F_{A,{i}} restricted to Ext(K); set iff meet-irreducible.
  struct GeneratorPair {
    ObjectSet premise;
    std::size_t object;
  };
  std::optional<GeneratorPair> generator_pair;
};

/// The whole ideal ↓Ext(K) by brute force. Refuses more than `bounds.max_extents` extents.
std::vector<ClosureFamily> enumerate_ideal(const ClosureFamily& extents, const OracleBounds& bounds = {});

/// lower ≺ upper in ↓Ext(K): upper adds exactly one member that is meet-irreducible in upper.
bool covers(const ClosureFamily& lower, const ClosureFamily& upper);

/// Atoms {G, A} for every extent A ≠ G.
std::vector<ClosureFamily> join_irreducibles(const ClosureFamily& extents);

/// Extents that are models of A -> B: {D ∈ Ext(K) | A ⊄ D or B ⊆ D}.
ClosureFamily model_family(const ClosureFamily& extents, const ObjectSet& premise, const ObjectSet& conclusion);

/// Meet-irreducibles of ↓Ext(K), one per cover pair A ≺ (A ∪ {i})'' of the extent lattice.
std::vector<IdealElementDescriptor> meet_irreducibles(const ClosureFamily& extents);

std::size_t count_meet_irreducibles(const ClosureFamily& extents);

ClosureFamily ideal_meet(const ClosureFamily& a, const ClosureFamily& b);
ClosureFamily ideal_join(const ClosureFamily& a, const ClosureFamily& b);

/// Least family whose join with `r` is all of `extents`.
ClosureFamily join_complement(const ClosureFamily& r, const ClosureFamily& extents);

/// A ↦ smallest member of the family containing A.
class InducedClosure {
public:
  explicit InducedClosure(ClosureFamily family) : family_(std::move(family)) {}
  ObjectSet operator()(const ObjectSet& a) const { return family_.close(a); }
  const ClosureFamily& family() const { return family_; }

private:
  ClosureFamily family_;
};

InducedClosure induced_closure_operator(const ClosureFamily& r);

/// Neutrality test over incomparable extent pairs and their intersection.
bool is_neutral(const ClosureFamily& r, const ClosureFamily& extents);

/// Smallest neutral element above `r`, by iterating the triple condition to a fixpoint.
ClosureFamily neutral_closure(const ClosureFamily& r, const ClosureFamily& extents);

/// All neutral elements of ↓Ext(K), in order of first discovery over the enumerated ideal.
std::vector<ClosureFamily> neutral_elements(const ClosureFamily& extents, const OracleBounds& bounds = {});

struct PropertyResult {
  std::string name;
  bool passed = true;
  /// Human-readable counterexample when the property fails.
  std::string witness;
};

struct PropertyReport {
  std::size_t extent_count = 0;
  std::size_t ideal_size = 0;
  std::vector<PropertyResult> results;

  bool all_passed() const;
};

/// Checks join-semidistributivity, lower semimodularity, meet-distributivity,
/// join-pseudocomplementation, rankedness and atomisticity on the enumerated ideal.
PropertyReport property_suite(const ClosureFamily& extents, const OracleBounds& bounds = {});

}  // namespace conscale
