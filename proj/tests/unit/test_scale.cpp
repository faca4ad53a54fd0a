#include <doctest.h>

#include <algorithm>

#include "conscale/closure.hpp"
#include "conscale/errors.hpp"
#include "conscale/importance.hpp"
#include "conscale/lattice.hpp"
#include "conscale/scale_measure.hpp"
#include "support.hpp"

using namespace conscale;

namespace {

ScaleMeasure identity_on(const FormalContext& base) { return ScaleMeasure::identity(base, base); }

ScaleMeasure single_column(const FormalContext& base, const std::vector<std::string>& extent) {
  const auto e = base.object_set(extent);
  std::vector<AttributeSet> rows(base.object_count(), AttributeSet(1));
  e.for_each([&](std::size_t g) { rows[g].set(0); });
  return ScaleMeasure::identity(base, FormalContext(base.objects(), {"s"}, rows));
}

ScaleMeasure from_family(const FormalContext& base, const ClosureFamily& f) {
  return ScaleMeasure::identity(base, canonical_scale(base.objects(), f));
}

}  // namespace

TEST_SUITE("scale measures") {
  TEST_CASE("validity") {
    const auto lb = support::living_beings();
    CHECK(is_scale_measure(ScaleMeasure::identity(lb, support::lb_scale())));
    CHECK(is_scale_measure(identity_on(lb)));
    const auto bad = single_column(lb, {"D", "Co"});
    CHECK_FALSE(is_scale_measure(bad));
    CHECK(find_violation(bad) == lb.object_set({"D", "Co"}));
  }

  TEST_CASE("sigma must be total and well-formed") {
    const auto t = support::tiny();
    CHECK_THROWS_AS(ScaleMeasure::with_map(t, t, {{"1", "1"}, {"2", "2"}}), ContractError);
    CHECK_THROWS_AS(ScaleMeasure::with_map(t, t, {{"1", "1"}, {"1", "2"}, {"3", "3"}}), ContractError);
    CHECK_THROWS_AS(ScaleMeasure::identity(t, t.with_object_order({"2", "1", "3"})), ContractError);
  }

  TEST_CASE("reflected extents") {
    const auto lb = support::living_beings();
    CHECK(reflected_extents(ScaleMeasure::identity(lb, support::lb_scale())).size() == 12);
    CHECK(reflected_extents(identity_on(lb)).size() == 19);
    const FormalContext empty(lb.objects(), {}, std::vector<AttributeSet>(lb.object_count(), AttributeSet(0)),
                              {.allow_empty_attributes = true});
    CHECK(reflected_extents(ScaleMeasure::identity(lb, empty)) == ClosureFamily::trivial(lb.object_count()));
    try {
      reflected_extents(single_column(lb, {"D", "Co"}));
      FAIL("expected InvalidScaleMeasure");
    } catch (const InvalidScaleMeasure& e) {
      CHECK(e.witness() == lb.object_set({"D", "Co"}));
    }
  }

  TEST_CASE("non-identity sigma") {
    const auto t = support::tiny();
    // scale objects x, y; 1 and 3 go to x, 2 to y; the only proper scale extent is {x}
    const FormalContext s({"x", "y"}, {"p"}, std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});
    const auto sm = ScaleMeasure::with_map(t, s, {{"1", "x"}, {"2", "y"}, {"3", "x"}});
    CHECK_FALSE(sm.is_identity());
    CHECK(is_scale_measure(sm));
    CHECK(reflected_extents(sm) == support::family(t, {{"1", "2", "3"}, {"1", "3"}}));
    const auto canon = canonical_representation(sm);
    CHECK(canon.is_identity());
    CHECK(compare(canon, sm) == ScaleOrder::equivalent);
  }

  TEST_CASE("canonical scale") {
    const auto t = support::tiny();
    const auto top = canonical_scale(t.objects(), ClosureFamily::trivial(3));
    CHECK(top.attribute_count() == 1);
    CHECK(top.column(0).all());
    const auto f = support::family(t, {{"1", "2", "3"}, {"3"}});
    CHECK(ClosureFamily::of_extents(canonical_scale(t.objects(), f)) == f);
    CHECK(canonical_scale(t.objects(), f).attributes() == std::vector<std::string>{"{3}", "{1, 2, 3}"});
  }

  TEST_CASE("canonical representation and comparison") {
    const auto lb = support::living_beings();
    const auto lb_scale_measure = ScaleMeasure::identity(lb, support::lb_scale());
    const auto canon = canonical_representation(lb_scale_measure);
    CHECK(canon.scale.attribute_count() == 12);
    CHECK(reflected_extents(canon) == reflected_extents(lb_scale_measure));
    CHECK(compare(identity_on(lb), lb_scale_measure) == ScaleOrder::finer);
    CHECK(compare(lb_scale_measure, identity_on(lb)) == ScaleOrder::coarser);
    CHECK(compare(lb_scale_measure, lb_scale_measure) == ScaleOrder::equivalent);
    CHECK(std::string(to_string(ScaleOrder::incomparable)) == "incomparable");

    const auto t = support::tiny();
    const auto a = from_family(t, support::family(t, {{"1", "2", "3"}, {"1", "3"}}));
    const auto b = from_family(t, support::family(t, {{"1", "2", "3"}, {"2", "3"}}));
    CHECK(compare(a, b) == ScaleOrder::incomparable);
    CHECK_THROWS_AS(compare(a, lb_scale_measure), ContractError);
  }

  TEST_CASE("conjunctive normal form") {
    const auto lb = support::living_beings();
    const auto lb_scale_measure = ScaleMeasure::identity(lb, support::lb_scale());
    const auto cnf = conjunctive_normalform(lb_scale_measure);
    CHECK(cnf.attributes.size() == 12);
    CHECK(compare(cnf.measure, lb_scale_measure) == ScaleOrder::equivalent);
    const auto dog = std::find_if(cnf.attributes.begin(), cnf.attributes.end(),
                                  [&](const LogicalAttribute& a) { return a.extent == lb.object_set({"D"}); });
    REQUIRE(dog != cnf.attributes.end());
    CHECK(dog->label == "L∧BF∧W∧LL∧M");
    for (const auto& a : cnf.attributes) CHECK(lb.extent_of(a.source_attributes) == a.extent);

    const auto top = conjunctive_normalform(from_family(lb, ClosureFamily::trivial(lb.object_count())));
    REQUIRE(top.attributes.size() == 1);
    CHECK(top.attributes[0].label == "W");
    CHECK(top.attributes[0].source_attributes == lb.attribute_set({"W"}));
    CHECK(conjunction_label(lb, lb.no_attributes()) == "⊤");
  }

  TEST_CASE("apposition") {
    const auto t = support::tiny();
    const auto a = from_family(t, support::family(t, {{"1", "2", "3"}, {"1", "3"}}));
    const auto b = from_family(t, support::family(t, {{"1", "2", "3"}, {"2", "3"}}));
    const auto ab = apposition({a, b});
    CHECK(reflected_extents(ab) == ClosureFamily::of_extents(t));
    CHECK(compare(apposition({a}), a) == ScaleOrder::equivalent);
    CHECK(compare(apposition({a, identity_on(t)}), identity_on(t)) == ScaleOrder::equivalent);
    // both canonical scales name their top attribute "{1, 2, 3}": names get disambiguated
    std::vector<std::string> names = ab.scale.attributes();
    std::sort(names.begin(), names.end());
    CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
    CHECK_THROWS_AS(apposition({}), ContractError);
    CHECK_THROWS_AS(apposition({a, identity_on(support::living_beings())}), ContractError);
  }

  TEST_CASE("scale hierarchy classes match the enumerated ideal") {
    const auto t = support::tiny();
    const auto ext = ClosureFamily::of_extents(t);
    const auto ideal = enumerate_ideal(ext);
    std::vector<ScaleMeasure> reps;
    for (const auto& f : ideal) reps.push_back(from_family(t, f));
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK(reflected_extents(reps[i]) == ideal[i]);
      for (std::size_t j = 0; j < reps.size(); ++j) {
        const auto order = compare(reps[i], reps[j]);
        CHECK((order == ScaleOrder::equivalent) == (i == j));
        CHECK((order == ScaleOrder::finer) == (ideal[j].is_subfamily_of(ideal[i]) && i != j));
      }
    }
  }
}

TEST_SUITE("importance") {
  TEST_CASE("separation index") {
    using Inc = std::vector<std::pair<std::size_t, std::size_t>>;
    const FormalContext full({"g", "h"}, {"a", "b"}, Inc{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(separation_index(full, {full.all_objects(), full.all_attributes()}) == Rational(1, 1));

    const auto t = support::tiny();
    CHECK(separation_index(t, {t.object_set({"3"}), t.attribute_set({"a", "b"})}) == Rational(1, 2));
    // |1'| + |3'| = 3 row incidences, |a'| = 2 column incidences, rectangle 2
    CHECK(separation_index(t, {t.object_set({"1", "3"}), t.attribute_set({"a"})}) == Rational(2, 3));
    CHECK(separation_index(t, {t.object_set({"2", "3"}), t.attribute_set({"b"})}) == Rational(2, 3));
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK_THROWS_AS(separation_index(t, {t.all_objects(), t.no_attributes()}), UndefinedScore);
  }

  TEST_CASE("ranking") {
    using Inc = std::vector<std::pair<std::size_t, std::size_t>>;
    const FormalContext full({"g", "h"}, {"a", "b"}, Inc{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    const auto top = rank_concepts(full, "separation", 1);
    REQUIRE(top.size() == 1);
    CHECK(top[0].formal_concept.extent == full.all_objects());

    const auto t = support::tiny();
    const auto ranked = rank_concepts(t, "separation", 4);
    // (G, ∅) is unscoreable; the 2/3 tie keeps lectic order
    REQUIRE(ranked.size() == 3);
    CHECK(ranked[0].formal_concept.extent == t.object_set({"2", "3"}));
    CHECK(ranked[1].formal_concept.extent == t.object_set({"1", "3"}));
    CHECK(ranked[2].formal_concept.extent == t.object_set({"3"}));
    CHECK(ranked[2].score == Rational(1, 2));
    CHECK_THROWS(rank_concepts(t, "separation", 0));
    CHECK_THROWS_AS(rank_concepts(t, "nope", 1), DomainError);
    CHECK(MeasureRegistry::global().contains("separation"));
  }

  TEST_CASE("score bounds, prefix property and reordering invariance on random contexts") {
    std::mt19937_64 rng(17);
    for (int run = 0; run < 50; ++run) {
      const auto ctx = support::random_context(rng, 2 + rng() % 6, 2 + rng() % 6, 0.5);
      const auto all = rank_concepts(ctx, "separation", 1000);
      for (const auto& c : all) {
        CHECK(c.score > Rational(0, 1));
        CHECK(c.score <= Rational(1, 1));
      }
      for (std::size_t k = 1; k < all.size(); ++k) {
        const auto shorter = rank_concepts(ctx, "separation", k);
        const auto longer = rank_concepts(ctx, "separation", k + 1);
        for (std::size_t i = 0; i < shorter.size(); ++i) CHECK(shorter[i].formal_concept == longer[i].formal_concept);
      }
      auto order = ctx.objects();
      std::shuffle(order.begin(), order.end(), rng);
      const auto permuted = rank_concepts(ctx.with_object_order(order), "separation", 1000);
      REQUIRE(permuted.size() == all.size());
      for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].score == permuted[i].score);
    }
  }
}
