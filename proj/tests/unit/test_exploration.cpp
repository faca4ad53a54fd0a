#include <doctest.h>

#include <fstream>

#include "conscale/closure.hpp"
#include "conscale/errors.hpp"
#include "conscale/exploration.hpp"
#include "conscale/io.hpp"
#include "support.hpp"

using namespace conscale;

namespace {

const std::vector<std::string> scripted_order{"Be", "Co", "D", "WW", "FL", "Br", "F", "R"};

FormalContext scripted_base() { return support::living_beings().with_object_order(scripted_order); }

std::vector<ScriptStep> scripted_steps() {
  const auto doc = nlohmann::json::parse(io::read_file(std::string(CONSCALE_DATA_DIR) + "/living-beings-script.json"));
  return io::script_from_json(doc);
}

/// Refutes with every candidate while possible.
class MaximalExpert : public Expert {
public:
  Answer answer(const ExplorationSession&, const Query& q) override {
    if (q.candidate_attributes.none()) return Answer::accept();
    return Answer::counterexample(q.candidate_attributes);
  }
};

class ThrowingExpert : public Expert {
public:
  Answer answer(const ExplorationSession&, const Query&) override { throw ExpertError("expert went home"); }
};

}  // namespace

TEST_SUITE("exploration") {
  TEST_CASE("first query of Living-Beings") {
    for (bool init_base : {false, true}) {
      const auto session = start_session(scripted_base(), init_base);
      const auto& lb = session.base();
      REQUIRE(session.current_query());
      const auto& q = *session.current_query();
      CHECK(q.premise.none());
      CHECK(q.conclusion == lb.all_objects());
      CHECK(q.shared_intent == lb.attribute_set({"W"}));
      CHECK(q.candidate_attributes == lb.attribute_set({"L", "BF", "Ch", "LL", "LW", "M", "MC", "DC"}));
      CHECK(session.scale().attribute_count() == 0);
      CHECK(session.phase() == Phase::querying);
    }
  }

  TEST_CASE("counterexample adds the derived extent") {
    auto session = start_session(scripted_base());
    const auto& lb = session.base();
    session.counterexample(lb.attribute_set({"M"}));
    REQUIRE(session.scale_extents().size() == 1);
    CHECK(session.scale_extents()[0] == lb.object_set({"D", "FL", "Br", "F"}));
    CHECK(session.current_query()->premise.none());
    CHECK(session.current_query()->conclusion == lb.object_set({"D", "FL", "Br", "F"}));
  }

  TEST_CASE("rejected counterexamples") {
    auto session = start_session(scripted_base());
    const auto& lb = session.base();
    CHECK_THROWS_AS(session.counterexample(lb.no_attributes()), RejectedCounterexample);
    try {
      session.counterexample(lb.attribute_set({"W", "M"}));
      FAIL("expected a rejection");
    } catch (const RejectedCounterexample& e) {
      CHECK(e.offending_attributes() == std::vector<std::string>{"W"});
    }
    CHECK(session.history().empty());
    CHECK(session.scale_extents().empty());
  }

  TEST_CASE("scripted replay row by row") {
    auto session = start_session(scripted_base());
    const auto& lb = session.base();
    ScriptedExpert expert(scripted_steps());
    const auto result = run(session, expert);
    CHECK(expert.consumed() == expert.size());
    CHECK(session.done());
    CHECK(session.counterexample_count() == 9);
    CHECK(session.accept_count() == 4);
    CHECK(extents(session.scale()).size() == 12);
    CHECK_FALSE(result.truncated);

    const auto& h = session.history();
    REQUIRE(h.size() == 13);
    // fourth answer: LW refines the query whose conclusion is {D}, adding the empty extent
    CHECK(h[3].query.conclusion == lb.object_set({"D"}));
    CHECK(h[3].new_extent == lb.no_objects());
    const auto frog = std::find_if(h.begin(), h.end(), [&](const QueryRecord& r) { return r.query.premise == lb.object_set({"F"}); });
    REQUIRE(frog != h.end());
    CHECK(frog->query.conclusion == lb.object_set({"D", "F"}));
    CHECK(frog->query.shared_intent == lb.attribute_set({"L", "W", "LL", "M"}));
    CHECK(frog->query.candidate_attributes == lb.attribute_set({"LW"}));

    const ObjectImplication fr{lb.object_set({"F", "R"}), lb.object_set({"FL", "Br", "WW", "F", "R"})};
    const auto& imps = session.theory().implications();
    CHECK(std::find(imps.begin(), imps.end(), fr) != imps.end());

    std::vector<ObjectSet> expected;
    for (const auto& names : std::vector<std::vector<std::string>>{{"D", "FL", "Br", "F"},
                                                                   {"D", "F"},
                                                                   {"D"},
                                                                   {},
                                                                   {"Co", "WW", "Be", "R"},
                                                                   {"Co", "Be", "R"},
                                                                   {"R"},
                                                                   {"F"},
                                                                   {"FL", "Br", "WW", "F", "R"}})
      expected.push_back(lb.object_set(names));
    CHECK(session.scale_extents() == expected);
  }

  TEST_CASE("premise G ends the exploration") {
    auto session = start_session(support::tiny());
    AcceptingExpert yes;
    run(session, yes);
    CHECK(session.done());
    CHECK_FALSE(session.current_query().has_value());
    CHECK_THROWS_AS(session.accept(), ContractError);
  }

  TEST_CASE("background knowledge sets the first premise") {
    const auto t = support::tiny();
    const auto with_base = start_session(t, true);
    CHECK(with_base.premise() == t.object_set({"3"}));
    const auto without = start_session(t, false);
    CHECK(without.premise().none());
  }

  TEST_CASE("always accepting gives the coarsest scale") {
    const auto lb = support::living_beings();
    AcceptingExpert yes;
    const auto r = run(lb, yes);
    CHECK(reflected_extents(r.scale_measure) == ClosureFamily::trivial(lb.object_count()));
  }

  TEST_CASE("maximal counterexamples recover every extent") {
    std::mt19937_64 rng(23);
    std::vector<FormalContext> ctxs{support::tiny(), support::living_beings()};
    for (int i = 0; i < 30; ++i) ctxs.push_back(support::random_context(rng, 1 + rng() % 6, 1 + rng() % 5, 0.5));
    for (const auto& ctx : ctxs)
      for (bool init_base : {true, false}) {
        MaximalExpert expert;
        const auto r = run(ctx, expert, {}, {init_base});
        CHECK(reflected_extents(r.scale_measure) == ClosureFamily::of_extents(ctx));
      }
  }

  TEST_CASE("scripted expert failures") {
    const auto lb = scripted_base();
    ScriptedExpert empty({});
    auto session = start_session(lb);
    try {
      run(session, empty);
      FAIL("expected ScriptExhausted");
    } catch (const ScriptExhausted& e) {
      CHECK(e.pending_query().premise.none());
      CHECK(std::string(e.what()).find("premise {}") != std::string::npos);
    }
    CHECK(session.history().empty());

    ScriptedExpert invalid({{{}, std::nullopt, false, {"W"}}});
    CHECK_THROWS_AS(run(lb, invalid), RejectedCounterexample);

    ScriptedExpert wrong({{{"R"}, std::nullopt, true, {}}});
    CHECK_THROWS_AS(run(lb, wrong), ScriptExhausted);
  }

  TEST_CASE("expert errors leave the session intact") {
    auto session = start_session(scripted_base());
    session.counterexample(session.base().attribute_set({"M"}));
    const auto before = session.history().size();
    ThrowingExpert broken;
    CHECK_THROWS_AS(run(session, broken), ExpertError);
    CHECK(session.history().size() == before);
    CHECK(session.current_query().has_value());
  }

  TEST_CASE("limits truncate the run") {
    auto session = start_session(scripted_base());
    ScriptedExpert expert(scripted_steps());
    const auto r = run(session, expert, {.max_scale_attributes = 3, .max_queries = std::nullopt});
    CHECK(r.truncated);
    CHECK(session.scale_extents().size() == 3);
    ScriptedExpert again(scripted_steps());
    const auto q = run(scripted_base(), again, {.max_scale_attributes = std::nullopt, .max_queries = 5});
    CHECK(q.truncated);
    CHECK(q.history.size() == 5);
  }

  TEST_CASE("replay reproduces the session and detects divergence") {
    auto session = start_session(scripted_base());
    ScriptedExpert expert(scripted_steps());
    run(session, expert);
    const auto again = replay(scripted_base(), session.options(), session.history());
    CHECK(again.scale_extents() == session.scale_extents());
    CHECK(again.history().size() == session.history().size());
    CHECK(again.done());
    CHECK_THROWS_AS(replay(scripted_base(), {false}, session.history()), ContractError);
  }

  TEST_CASE("automatic expert") {
    const auto t = support::tiny();
    AutomaticExpert none(t, {"separation", 10, 0, 1});
    CHECK(reflected_extents(run(t, none).scale_measure) == ClosureFamily::trivial(3));

    auto run_seeded = [&](std::uint64_t seed) {
      AutomaticExpert e(t, {"separation", 100, 10, seed});
      return run(t, e).scale_measure.scale;
    };
    CHECK(run_seeded(5) == run_seeded(5));
    CHECK_THROWS(AutomaticExpert(t, {"separation", 0, 1, 1}));
    CHECK_THROWS_AS(AutomaticExpert(t, {"nope", 1, 1, 1}), DomainError);
  }

  TEST_CASE("automatic expert on the synthetic spices context") {
    const auto spices = support::load("spices-synthetic.cxt");
    CHECK(spices.object_count() == 56);
    CHECK(spices.attribute_count() == 37);
    AutomaticExpert expert(spices, {"separation", 10, 12, 42});
    const auto r = run(spices, expert);
    CHECK(is_scale_measure(r.scale_measure));
    CHECK(extents(r.scale_measure.scale).size() <= 30);
    CHECK(expert.given() <= 12);
  }
}
