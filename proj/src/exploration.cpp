#include "conscale/exploration.hpp"

#include <algorithm>
#include <limits>

#include "conscale/closure.hpp"
#include "conscale/errors.hpp"

namespace conscale {

ExplorationSession::ExplorationSession(FormalContext base, SessionOptions options)
    : base_(std::move(base)), options_(options) {
  if (options_.init_base) theory_ = object_canonical_base(base_);
  premise_ = theory_.closure(base_.no_objects());
  settle();
}

FormalContext ExplorationSession::scale() const {
  std::vector<std::string> attributes;
  std::vector<AttributeSet> rows(base_.object_count(), AttributeSet(scale_extents_.size()));
  for (std::size_t j = 0; j < scale_extents_.size(); ++j) {
    attributes.push_back(render_set(base_.object_names(scale_extents_[j])));
    scale_extents_[j].for_each([&](std::size_t g) { rows[g].set(j); });
  }
  return FormalContext(base_.objects(), std::move(attributes), std::move(rows), {.allow_empty_attributes = true});
}

ScaleMeasure ExplorationSession::scale_measure() const { return ScaleMeasure::identity(base_, scale()); }

ObjectSet ExplorationSession::scale_closure(const ObjectSet& objects) const {
  ObjectSet out = base_.all_objects();
  for (const auto& e : scale_extents_)
    if (objects.is_subset_of(e)) out &= e;
  return out;
}

std::size_t ExplorationSession::counterexample_count() const {
  return static_cast<std::size_t>(
      std::count_if(history_.begin(), history_.end(), [](const QueryRecord& r) { return !r.answer.is_accept(); }));
}

std::size_t ExplorationSession::accept_count() const { return history_.size() - counterexample_count(); }

const Query& ExplorationSession::require_query() const {
  if (!query_) throw ContractError("exploration is done; there is no query to answer");
  return *query_;
}

Query ExplorationSession::make_query() const {
  Query q;
  q.premise = premise_;
  q.conclusion = scale_closure(premise_);
  q.shared_intent = base_.intent_of(q.conclusion);
  q.candidate_attributes = base_.intent_of(premise_) - q.shared_intent;
  return q;
}

void ExplorationSession::advance() {
  const auto next = next_closure_step(premise_, [&](const ObjectSet& s) { return theory_.closure(s); });
  premise_ = next ? *next : base_.all_objects();
}

void ExplorationSession::settle() {
  while (!premise_.all()) {
    if (scale_closure(premise_) != premise_) {
      query_ = make_query();
      return;
    }
    advance();
  }
  query_.reset();
}

void ExplorationSession::accept() {
  const Query q = require_query();
  theory_.add({q.premise, q.conclusion});
  history_.push_back({q, Answer::accept(), std::nullopt});
  advance();
  settle();
}

void ExplorationSession::counterexample(const AttributeSet& attributes) {
  const Query q = require_query();
  if (attributes.size() != base_.attribute_count()) throw ContractError("counterexample attribute set has the wrong width");
  if (attributes.none())
    throw RejectedCounterexample("rejected counterexample: no attributes given", {});
  const auto outside = attributes - q.candidate_attributes;
  if (!outside.none()) {
    auto names = base_.attribute_names(outside);
    throw RejectedCounterexample("rejected counterexample: " + render_set(names) +
                                     " not among the candidate attributes " +
                                     render_set(base_.attribute_names(q.candidate_attributes)),
                                 std::move(names));
  }
  ObjectSet extent = base_.extent_of(attributes | q.shared_intent);
  scale_extents_.push_back(extent);
  history_.push_back({q, Answer::counterexample(attributes), std::move(extent)});
  settle();
}

void ExplorationSession::answer(const Answer& a) {
  if (a.is_accept())
    accept();
  else
    counterexample(a.attributes);
}

ExplorationResult run(ExplorationSession& session, Expert& expert, const ExplorationLimits& limits) {
  bool truncated = false;
  std::size_t asked = 0;
  while (const auto& q = session.current_query()) {
    if ((limits.max_queries && asked >= *limits.max_queries) ||
        (limits.max_scale_attributes && session.scale_extents().size() >= *limits.max_scale_attributes)) {
      truncated = true;
      break;
    }
    const Query pending = *q;
    session.answer(expert.answer(session, pending));
    ++asked;
  }
  return {session.scale_measure(), session.theory(), session.history(), truncated};
}

ExplorationResult run(FormalContext base, Expert& expert, const ExplorationLimits& limits, SessionOptions options) {
  ExplorationSession session(std::move(base), options);
  return run(session, expert, limits);
}

ExplorationSession replay(FormalContext base, SessionOptions options, const std::vector<QueryRecord>& history) {
  ExplorationSession session(std::move(base), options);
  for (const auto& record : history) {
    const auto& q = session.current_query();
    if (!q || q->premise != record.query.premise || q->conclusion != record.query.conclusion)
      throw ContractError("replay diverged: recorded query does not match the session's query");
    session.answer(record.answer);
  }
  return session;
}

Answer ScriptedExpert::answer(const ExplorationSession& session, const Query& query) {
  const auto& base = session.base();
  const auto describe = [&] {
    return "premise " + render_set(base.object_names(query.premise)) + ", conclusion " +
           render_set(base.object_names(query.conclusion));
  };
  if (next_ >= steps_.size()) throw ScriptExhausted("script exhausted at query: " + describe(), query);
  const auto& step = steps_[next_];
  const bool premise_matches = base.object_set(step.premise) == query.premise;
  const bool conclusion_matches = !step.conclusion || base.object_set(*step.conclusion) == query.conclusion;
  if (!premise_matches || !conclusion_matches)
    throw ScriptExhausted("script step " + std::to_string(next_) + " does not match query: " + describe(), query);
  ++next_;
  if (step.accept) return Answer::accept();
  return Answer::counterexample(base.attribute_set(step.counterexample));
}

AutomaticExpert::AutomaticExpert(const FormalContext& base, AutomaticOptions options)
    : options_(std::move(options)), rng_(options_.seed) {
  if (options_.top_k == 0) throw std::invalid_argument("top-k must be at least 1");
  const auto& measure = MeasureRegistry::global().get(options_.measure);
  ranked_ = rank_concepts(base, measure, std::numeric_limits<std::size_t>::max());
}

Answer AutomaticExpert::answer(const ExplorationSession&, const Query& query) {
  if (given_ >= options_.budget) return Answer::accept();
  std::vector<const ConceptScore*> valid;
  for (const auto& c : ranked_) {
    if (valid.size() == options_.top_k) break;
    if (c.formal_concept.intent.intersects(query.candidate_attributes)) valid.push_back(&c);
  }
  if (valid.empty()) return Answer::accept();
  std::uniform_int_distribution<std::size_t> pick(0, valid.size() - 1);
  const auto* chosen = valid[pick(rng_)];
  ++given_;
  return Answer::counterexample(chosen->formal_concept.intent & query.candidate_attributes);
}

}  // namespace conscale
