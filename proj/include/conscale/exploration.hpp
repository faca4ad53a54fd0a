#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "conscale/context.hpp"
#include "conscale/implication.hpp"
#include "conscale/importance.hpp"
#include "conscale/scale_measure.hpp"

namespace conscale {

/// Object implication premise -> conclusion, phrased in attribute terms:
/// all conclusion objects share `shared_intent`; the premise objects also
/// share `candidate_attributes`, which the expert may use to refine.
struct Query {
  ObjectSet premise;
  ObjectSet conclusion;
  AttributeSet shared_intent;
  AttributeSet candidate_attributes;

  friend bool operator==(const Query&, const Query&) = default;
};

struct Answer {
  enum class Kind { accept, counterexample };
  Kind kind = Kind::accept;
  /// Refining attributes; empty for accept.
  AttributeSet attributes;

  static Answer accept() { return {}; }
  static Answer counterexample(AttributeSet attributes) { return {Kind::counterexample, std::move(attributes)}; }
  bool is_accept() const { return kind == Kind::accept; }
};

struct QueryRecord {
  Query query;
  Answer answer;
  /// Extent added to the scale by a counterexample.
  std::optional<ObjectSet> new_extent;
};

enum class Phase { querying, done };

/// Counterexample attributes that cannot refute the current query.
class RejectedCounterexample : public std::invalid_argument {
public:
  RejectedCounterexample(const std::string& message, std::vector<std::string> offending)
      : std::invalid_argument(message), offending_(std::move(offending)) {}
  const std::vector<std::string>& offending_attributes() const { return offending_; }

private:
  std::vector<std::string> offending_;
};

struct SessionOptions {
  /// Start from the object canonical base of the context as background knowledge.
  bool init_base = true;
};

/// State of one scale-measure exploration.
///
/// The scale is (G, added extents, ∈). Every public mutation leaves the
/// session either waiting on a query whose premise differs from its scale
/// closure, or done; premises that are already scale-closed are skipped.
class ExplorationSession {
public:
  explicit ExplorationSession(FormalContext base, SessionOptions options = {});

  const FormalContext& base() const { return base_; }
  const SessionOptions& options() const { return options_; }
  Phase phase() const { return query_ ? Phase::querying : Phase::done; }
  bool done() const { return !query_.has_value(); }
  const ObjectSet& premise() const { return premise_; }
  /// The pending query, or nullopt once the premise has reached G.
  const std::optional<Query>& current_query() const { return query_; }
  const ImplicationTheory& theory() const { return theory_; }
  const std::vector<QueryRecord>& history() const { return history_; }

  /// Scale attribute extents in insertion order.
  const std::vector<ObjectSet>& scale_extents() const { return scale_extents_; }
  FormalContext scale() const;
  ScaleMeasure scale_measure() const;
  ObjectSet scale_closure(const ObjectSet& objects) const;

  std::size_t counterexample_count() const;
  std::size_t accept_count() const;

  /// Adds premise -> conclusion to the theory and moves to the next premise.
  void accept();
  /// Adds (shared_intent ∪ attributes)' as a scale attribute. Throws
  /// RejectedCounterexample unless attributes is a non-empty subset of the
  /// query's candidate attributes.
  void counterexample(const AttributeSet& attributes);
  void answer(const Answer& answer);

private:
  const Query& require_query() const;
  Query make_query() const;
  void advance();
  void settle();

  FormalContext base_;
  SessionOptions options_;
  ImplicationTheory theory_;
  std::vector<ObjectSet> scale_extents_;
  ObjectSet premise_;
  std::optional<Query> query_;
  std::vector<QueryRecord> history_;
};

inline ExplorationSession start_session(FormalContext base, bool init_base = true) {
  return ExplorationSession(std::move(base), SessionOptions{init_base});
}

/// Anything an expert throws instead of answering.
class ExpertError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Expert {
public:
  virtual ~Expert() = default;
  virtual Answer answer(const ExplorationSession& session, const Query& query) = 0;
};

struct ExplorationLimits {
  std::optional<std::size_t> max_scale_attributes;
  std::optional<std::size_t> max_queries;
};

struct ExplorationResult {
  /// (id_G, S) with S's attributes being the explored extents.
  ScaleMeasure scale_measure;
  ImplicationTheory theory;
  std::vector<QueryRecord> history;
  bool truncated = false;
};

/// Drives the session until done or a limit trips. Expert exceptions
/// propagate and leave the session as it was before the failing query.
ExplorationResult run(ExplorationSession& session, Expert& expert, const ExplorationLimits& limits = {});
ExplorationResult run(FormalContext base, Expert& expert, const ExplorationLimits& limits = {}, SessionOptions options = {});

/// Re-applies recorded answers to a fresh session. Throws ContractError if a
/// recorded query does not match the one the session asks.
ExplorationSession replay(FormalContext base, SessionOptions options, const std::vector<QueryRecord>& history);

class AcceptingExpert : public Expert {
public:
  Answer answer(const ExplorationSession&, const Query&) override { return Answer::accept(); }
};

/// One scripted answer. The step applies when the query premise (and the
/// conclusion, if given) match by object names.
struct ScriptStep {
  std::vector<std::string> premise;
  std::optional<std::vector<std::string>> conclusion;
  bool accept = false;
  std::vector<std::string> counterexample;
};

class ScriptExhausted : public ExpertError {
public:
  ScriptExhausted(const std::string& message, Query pending) : ExpertError(message), pending_(std::move(pending)) {}
  const Query& pending_query() const { return pending_; }

private:
  Query pending_;
};

/// Replays a fixed answer list in order.
class ScriptedExpert : public Expert {
public:
  explicit ScriptedExpert(std::vector<ScriptStep> steps) : steps_(std::move(steps)) {}
  Answer answer(const ExplorationSession& session, const Query& query) override;
  std::size_t consumed() const { return next_; }
  std::size_t size() const { return steps_.size(); }

private:
  std::vector<ScriptStep> steps_;
  std::size_t next_ = 0;
};

struct AutomaticOptions {
  std::string measure = "separation";
  std::size_t top_k = 10;
  /// Maximum number of counterexamples (scale attributes) to give.
  std::size_t budget = 10;
  std::uint64_t seed = 42;
};

/// Picks counterexamples at random from the best-scored concepts of the base
/// context whose intent meets the query's candidate attributes; accepts once
/// the budget is spent or no concept qualifies.
class AutomaticExpert : public Expert {
public:
  AutomaticExpert(const FormalContext& base, AutomaticOptions options);
  Answer answer(const ExplorationSession& session, const Query& query) override;
  const AutomaticOptions& options() const { return options_; }
  std::size_t given() const { return given_; }

private:
  AutomaticOptions options_;
  std::vector<ConceptScore> ranked_;
  std::mt19937_64 rng_;
  std::size_t given_ = 0;
};

}  // namespace conscale
