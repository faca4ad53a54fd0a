#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "conscale/closure.hpp"
#include "conscale/diagram.hpp"
#include "conscale/errors.hpp"
#include "conscale/exploration.hpp"
#include "conscale/io.hpp"
#include "conscale/lattice.hpp"
#include "conscale/scale_measure.hpp"
#include "conscale/server.hpp"

using namespace conscale;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_usage = 2;

/// Raised for bad invocations that CLI11 cannot see (e.g. a missing --sigma).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Validation failures and refusals.
struct Invalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(' ');
    const auto b = item.find_last_not_of(' ');
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw io::ParseError("cannot write '" + path + "'");
  out << text;
}

ScaleMeasure load_measure(const std::string& ctx_path, const std::string& scale_path, const std::string& sigma_path) {
  auto base = io::load_context(ctx_path);
  auto scale = io::parse_context(io::read_file(scale_path));
  if (!sigma_path.empty()) {
    const auto doc = json::parse(io::read_file(sigma_path));
    return ScaleMeasure::with_map(std::move(base), std::move(scale), io::sigma_from_json(doc));
  }
  if (base.objects() == scale.objects()) return ScaleMeasure::identity(std::move(base), std::move(scale));
  auto a = base.objects(), b = scale.objects();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw UsageError("scale objects differ from the context's objects; pass --sigma map.json");
  std::vector<std::pair<std::string, std::string>> id;
  for (const auto& g : base.objects()) id.emplace_back(g, g);
  return ScaleMeasure::with_map(std::move(base), std::move(scale), id);
}

std::string describe_query(const FormalContext& base, const Query& q) {
  std::ostringstream out;
  out << "premise " << render_set(base.object_names(q.premise)) << " => conclusion "
      << render_set(base.object_names(q.conclusion)) << "\n  all of them have " << render_set(base.attribute_names(q.shared_intent))
      << "\n  refine using " << render_set(base.attribute_names(q.candidate_attributes));
  return out.str();
}

void print_summary(const ExplorationSession& s) {
  std::cout << s.counterexample_count() << " counterexamples, " << s.accept_count() << " accepts, "
            << extents(s.scale()).size() << " concepts\n";
}

void print_scale(const ExplorationSession& s) {
  const auto& base = s.base();
  std::size_t i = 0;
  for (const auto& e : s.scale_extents()) std::cout << "  s" << ++i << " = " << render_set(base.object_names(e)) << "\n";
}

/// Terminal expert: "y" accepts, a comma list names refining attributes, "q" stops.
class TerminalExpert : public Expert {
public:
  Answer answer(const ExplorationSession& session, const Query& q) override {
    const auto& base = session.base();
    for (;;) {
      std::cout << "\n" << describe_query(base, q) << "\n[y = accept | attr,attr,... = counterexample | q = quit] > " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line) || line == "q") throw ExpertError("stopped by user");
      if (line == "y" || line == "accept") return Answer::accept();
      try {
        auto attrs = base.attribute_set(split_list(line));
        if (attrs.none() || !attrs.is_subset_of(q.candidate_attributes)) {
          std::cout << "choose a non-empty subset of " << render_set(base.attribute_names(q.candidate_attributes)) << "\n";
          continue;
        }
        return Answer::counterexample(std::move(attrs));
      } catch (const DomainError& e) {
        std::cout << e.what() << "\n";
      }
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scale-measure workbench for formal concept analysis", "conscale"};
  app.require_subcommand(1);

  std::string ctx_path, scale_path, sigma_path, out_path, json_path, dot_path, script_path, order, measure = "separation",
                                                                                                     save_path, host = "127.0.0.1",
                                                                                                     snapshot_dir;
  bool list = false, interactive = false, no_base = false, cnf_labels = false, as_json = false;
  std::size_t top_k = 10, budget = 10, max_extents = 16;
  std::uint64_t seed = 42;
  int port = server::port_from_env(8080);

  auto* concepts_cmd = app.add_subcommand("concepts", "Count (and optionally list) the formal concepts");
  concepts_cmd->add_option("context", ctx_path, "context file (.cxt or JSON)")->required()->check(CLI::ExistingFile);
  concepts_cmd->add_flag("--list", list, "list every concept");

  auto* check_cmd = app.add_subcommand("check", "Check whether a scale defines a scale-measure of the context");
  auto* canonical_cmd = app.add_subcommand("canonical", "Print the canonical representation of a scale-measure");
  auto* cnf_cmd = app.add_subcommand("cnf", "Print the conjunctive normal form of a scale-measure");
  for (auto* c : {check_cmd, canonical_cmd, cnf_cmd}) {
    c->add_option("context", ctx_path, "base context")->required()->check(CLI::ExistingFile);
    c->add_option("scale", scale_path, "scale context")->required()->check(CLI::ExistingFile);
    c->add_option("--sigma", sigma_path, "JSON object map from context objects to scale objects")->check(CLI::ExistingFile);
  }
  canonical_cmd->add_flag("--json", as_json, "emit the scale as a JSON context");
  cnf_cmd->add_flag("--json", as_json, "emit the scale as a JSON context");

  auto* irr_cmd = app.add_subcommand("irreducibles", "Atoms and meet-irreducibles of the scale hierarchy");
  irr_cmd->add_option("context", ctx_path)->required()->check(CLI::ExistingFile);

  auto* stats_cmd = app.add_subcommand("ideal-stats", "Enumerate the scale hierarchy and run the lattice property suite");
  stats_cmd->add_option("context", ctx_path)->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--max-extents", max_extents, "refuse contexts with more extents")->capture_default_str();

  auto* explore_cmd = app.add_subcommand("explore", "Explore a scale-measure with a scripted or interactive expert");
  explore_cmd->add_option("context", ctx_path)->required()->check(CLI::ExistingFile);
  auto* script_opt = explore_cmd->add_option("--script", script_path, "JSON answer script")->check(CLI::ExistingFile);
  explore_cmd->add_flag("--interactive", interactive, "answer queries on the terminal")->excludes(script_opt);
  explore_cmd->add_option("--order", order, "object order, comma separated, most significant first");
  explore_cmd->add_flag("--no-base", no_base, "start without the context's canonical base");
  explore_cmd->add_option("--save", save_path, "write the session JSON here");
  explore_cmd->add_option("--out", out_path, "write the resulting scale (.cxt) here");

  auto* auto_cmd = app.add_subcommand("auto", "Explore with an automatic importance-driven expert");
  auto_cmd->add_option("context", ctx_path)->required()->check(CLI::ExistingFile);
  auto_cmd->add_option("--measure", measure, "importance measure")->capture_default_str();
  auto_cmd->add_option("--top-k", top_k, "choose among the k best valid concepts")->capture_default_str()->check(CLI::PositiveNumber);
  auto_cmd->add_option("--budget", budget, "maximum number of counterexamples")->capture_default_str();
  auto_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  auto_cmd->add_option("--order", order, "object order, comma separated");
  auto_cmd->add_flag("--no-base", no_base, "start without the context's canonical base");
  auto_cmd->add_option("--save", save_path, "write the session JSON here");
  auto_cmd->add_option("--out", out_path, "write the resulting scale (.cxt) here");

  auto* lattice_cmd = app.add_subcommand("lattice", "Export a concept lattice or a scale-measure lattice");
  lattice_cmd->add_option("context", ctx_path)->required()->check(CLI::ExistingFile);
  lattice_cmd->add_option("--scale", scale_path, "draw the lattice reflected by this scale")->check(CLI::ExistingFile);
  lattice_cmd->add_option("--sigma", sigma_path)->check(CLI::ExistingFile);
  lattice_cmd->add_option("--dot", dot_path, "write DOT here ('-' for stdout)");
  lattice_cmd->add_option("--json", json_path, "write JSON here ('-' for stdout)");
  lattice_cmd->add_flag("--cnf", cnf_labels, "label scale lattice nodes with conjunctions");

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP session server");
  serve_cmd->add_option("--port", port, "port (default from CONSCALE_PORT or 8080)");
  serve_cmd->add_option("--host", host)->capture_default_str();
  serve_cmd->add_option("--snapshot-dir", snapshot_dir, "persist sessions as JSON files here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*concepts_cmd) {
      const auto ctx = io::load_context(ctx_path);
      const auto all = concepts(ctx);
      std::cout << all.size() << " concepts\n";
      if (list)
        for (const auto& c : all)
          std::cout << "  " << render_set(ctx.object_names(c.extent)) << " " << render_set(ctx.attribute_names(c.intent)) << "\n";
      return exit_ok;
    }

    if (*check_cmd) {
      const auto sm = load_measure(ctx_path, scale_path, sigma_path);
      if (const auto bad = find_violation(sm)) {
        std::cout << "invalid: scale extent " << render_set(sm.scale.object_names(*bad)) << " pulls back to "
                  << render_set(sm.base.object_names(sm.preimage(*bad))) << ", which is not an extent\n";
        return exit_invalid;
      }
      std::cout << "valid, reflects " << reflected_extents(sm).size() << "/" << extents(sm.base).size() << " extents\n";
      return exit_ok;
    }

    if (*canonical_cmd || *cnf_cmd) {
      const auto sm = load_measure(ctx_path, scale_path, sigma_path);
      const auto result = *canonical_cmd ? canonical_representation(sm) : conjunctive_normalform(sm).measure;
      std::cout << (as_json ? io::context_to_json(result.scale).dump(2) + "\n" : io::write_burmeister(result.scale));
      return exit_ok;
    }

    if (*irr_cmd) {
      const auto ctx = io::load_context(ctx_path);
      const auto ext = ClosureFamily::of_extents(ctx);
      auto fam = [&](const ClosureFamily& f) {
        std::string s = "{";
        for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + render_set(ctx.object_names(f.members()[i]));
        return s + "}";
      };
      const auto atoms = join_irreducibles(ext);
      std::cout << atoms.size() << " join-irreducibles (atoms)\n";
      for (const auto& a : atoms) std::cout << "  " << fam(a) << "\n";
      const auto mi = meet_irreducibles(ext);
      std::cout << mi.size() << " meet-irreducibles\n";
      for (const auto& d : mi) {
        std::cout << "  " << fam(d.family);
        if (d.generator_pair)
          std::cout << "  from " << render_set(ctx.object_names(d.generator_pair->premise)) << " + "
                    << ctx.objects()[d.generator_pair->object];
        std::cout << "\n";
      }
      return exit_ok;
    }

    if (*stats_cmd) {
      const auto ctx = io::load_context(ctx_path);
      OracleBounds bounds;
      bounds.max_extents = max_extents;
      const auto ext = ClosureFamily::of_extents(ctx);
      PropertyReport report;
      try {
        report = property_suite(ext, bounds);
      } catch (const BoundExceeded& e) {
        throw Invalid(std::string("refused: ") + e.what());
      }
      std::cout << report.extent_count << " extents, " << report.ideal_size << " scale-hierarchy elements, "
                << neutral_elements(ext, bounds).size() << " neutral\n";
      for (const auto& r : report.results)
        std::cout << "  " << r.name << ": " << (r.passed ? "pass" : "FAIL " + r.witness) << "\n";
      return report.all_passed() ? exit_ok : exit_invalid;
    }

    if (*explore_cmd || *auto_cmd) {
      auto base = io::load_context(ctx_path);
      std::unique_ptr<Expert> expert;
      if (*explore_cmd && !script_path.empty()) {
        const auto doc = json::parse(io::read_file(script_path));
        if (order.empty() && doc.contains("order")) base = base.with_object_order(doc["order"].get<std::vector<std::string>>());
        expert = std::make_unique<ScriptedExpert>(io::script_from_json(doc));
      }
      if (!order.empty()) base = base.with_object_order(split_list(order));
      if (*auto_cmd) {
        AutomaticOptions opts{measure, top_k, budget, seed};
        expert = std::make_unique<AutomaticExpert>(base, opts);
      } else if (!expert) {
        expert = std::make_unique<TerminalExpert>();
      }

      ExplorationSession session(std::move(base), SessionOptions{!no_base});
      int code = exit_ok;
      try {
        run(session, *expert);
      } catch (const ExpertError& e) {
        std::cerr << e.what() << "\n";
        code = exit_invalid;
      } catch (const RejectedCounterexample& e) {
        std::cerr << e.what() << "\n";
        code = exit_invalid;
      }
      if (*auto_cmd)
        std::cout << "measure " << measure << ", top-k " << top_k << ", budget " << budget << ", seed " << seed << "\n";
      print_summary(session);
      print_scale(session);
      if (!save_path.empty()) write_output(save_path, io::session_to_json(session).dump(2) + "\n");
      if (!out_path.empty()) write_output(out_path, io::write_burmeister(session.scale()));
      return code;
    }

    if (*lattice_cmd) {
      const auto ctx = io::load_context(ctx_path);
      const auto diagram =
          scale_path.empty() ? concept_lattice_diagram(ctx) : scale_lattice_diagram(load_measure(ctx_path, scale_path, sigma_path), cnf_labels);
      if (dot_path.empty() && json_path.empty()) dot_path = "-";
      if (!dot_path.empty()) write_output(dot_path, to_dot(diagram, ctx.name().empty() ? "lattice" : ctx.name()));
      if (!json_path.empty()) write_output(json_path, to_json(diagram, ctx).dump(2) + "\n");
      return exit_ok;
    }

    if (*serve_cmd) {
      server::ServerConfig config;
      config.host = host;
      config.port = port;
      if (!snapshot_dir.empty()) config.snapshot_dir = snapshot_dir;
      server::HttpServer srv(config);
      const int bound = srv.bind();
      if (bound < 0) throw Invalid("cannot bind " + host + ":" + std::to_string(port));
      std::cerr << "listening on http://" << host << ":" << bound << "/api/v1\n";
      return srv.serve() ? exit_ok : exit_invalid;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Invalid& e) {
    std::cerr << e.what() << "\n";
    return exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_usage;
}
