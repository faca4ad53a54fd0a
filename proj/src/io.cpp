#include "conscale/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "conscale/errors.hpp"

namespace conscale::io {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) +
                                         (column ? ", column " + std::to_string(column) : std::string{}) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool parse_count(const std::string& s, std::size_t& out) {
  if (s.empty()) return false;
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  out = v;
  return true;
}

}  // namespace

FormalContext parse_burmeister(const std::string& text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  auto at = [&](std::size_t k) -> const std::string& {
    if (k >= lines.size()) throw ParseError("unexpected end of input", k + 1);
    return lines[k];
  };
  if (lines.empty() || lines[0] != "B") throw ParseError("expected 'B' on the first line", 1, 1);
  i = 1;

  std::string name;
  std::size_t dummy = 0;
  if (at(i).empty()) {
    ++i;
  } else if (!(parse_count(at(i), dummy) && i + 1 < lines.size() && parse_count(lines[i + 1], dummy))) {
    name = at(i++);
  }

  std::size_t n_objects = 0, n_attributes = 0;
  while (at(i).empty()) ++i;
  if (!parse_count(at(i), n_objects)) throw ParseError("expected the number of objects", i + 1, 1);
  ++i;
  if (!parse_count(at(i), n_attributes)) throw ParseError("expected the number of attributes", i + 1, 1);
  ++i;
  while (i < lines.size() && lines[i].empty()) ++i;

  std::vector<std::string> objects, attributes;
  const auto read_names = [&](std::size_t count, std::vector<std::string>& out, const char* kind) {
    std::set<std::string> seen;
    for (std::size_t k = 0; k < count; ++k, ++i) {
      const auto& name = at(i);
      if (name.empty()) throw ParseError(std::string("empty ") + kind + " name", i + 1, 1);
      if (!seen.insert(name).second) throw ParseError(std::string("duplicate ") + kind + " name '" + name + "'", i + 1, 1);
      out.push_back(name);
    }
  };
  read_names(n_objects, objects, "object");
  read_names(n_attributes, attributes, "attribute");
  std::vector<AttributeSet> rows;
  for (std::size_t g = 0; g < n_objects; ++g, ++i) {
    const auto& row = at(i);
    if (row.size() != n_attributes)
      throw ParseError("row has width " + std::to_string(row.size()) + ", expected " + std::to_string(n_attributes), i + 1,
                       std::min(row.size(), n_attributes) + 1);
    AttributeSet r(n_attributes);
    for (std::size_t m = 0; m < n_attributes; ++m) {
      const char c = row[m];
      if (c == 'X' || c == 'x')
        r.set(m);
      else if (c != '.')
        throw ParseError(std::string("illegal cell character '") + c + "'", i + 1, m + 1);
    }
    rows.push_back(std::move(r));
  }
  for (; i < lines.size(); ++i)
    if (!lines[i].empty()) throw ParseError("unexpected content after the incidence rows", i + 1, 1);

  try {
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows), std::move(name));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string write_burmeister(const FormalContext& context) {
  std::ostringstream out;
  out << "B\n" << context.name() << "\n" << context.object_count() << "\n" << context.attribute_count() << "\n\n";
  for (const auto& g : context.objects()) out << g << "\n";
  for (const auto& m : context.attributes()) out << m << "\n";
  for (std::size_t g = 0; g < context.object_count(); ++g) {
    for (std::size_t m = 0; m < context.attribute_count(); ++m) out << (context.incident(g, m) ? 'X' : '.');
    out << "\n";
  }
  return out.str();
}

json context_to_json(const FormalContext& context) {
  json rows = json::array();
  for (std::size_t g = 0; g < context.object_count(); ++g) {
    std::string r;
    for (std::size_t m = 0; m < context.attribute_count(); ++m) r += context.incident(g, m) ? 'X' : '.';
    rows.push_back(r);
  }
  return {{"format", "conscale-context"},
          {"version", schema_version},
          {"name", context.name()},
          {"objects", context.objects()},
          {"attributes", context.attributes()},
          {"rows", rows}};
}

namespace {

void check_version(const json& doc, const char* format) {
  if (!doc.is_object()) throw ParseError(std::string(format) + ": expected a JSON object");
  if (doc.contains("format") && doc["format"] != format)
    throw ParseError("expected format '" + std::string(format) + "', got " + doc["format"].dump());
  if (doc.contains("version") && doc["version"] != schema_version)
    throw ParseError(std::string(format) + ": unsupported version " + doc["version"].dump());
}

}  // namespace

FormalContext context_from_json(const json& doc) {
  check_version(doc, "conscale-context");
  try {
    auto objects = doc.at("objects").get<std::vector<std::string>>();
    auto attributes = doc.at("attributes").get<std::vector<std::string>>();
    const auto rows_text = doc.at("rows").get<std::vector<std::string>>();
    if (rows_text.size() != objects.size())
      throw ParseError("context has " + std::to_string(rows_text.size()) + " rows for " + std::to_string(objects.size()) +
                       " objects");
    std::vector<AttributeSet> rows;
    for (std::size_t g = 0; g < rows_text.size(); ++g) {
      const auto& text = rows_text[g];
      if (text.size() != attributes.size())
        throw ParseError("row " + std::to_string(g + 1) + " has width " + std::to_string(text.size()) + ", expected " +
                         std::to_string(attributes.size()));
      AttributeSet r(attributes.size());
      for (std::size_t m = 0; m < text.size(); ++m) {
        if (text[m] == 'X' || text[m] == 'x')
          r.set(m);
        else if (text[m] != '.')
          throw ParseError("row " + std::to_string(g + 1) + ": illegal cell character '" + text[m] + "'");
      }
      rows.push_back(std::move(r));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows), doc.value("name", std::string{}));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed context JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

FormalContext parse_context(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return context_from_json(doc);
  }
  return parse_burmeister(text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

FormalContext load_context(const std::filesystem::path& path) {
  auto ctx = parse_context(read_file(path));
  if (ctx.name().empty()) ctx.set_name(path.stem().string());
  return ctx;
}

std::vector<std::pair<std::string, std::string>> sigma_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("sigma map must be a JSON object of object -> scale object");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, v] : doc.items()) {
    if (!v.is_string()) throw ParseError("sigma map value for '" + k + "' must be a string");
    out.emplace_back(k, v.get<std::string>());
  }
  return out;
}

json query_to_json(const FormalContext& base, const Query& q) {
  return {{"premise", base.object_names(q.premise)},
          {"conclusion", base.object_names(q.conclusion)},
          {"shared_intent", base.attribute_names(q.shared_intent)},
          {"candidate_attributes", base.attribute_names(q.candidate_attributes)}};
}

json record_to_json(const FormalContext& base, const QueryRecord& r) {
  json doc = query_to_json(base, r.query);
  if (r.answer.is_accept()) {
    doc["answer"] = "accept";
  } else {
    doc["answer"] = "counterexample";
    doc["counterexample"] = base.attribute_names(r.answer.attributes);
    if (r.new_extent) doc["new_extent"] = base.object_names(*r.new_extent);
  }
  return doc;
}

QueryRecord record_from_json(const FormalContext& base, const json& doc) {
  try {
    QueryRecord r;
    r.query.premise = base.object_set(doc.at("premise").get<std::vector<std::string>>());
    r.query.conclusion = base.object_set(doc.at("conclusion").get<std::vector<std::string>>());
    r.query.shared_intent = base.intent_of(r.query.conclusion);
    r.query.candidate_attributes = base.intent_of(r.query.premise) - r.query.shared_intent;
    const auto answer = doc.at("answer").get<std::string>();
    if (answer == "accept") {
      r.answer = Answer::accept();
    } else if (answer == "counterexample") {
      r.answer = Answer::counterexample(base.attribute_set(doc.at("counterexample").get<std::vector<std::string>>()));
    } else {
      throw ParseError("unknown answer kind '" + answer + "'");
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed history record: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json theory_to_json(const FormalContext& base, const ImplicationTheory& theory) {
  json out = json::array();
  for (const auto& imp : theory)
    out.push_back({{"premise", base.object_names(imp.premise)}, {"conclusion", base.object_names(imp.conclusion)}});
  return out;
}

json session_to_json(const ExplorationSession& session) {
  json history = json::array();
  for (const auto& r : session.history()) history.push_back(record_to_json(session.base(), r));
  return {{"format", "conscale-session"},
          {"version", schema_version},
          {"context", context_to_json(session.base())},
          {"options", {{"init_base", session.options().init_base}}},
          {"history", history}};
}

ExplorationSession session_from_json(const json& doc) {
  check_version(doc, "conscale-session");
  try {
    auto base = context_from_json(doc.at("context"));
    SessionOptions options;
    if (doc.contains("options")) options.init_base = doc["options"].value("init_base", true);
    std::vector<QueryRecord> history;
    for (const auto& r : doc.value("history", json::array())) history.push_back(record_from_json(base, r));
    return replay(std::move(base), options, history);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed session JSON: ") + e.what());
  } catch (const ContractError& e) {
    throw ParseError(e.what());
  }
}

std::vector<ScriptStep> script_from_json(const json& doc) {
  check_version(doc, "conscale-script");
  try {
    std::vector<ScriptStep> steps;
    for (const auto& s : doc.at("steps")) {
      ScriptStep step;
      step.premise = s.at("premise").get<std::vector<std::string>>();
      if (s.contains("conclusion")) step.conclusion = s["conclusion"].get<std::vector<std::string>>();
      step.accept = s.value("accept", false);
      if (s.contains("counterexample")) step.counterexample = s["counterexample"].get<std::vector<std::string>>();
      if (step.accept == !step.counterexample.empty())
        throw ParseError("script step " + std::to_string(steps.size()) + " needs exactly one of accept or counterexample");
      steps.push_back(std::move(step));
    }
    return steps;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed script JSON: ") + e.what());
  }
}

json script_to_json(const std::vector<ScriptStep>& steps) {
  json arr = json::array();
  for (const auto& s : steps) {
    json j = {{"premise", s.premise}};
    if (s.conclusion) j["conclusion"] = *s.conclusion;
    if (s.accept)
      j["accept"] = true;
    else
      j["counterexample"] = s.counterexample;
    arr.push_back(std::move(j));
  }
  return {{"format", "conscale-script"}, {"version", schema_version}, {"steps", arr}};
}

std::vector<ScriptStep> script_from_history(const ExplorationSession& session) {
  std::vector<ScriptStep> steps;
  const auto& base = session.base();
  for (const auto& r : session.history()) {
    ScriptStep s;
    s.premise = base.object_names(r.query.premise);
    s.conclusion = base.object_names(r.query.conclusion);
    s.accept = r.answer.is_accept();
    if (!s.accept) s.counterexample = base.attribute_names(r.answer.attributes);
    steps.push_back(std::move(s));
  }
  return steps;
}

}  // namespace conscale::io
