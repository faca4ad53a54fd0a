#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "conscale/context.hpp"
#include "conscale/exploration.hpp"
#include "conscale/scale_measure.hpp"

namespace conscale::io {

using nlohmann::json;

inline constexpr int schema_version = 1;

/// Malformed input; line and column are 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Burmeister .cxt: "B", optional name line, |G|, |M|, object names,
/// attribute names, then |G| rows of '.'/'X' of width |M|.
FormalContext parse_burmeister(const std::string& text);
/// Canonical form: the name line is always written (possibly empty),
/// followed by one blank line before the object names.
std::string write_burmeister(const FormalContext& context);

json context_to_json(const FormalContext& context);
FormalContext context_from_json(const json& doc);

/// Picks the parser from the first non-blank character ('{' means JSON).
FormalContext parse_context(const std::string& text);
FormalContext load_context(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

/// {"g": "scale object", ...}
std::vector<std::pair<std::string, std::string>> sigma_from_json(const json& doc);

json query_to_json(const FormalContext& base, const Query& query);
json record_to_json(const FormalContext& base, const QueryRecord& record);
QueryRecord record_from_json(const FormalContext& base, const json& doc);
json theory_to_json(const FormalContext& base, const ImplicationTheory& theory);

/// Context, options and answer history; enough to rebuild the session by replay.
json session_to_json(const ExplorationSession& session);
ExplorationSession session_from_json(const json& doc);

std::vector<ScriptStep> script_from_json(const json& doc);
json script_to_json(const std::vector<ScriptStep>& steps);
/// Script steps reproducing a session's recorded answers.
std::vector<ScriptStep> script_from_history(const ExplorationSession& session);

}  // namespace conscale::io
