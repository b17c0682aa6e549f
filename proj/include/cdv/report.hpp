// Structured (JSON, schema "1") documents for every CLI command, and a plain
// text rendering derived from them.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdv/theorems.hpp"

namespace cdv {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json weight_json(const Weight& w);

Json classify_json(const Polynomial& f, const SingularityType& type);
/// `checks` may be empty when the non-degeneracy test was skipped.
Json diagram_json(const NewtonDiagram& d, const std::vector<NondegeneracyResult>& checks);
Json weights_json(const NewtonDiagram& d, int max_coord, const std::vector<Weight>& weights);
Json analysis_json(const Analysis& a);
Json lemmas_json(const SingularityType& type, int max_m = 32);
Json corpus_json(const std::vector<CorpusOutcome>& outcomes);

/// {"schema": "1", "command": ..., "config": ...} followed by the body's keys.
Json make_document(const std::string& command, const Json& config, const Json& body);

/// Indented text, same facts as the JSON. Deterministic.
std::string render_text(const Json& doc);
std::string render_json(const Json& doc);

}  // namespace cdv
