#pragma once

#include "f2add/generator.hpp"
#include "f2add/gf2.hpp"
#include "f2add/pipeline.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace f2add {

using Json = nlohmann::ordered_json;

/// Set literal {"dim": n, "elements": [...]} shared by tests and the CLI.
Json set_to_json(const DenseSet& s);
DenseSet set_from_json(const Json& j);

Json generator_spec_to_json(const GeneratorSpec& spec);

/// Full pipeline report, schema "trace_version" 1. Insertion-ordered keys
/// keep byte-identical output for identical runs.
Json theorem_result_to_json(const TheoremResult& result);

/// Re-validates every integer inequality of a serialized report from the
/// serialized sets alone: subspace consistency, all intersection counts,
/// the extraction's hlower/alower, and the final certificate. Returns the
/// list of discrepancies (empty means the report rechecks clean).
std::vector<std::string> recheck_report(const Json& report);

}  // namespace f2add
