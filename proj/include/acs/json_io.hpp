#pragma once

// JSON wire formats shared by the CLI and tests.
//   Family:     {"n": 5, "sets": [[1,3],[2]]}   (elements 1-based, ascending)
//   Transcript: {"n": 5, "entries": [{"query":[1,3],"answer":true}, ...]}
// Round-trips are bit-exact.

#include <nlohmann/json.hpp>

#include "acs/core.hpp"
#include "acs/oracle.hpp"

namespace acs {

nlohmann::json family_to_json(const Family& f);
Family family_from_json(const nlohmann::json& j);

nlohmann::json transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const nlohmann::json& j);

}  // namespace acs
