#pragma once

#include "json.hpp"
#include "loctest/verdict.hpp"

namespace loctest {

// Fixed top-level fields: property, holds, route, witness, stats.
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const Witness& w);

// Inverse of to_json; throws std::invalid_argument on schema violations.
Verdict verdict_from_json(const nlohmann::json& j);
Witness witness_from_json(const nlohmann::json& j);

}  // namespace loctest
