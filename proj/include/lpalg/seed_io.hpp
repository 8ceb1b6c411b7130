#pragma once

#include <string>

#include <json.hpp>

#include "lpalg/seed.hpp"

namespace lpalg {

// {"vars": [...], "frozen": [...], "exchange": {"a": "b+1", ...}}. Optional
// "root", "root_units" and "expansions" restore a seed that is not a root.
// Throws ParseError on malformed input.
LPSeed seed_from_json(const nlohmann::json& j);
nlohmann::ordered_json seed_to_json(const LPSeed& s);

nlohmann::json read_json_file(const std::string& path);
LPSeed load_seed_file(const std::string& path);

}  // namespace lpalg
