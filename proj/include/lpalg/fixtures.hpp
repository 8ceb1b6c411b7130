#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace lpalg {

// (name, file content) for every fixtures/*.json file, embedded at build time.
const std::vector<std::pair<std::string, std::string>>& bundled_fixture_sources();

struct Fixture {
  std::string name;
  std::string kind;        // "lp" or "cluster"
  std::string provenance;  // short description of where the data comes from
  std::string origin;      // "bundled" or the file it was read from
  nlohmann::json data;     // the whole fixture document
  const nlohmann::json& seed() const { return data.at("seed"); }
};

// Bundled fixtures followed by the *.json files of `extra_dir` (sorted by
// name). A file in `extra_dir` with the name of a bundled fixture replaces it.
std::vector<Fixture> list_fixtures(const std::optional<std::string>& extra_dir = std::nullopt);
std::optional<Fixture> find_fixture(const std::string& name,
                                    const std::optional<std::string>& extra_dir = std::nullopt);

// A seed argument is a path to a seed or fixture file, or a fixture name.
// Returns the seed document.
nlohmann::json resolve_seed_document(const std::string& arg,
                                     const std::optional<std::string>& extra_dir = std::nullopt);

}  // namespace lpalg
