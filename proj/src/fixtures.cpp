#include "lpalg/fixtures.hpp"

#include <algorithm>
#include <filesystem>

#include "lpalg/format.hpp"
#include "lpalg/seed_io.hpp"

namespace lpalg {

namespace {

Fixture make_fixture(std::string name, nlohmann::json data, std::string origin) {
  if (!data.is_object() || !data.contains("seed")) throw ParseError("fixture '" + name + "' has no \"seed\"");
  Fixture f;
  f.name = data.value("name", name);
  f.kind = data.value("kind", data.at("seed").contains("B") ? "cluster" : "lp");
  f.provenance = data.value("provenance", "");
  f.origin = std::move(origin);
  f.data = std::move(data);
  return f;
}

}  // namespace

std::vector<Fixture> list_fixtures(const std::optional<std::string>& extra_dir) {
  std::vector<Fixture> out;
  for (const auto& [name, text] : bundled_fixture_sources())
    out.push_back(make_fixture(name, nlohmann::json::parse(text), "bundled"));
  if (!extra_dir) return out;

  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(*extra_dir, ec)) throw ParseError("fixture directory '" + *extra_dir + "' does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(*extra_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    Fixture f = make_fixture(path.stem().string(), read_json_file(path.string()), path.string());
    auto same = std::find_if(out.begin(), out.end(), [&](const Fixture& g) { return g.name == f.name; });
    if (same != out.end())
      *same = std::move(f);
    else
      out.push_back(std::move(f));
  }
  return out;
}

std::optional<Fixture> find_fixture(const std::string& name, const std::optional<std::string>& extra_dir) {
  for (auto& f : list_fixtures(extra_dir))
    if (f.name == name) return f;
  return std::nullopt;
}

nlohmann::json resolve_seed_document(const std::string& arg, const std::optional<std::string>& extra_dir) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    nlohmann::json j = read_json_file(arg);
    if (j.is_object() && j.contains("seed")) return j.at("seed");
    return j;
  }
  if (auto f = find_fixture(arg, extra_dir)) return f->seed();
  throw ParseError("'" + arg + "' is neither a readable file nor a fixture name");
}

}  // namespace lpalg
