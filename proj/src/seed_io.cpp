#include "lpalg/seed_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lpalg {

namespace {

VarNames name_list(const nlohmann::json& j, const char* key, bool required) {
  if (!j.contains(key)) {
    if (required) throw ParseError(std::string("missing \"") + key + "\"");
    return {};
  }
  const auto& v = j.at(key);
  if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be a list of names");
  VarNames out;
  for (const auto& x : v) {
    if (!x.is_string()) throw ParseError(std::string("\"") + key + "\" must be a list of names");
    out.push_back(x.get<std::string>());
    if (!is_valid_name(out.back())) throw ParseError("invalid variable name '" + out.back() + "'");
  }
  return out;
}

}  // namespace

LPSeed seed_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("seed must be a JSON object");
  VarNames active = name_list(j, "vars", true);
  VarNames frozen = name_list(j, "frozen", false);
  if (!j.contains("exchange") || !j.at("exchange").is_object())
    throw ParseError("missing \"exchange\" object");
  const auto& ex = j.at("exchange");
  VarNames names = active;
  names.insert(names.end(), frozen.begin(), frozen.end());
  std::vector<LaurentPoly> exchange;
  for (const auto& v : active) {
    if (!ex.contains(v) || !ex.at(v).is_string()) throw ParseError("missing exchange polynomial for '" + v + "'");
    LaurentPoly p = parse_laurent(ex.at(v).get<std::string>(), names);
    for (std::size_t i = 0; i < active.size(); ++i)
      if (p.min_exponent(i) < 0)
        throw ParseError("exchange polynomial of '" + v + "' has a negative exponent on active variable '" +
                         active[i] + "'");
    exchange.push_back(std::move(p));
  }
  if (ex.size() != active.size()) throw ParseError("\"exchange\" has entries for unknown variables");
  LPSeed s = LPSeed::make(std::move(active), std::move(frozen), std::move(exchange));
  if (j.contains("root")) {
    s.root_names = name_list(j, "root", true);
    VarNames units = name_list(j, "root_units", false);
    s.root_unit.assign(s.root_names.size(), false);
    for (std::size_t r = 0; r < s.root_names.size(); ++r)
      s.root_unit[r] = std::find(units.begin(), units.end(), s.root_names[r]) != units.end();
    if (!j.contains("expansions") || !j.at("expansions").is_object())
      throw ParseError("\"root\" requires an \"expansions\" object");
    const auto& xs = j.at("expansions");
    s.expansion.clear();
    for (const auto& v : s.names()) {
      if (!xs.contains(v) || !xs.at(v).is_string()) throw ParseError("missing expansion for '" + v + "'");
      s.expansion.push_back(parse_rational(xs.at(v).get<std::string>(), s.root_names));
    }
  }
  return s;
}

nlohmann::ordered_json seed_to_json(const LPSeed& s) {
  nlohmann::ordered_json j;
  j["vars"] = s.active;
  j["frozen"] = s.frozen;
  const VarNames names = s.names();
  nlohmann::ordered_json ex = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < s.rank(); ++i) ex[s.active[i]] = to_string(s.exchange[i], names);
  j["exchange"] = ex;
  bool identity = s.root_names == names;
  for (std::size_t i = 0; identity && i < s.expansion.size(); ++i)
    identity = s.expansion[i] == RationalFn::variable(names.size(), i);
  if (!identity) {
    j["root"] = s.root_names;
    VarNames units;
    for (std::size_t r = 0; r < s.root_names.size(); ++r)
      if (s.root_unit[r]) units.push_back(s.root_names[r]);
    j["root_units"] = units;
    nlohmann::ordered_json xs = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < names.size(); ++i) xs[names[i]] = to_string(s.expansion[i], s.root_names);
    j["expansions"] = xs;
  }
  if (s.unchecked) j["unchecked"] = true;
  return j;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

LPSeed load_seed_file(const std::string& path) { return seed_from_json(read_json_file(path)); }

}  // namespace lpalg
