#include "twistbar/monoid_json.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "twistbar/errors.hpp"

namespace twistbar {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

int lookup(const std::unordered_map<std::string, int>& ids, const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + ": expected an element name string");
  auto it = ids.find(value.get<std::string>());
  if (it == ids.end()) throw ParseError(where + ": '" + value.get<std::string>() + "' is not a listed element");
  return it->second;
}

}  // namespace

MonoidTables parse_monoid_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("monoid document must be a JSON object");

  MonoidTables t;
  const json& elements = field(doc, "elements");
  if (!elements.is_array() || elements.empty()) throw ParseError("'elements' must be a non-empty array");
  std::unordered_map<std::string, int> ids;
  for (const auto& el : elements) {
    if (!el.is_string()) throw ParseError("'elements' entries must be strings");
    auto name = el.get<std::string>();
    if (!ids.emplace(name, static_cast<int>(t.names.size())).second)
      throw ParseError("duplicate element '" + name + "'");
    t.names.push_back(std::move(name));
  }
  const auto k = t.names.size();

  t.unit = lookup(ids, field(doc, "unit"), "unit");

  const json& mult = field(doc, "mult");
  if (!mult.is_array() || mult.size() != k) throw ParseError("'mult' must have one row per element");
  for (std::size_t r = 0; r < k; ++r) {
    if (!mult[r].is_array() || mult[r].size() != k)
      throw ParseError("'mult' row " + std::to_string(r) + " must have one entry per element");
    std::vector<int> row;
    for (std::size_t c = 0; c < k; ++c)
      row.push_back(lookup(ids, mult[r][c], "mult[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    t.mult.push_back(std::move(row));
  }

  const json& tau = field(doc, "tau");
  if (!tau.is_array() || tau.size() != k) throw ParseError("'tau' must have one entry per element");
  for (std::size_t i = 0; i < k; ++i) t.tau.push_back(lookup(ids, tau[i], "tau[" + std::to_string(i) + "]"));
  return t;
}

MonoidTables load_monoid_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_monoid_json(buf.str());
}

std::string monoid_to_json(const TwistedMonoid& monoid) {
  nlohmann::ordered_json doc;
  doc["elements"] = monoid.names();
  doc["unit"] = monoid.name(monoid.unit());
  auto mult = nlohmann::ordered_json::array();
  for (int a = 0; a < monoid.size(); ++a) {
    auto row = nlohmann::ordered_json::array();
    for (int b = 0; b < monoid.size(); ++b) row.push_back(monoid.name(monoid.mul(a, b)));
    mult.push_back(std::move(row));
  }
  doc["mult"] = std::move(mult);
  auto tau = nlohmann::ordered_json::array();
  for (int a = 0; a < monoid.size(); ++a) tau.push_back(monoid.name(monoid.tau(a)));
  doc["tau"] = std::move(tau);
  return doc.dump(2);
}

}  // namespace twistbar
