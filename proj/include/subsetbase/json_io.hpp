#pragma once

// Stable machine-readable formats.
//
// Hypergraph:  {"schema_version": 1, "vertices": l, "edges": [[...], ...]}
// BaseFamily:  {"schema_version": 1, "group": "S"|"A", "n": n, "r": r,
//               "uniform": bool, "sets": [[...], ...]}
//
// Labels are 1-based and lists are sorted; edge and set order is preserved.
// schema_version is optional on input and rejected when unrecognized.

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "subsetbase/core.hpp"
#include "subsetbase/family.hpp"
#include "subsetbase/hypergraph.hpp"

namespace subsetbase {

constexpr int kSchemaVersion = 1;

/// A base family bundled with the action it was built or checked against.
struct FamilyDocument {
  ActionSpec spec;
  BaseFamily family;
};

namespace detail {

inline void check_schema_version(const nlohmann::json& j) {
  if (j.contains("schema_version") &&
      j.at("schema_version").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported schema_version");
}

inline std::vector<std::vector<int>> int_lists(const nlohmann::json& j,
                                               const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw std::invalid_argument(std::string("missing or non-array \"") + key +
                                "\"");
  std::vector<std::vector<int>> out;
  for (const auto& row : j.at(key)) {
    if (!row.is_array())
      throw std::invalid_argument(std::string("\"") + key +
                                  "\" must hold arrays of integers");
    std::vector<int> entry;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw std::invalid_argument(std::string("\"") + key +
                                    "\" must hold arrays of integers");
      entry.push_back(v.get<int>());
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace detail

inline nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["vertices"] = h.vertex_count();
  j["edges"] = h.edges();
  return j;
}

inline Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  detail::check_schema_version(j);
  if (!j.contains("vertices") || !j.at("vertices").is_number_integer())
    throw std::invalid_argument("hypergraph: missing integer \"vertices\"");
  const int vertices = j.at("vertices").get<int>();
  return Hypergraph(vertices, detail::int_lists(j, "edges"));
}

inline nlohmann::json to_json(const FamilyDocument& doc) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = to_string(doc.spec.group);
  j["n"] = doc.spec.n;
  j["r"] = doc.spec.r;
  j["uniform"] = doc.spec.uniform;
  j["sets"] = doc.family.sets;
  return j;
}

inline FamilyDocument family_from_json(const nlohmann::json& j) {
  detail::check_schema_version(j);
  FamilyDocument doc;
  if (!j.contains("group") || !j.at("group").is_string())
    throw std::invalid_argument("family: missing string \"group\"");
  const std::string group = j.at("group").get<std::string>();
  if (group == "S")
    doc.spec.group = Group::symmetric;
  else if (group == "A")
    doc.spec.group = Group::alternating;
  else
    throw std::invalid_argument("family: \"group\" must be \"S\" or \"A\"");
  for (const char* key : {"n", "r"})
    if (!j.contains(key) || !j.at(key).is_number_integer())
      throw std::invalid_argument(std::string("family: missing integer \"") +
                                  key + "\"");
  doc.spec.n = j.at("n").get<std::int64_t>();
  doc.spec.r = j.at("r").get<std::int64_t>();
  if (!j.contains("uniform") || !j.at("uniform").is_boolean())
    throw std::invalid_argument("family: missing boolean \"uniform\"");
  doc.spec.uniform = j.at("uniform").get<bool>();
  doc.family.n = doc.spec.n;
  doc.family.sets = detail::int_lists(j, "sets");
  for (auto& s : doc.family.sets) std::sort(s.begin(), s.end());
  validate(doc.family);
  return doc;
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  nlohmann::json j;
  in >> j;  // throws nlohmann::json::parse_error on malformed input
  return j;
}

inline void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace subsetbase
