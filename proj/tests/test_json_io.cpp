#include <catch2/catch_amalgamated.hpp>

#include "subsetbase/base_builder.hpp"
#include "subsetbase/json_io.hpp"

using namespace subsetbase;

TEST_CASE("hypergraph JSON round trip") {
  const Hypergraph h(3, {{}, {1}, {1, 3}});
  const nlohmann::json j = to_json(h);
  CHECK(j.at("vertices") == 3);
  CHECK(j.at("schema_version") == kSchemaVersion);
  const Hypergraph back = hypergraph_from_json(j);
  CHECK(back.vertex_count() == h.vertex_count());
  CHECK(back.edges() == h.edges());
}

TEST_CASE("family JSON round trip keeps spec and set order") {
  FamilyDocument doc;
  doc.spec = {Group::alternating, 9, 3, true};
  doc.family = construct_base(doc.spec);
  const nlohmann::json j = to_json(doc);
  CHECK(j.at("group") == "A");
  const FamilyDocument back = family_from_json(j);
  CHECK(back.spec.group == Group::alternating);
  CHECK(back.spec.n == 9);
  CHECK(back.spec.r == 3);
  CHECK(back.spec.uniform);
  CHECK(back.family.sets == doc.family.sets);
}

TEST_CASE("round trip is the identity on random constructions") {
  for (std::int64_t n = 6; n <= 14; ++n) {
    FamilyDocument doc;
    doc.spec = {Group::symmetric, n, 3, false};
    doc.family = construct_base(doc.spec);
    const FamilyDocument back = family_from_json(to_json(doc));
    CHECK(back.family.sets == doc.family.sets);
    CHECK(to_json(back).dump() == to_json(doc).dump());
  }
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(family_from_json(nlohmann::json{{"group", "S"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_from_json(nlohmann::json{{"group", "X"},
                                                  {"n", 4},
                                                  {"r", 2},
                                                  {"uniform", true},
                                                  {"sets", {{1, 2}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      family_from_json(nlohmann::json{{"group", "S"},
                                      {"n", 4},
                                      {"r", 2},
                                      {"uniform", true},
                                      {"sets", {{1, 9}}}}),
      std::domain_error);  // member out of range
  CHECK_THROWS_AS(
      hypergraph_from_json(nlohmann::json{{"vertices", 2}, {"edges", 7}}),
      std::invalid_argument);
  nlohmann::json versioned{{"group", "S"}, {"n", 4},   {"r", 2},
                           {"uniform", true}, {"sets", {{1, 2}}}};
  versioned["schema_version"] = 99;
  CHECK_THROWS_AS(family_from_json(versioned), std::invalid_argument);
}

TEST_CASE("unsorted input sets are canonicalized") {
  const nlohmann::json j{{"group", "S"},
                         {"n", 5},
                         {"r", 2},
                         {"uniform", true},
                         {"sets", {{2, 1}, {5, 3}}}};
  const FamilyDocument doc = family_from_json(j);
  CHECK(doc.family.sets == std::vector<std::vector<int>>{{1, 2}, {3, 5}});
}
