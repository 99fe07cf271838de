#include "weyl/files.hpp"

#include <doctest.h>

using namespace weyl;

namespace {

std::string data_path(const std::string& name) {
  return std::string(WEYL_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("algebra definition files") {
  SUBCASE("the shipped A2 fixture") {
    AlgebraDefinition def = load_algebra_file(data_path("a2.json"));
    CHECK(def.name == "A2");
    CHECK(def.cartan.rank() == 2);
    CHECK(def.cartan.cartan_class() == CartanClass::Finite);
  }
  SUBCASE("labels are carried through") {
    AlgebraDefinition def = parse_algebra_json(
        R"({"name": "x", "cartan": [[2,-1],[-1,2]], "labels": ["a","b"]})");
    CHECK(def.cartan.labels() == std::vector<std::string>{"a", "b"});
  }
  SUBCASE("diagnostics") {
    CHECK_THROWS_AS(parse_algebra_json("["), SchemaError);
    CHECK_THROWS_AS(parse_algebra_json("[1,2]"), SchemaError);
    CHECK_THROWS_AS(parse_algebra_json(R"({"name": "x"})"), SchemaError);
    CHECK_THROWS_AS(
        parse_algebra_json(R"({"rank": 3, "cartan": [[2,-1],[-1,2]]})"),
        SchemaError);
    CHECK_THROWS_AS(
        parse_algebra_json(R"({"cartan": [[2,-1],[0,2]]})"), SchemaError);
    CHECK_THROWS_AS(
        parse_algebra_json(R"({"cartan": [[2,-1.5],[-1,2]]})"), SchemaError);
    CHECK_THROWS_AS(load_algebra_file("/no/such/algebra.json"), SchemaError);
  }
}

TEST_CASE("series files") {
  CHECK_THROWS_AS(load_series_file("/no/such/series.txt"), SchemaError);
}
