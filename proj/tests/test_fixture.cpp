#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "genord/classes.hpp"
#include "genord/fixture.hpp"
#include "test_support.hpp"

using namespace genord;
using genord::testing::fixture_path;

TEST_CASE("loading shipped fixtures validates expected order") {
  for (const char* name : {"s3", "s4", "s5", "a4", "a5", "c3", "c18", "d8", "q8",
                           "heis3", "g18_1", "g18_2", "g18_3", "g18_4", "g18_5",
                           "psl27", "sg_81_8"}) {
    GroupFixture fixture = load_group_fixture(fixture_path(std::string(name) + ".json"));
    PermGroup group = group_from_fixture(fixture);
    CHECK(group.order() == *fixture.expected_order);
    CHECK(group.degree() == fixture.degree);
  }
}

TEST_CASE("sz8 fixture: degree 65, order 29120, 11 classes") {
  GroupFixture fixture = load_group_fixture(fixture_path("sz8.json"));
  PermGroup group = group_from_fixture(fixture);
  CHECK(group.order() == 29120);
  CHECK(group.degree() == 65);
  CHECK(group.is_transitive());
  ClassTable t = ClassTable::build(group);
  CHECK(t.num_classes() == 11);
  RealCensus census = t.real_census();
  CHECK(census.lambda == 8);
  CHECK(census.mu == 1);
}

TEST_CASE("sz8 order is confirmed by breadth-first closure") {
  GroupFixture fixture = load_group_fixture(fixture_path("sz8.json"));
  auto closure = genord::testing::bfs_closure(fixture.generators);
  CHECK(closure.size() == 29120);
}

TEST_CASE("malformed fixtures are rejected with field coordinates") {
  auto write_temp = [](const std::string& text) {
    std::string path = "genord_test_fixture.json";
    std::ofstream out(path);
    out << text;
    return path;
  };

  std::string bad_bijection = write_temp(
      R"({"name":"bad","degree":3,"generators":[[1,2,3],[2,2,3]]})");
  CHECK_THROWS_WITH_AS(load_group_fixture(bad_bijection),
                       doctest::Contains("generators[1]"), FixtureError);

  std::string bad_length = write_temp(
      R"({"name":"bad","degree":3,"generators":[[1,2,3,4]]})");
  CHECK_THROWS_WITH_AS(load_group_fixture(bad_length), doctest::Contains("length"),
                       FixtureError);

  std::string bad_order = write_temp(
      R"({"name":"bad","degree":3,"generators":[[2,3,1]],"expected_order":7})");
  GroupFixture fixture = load_group_fixture(bad_order);
  CHECK_THROWS_WITH_AS(group_from_fixture(fixture), doctest::Contains("expected_order"),
                       FixtureError);

  CHECK_THROWS_AS(load_group_fixture("no_such_file.json"), FixtureError);
  std::remove("genord_test_fixture.json");
}

TEST_CASE("tags are exposed") {
  GroupFixture fixture = load_group_fixture(fixture_path("heis3.json"));
  CHECK(fixture.has_tag("p-group"));
  CHECK_FALSE(fixture.has_tag("simple"));
}
