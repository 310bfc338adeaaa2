#include "genord/fixture.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

namespace genord {

bool GroupFixture::has_tag(const std::string& tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

GroupFixture load_group_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open group fixture: " + path);
  nlohmann::json data;
  try {
    in >> data;
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(path + ": " + e.what());
  }

  GroupFixture fixture;
  try {
    fixture.name = data.at("name").get<std::string>();
    fixture.degree = data.at("degree").get<std::size_t>();
    fixture.source = data.value("source", std::string());
    if (data.contains("tags"))
      fixture.tags = data.at("tags").get<std::vector<std::string>>();
    if (data.contains("expected_order"))
      fixture.expected_order = BigInt(data.at("expected_order").get<std::uint64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(path + ": malformed fixture: " + e.what());
  }

  const auto& gens = data.at("generators");
  if (gens.empty()) throw FixtureError(path + ": generators must be nonempty");
  int index = 0;
  for (const auto& entry : gens) {
    std::vector<long long> images;
    try {
      images = entry.get<std::vector<long long>>();
    } catch (const nlohmann::json::exception& e) {
      throw FixtureError(path + ": generators[" + std::to_string(index) + "]: " + e.what());
    }
    if (images.size() != fixture.degree)
      throw FixtureError(path + ": generators[" + std::to_string(index) + "] has length " +
                         std::to_string(images.size()) + ", expected degree " +
                         std::to_string(fixture.degree));
    try {
      fixture.generators.push_back(Permutation::from_images_1based(images));
    } catch (const std::invalid_argument& e) {
      throw FixtureError(path + ": generators[" + std::to_string(index) + "]: " + e.what());
    }
    ++index;
  }
  return fixture;
}

PermGroup group_from_fixture(const GroupFixture& fixture) {
  PermGroup group(fixture.generators);
  if (fixture.expected_order && group.order() != *fixture.expected_order)
    throw FixtureError("fixture " + fixture.name + ": constructed order " +
                       group.order().str() + " does not match expected_order " +
                       fixture.expected_order->str());
  return group;
}

}  // namespace genord
