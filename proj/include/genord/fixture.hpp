#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genord/bigint.hpp"
#include "genord/group.hpp"
#include "genord/perm.hpp"

namespace genord {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupFixture {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<BigInt> expected_order;
  std::vector<std::string> tags;
  std::string source;

  bool has_tag(const std::string& tag) const;
};

/// Loads and validates a group fixture file; image lists that are not
/// bijections are rejected with the offending generator named.
GroupFixture load_group_fixture(const std::string& path);

/// Builds the group and cross-checks expected_order when present.
PermGroup group_from_fixture(const GroupFixture& fixture);

}  // namespace genord
