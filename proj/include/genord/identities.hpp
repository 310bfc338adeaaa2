#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genord/group.hpp"

namespace genord {

/// Executable commutator identities, checked on seeded random tuples:
///   (1) xy = yx[x,y]
///   (2) x^y = x[x,y]
///   (3) [xy,z] = [x,z][x,z,y][y,z]
///   (4) [x^k,y] = [x,y]^(x^(k-1)) ... [x,y]^x [x,y]
/// A counterexample means an implementation bug, never group data.
struct IdentityReport {
  struct Item {
    std::string name;
    int tested = 0;
    int failures = 0;
    std::string first_counterexample;
  };
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<Item> items;
  bool all_pass = true;
};

IdentityReport check_commutator_identities(const PermGroup& group, int samples,
                                           std::uint64_t seed);

}  // namespace genord
