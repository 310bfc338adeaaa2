#include <doctest.h>

#include "genord/identities.hpp"
#include "test_support.hpp"

using namespace genord;

namespace {

PermGroup from_cycles(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(Permutation::from_cycles(g, degree));
  return PermGroup(perms);
}

}  // namespace

TEST_CASE("trivial instances") {
  // identity (2) with y = 1 and identity (4) with k = 1 collapse
  auto x = Permutation::from_cycles("(1,2,3)", 4);
  auto e = Permutation(4);
  CHECK(conjugate(x, e) == compose(x, commutator(x, e)));
  CHECK(commutator(perm_pow(x, 1), e) == commutator(x, e));
}

TEST_CASE("1000 random tuples in s5 pass all four identities") {
  PermGroup s5 = from_cycles(5, {"(1,2)", "(1,2,3,4,5)"});
  IdentityReport report = check_commutator_identities(s5, 1000, 12345);
  CHECK(report.all_pass);
  REQUIRE(report.items.size() == 4);
  for (const auto& item : report.items) {
    CHECK(item.tested == 1000);
    CHECK(item.failures == 0);
  }
}

TEST_CASE("identities hold on assorted fixtures and are seed-deterministic") {
  for (const auto& g : {from_cycles(4, {"(1,2,3,4)", "(1,3)"}),
                        from_cycles(4, {"(1,2,3)", "(2,3,4)"}),
                        from_cycles(3, {"(1,2,3)"})}) {
    IdentityReport a = check_commutator_identities(g, 250, 42);
    IdentityReport b = check_commutator_identities(g, 250, 42);
    CHECK(a.all_pass);
    for (std::size_t i = 0; i < a.items.size(); ++i)
      CHECK(a.items[i].failures == b.items[i].failures);
  }
}
