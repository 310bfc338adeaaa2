#include <doctest.h>

#include "genord/classalg.hpp"
#include <random>

#include "genord/oracle.hpp"
#include "test_support.hpp"

using namespace genord;

namespace {

PermGroup from_cycles(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(Permutation::from_cycles(g, degree));
  return PermGroup(perms);
}

}  // namespace

TEST_CASE("brute alpha on s3: 9-pair enumeration gives 3") {
  PermGroup s3 = from_cycles(3, {"(1,2)", "(1,2,3)"});
  auto transpositions = brute_class_of(s3, Permutation::from_cycles("(1,2)", 3));
  REQUIRE(transpositions.size() == 3);
  CHECK(brute_alpha(s3, transpositions, 2) == 3);
  CHECK(brute_alpha(s3, transpositions, 3) == 0);
  CHECK(brute_alpha(s3, {Permutation(3)}, 4) == 1);
  CHECK_THROWS_AS(brute_alpha(s3, transpositions, 0), std::invalid_argument);
}

TEST_CASE("brute generalized order basics") {
  PermGroup s5 = from_cycles(5, {"(1,2)", "(1,2,3,4,5)"});
  CHECK(brute_generalized_order(s5, Permutation(5)) == 1);
  CHECK(brute_generalized_order(s5, Permutation::from_cycles("(1,2)", 5)) == 2);
  // an n-cycle has generalized order 2 while its order is n
  Permutation five_cycle = Permutation::from_cycles("(1,2,3,4,5)", 5);
  CHECK(five_cycle.order() == 5);
  CHECK(brute_generalized_order(s5, five_cycle) == 2);
}

TEST_CASE("oracle cap is enforced") {
  PermGroup s7 = from_cycles(7, {"(1,2)", "(1,2,3,4,5,6,7)"});
  CHECK_THROWS_AS(brute_generalized_order(s7, Permutation(7), 100), EnumerationCapError);
  CHECK_THROWS_AS(brute_alpha(s7, {Permutation(7)}, 2, 100), EnumerationCapError);
}

TEST_CASE("oracle agrees with the class-level method") {
  std::vector<PermGroup> groups = {from_cycles(3, {"(1,2)", "(1,2,3)"}),
                                   from_cycles(4, {"(1,2,3)", "(2,3,4)"}),
                                   from_cycles(4, {"(1,2,3,4)", "(1,3)"}),
                                   from_cycles(5, {"(1,2,3)", "(1,2,3,4,5)"})};
  for (const auto& g : groups) {
    ClassTable t = ClassTable::build(g);
    for (int c = 0; c < t.num_classes(); ++c) {
      std::vector<Permutation> members;
      for (std::uint32_t id : t.class_members(c)) members.push_back(t.index().element(id));
      for (int k = 1; k <= 6; ++k)
        CHECK(brute_alpha(g, members, k) == alpha_direct(t, c, k));
      CHECK(brute_generalized_order(g, t.cls(c).representative) ==
            generalized_order(t, c).generalized_order.value());
    }
  }
}

TEST_CASE("generalized order is invariant under conjugation") {
  PermGroup a4 = from_cycles(4, {"(1,2,3)", "(2,3,4)"});
  std::mt19937_64 rng(314);
  for (const char* cycles : {"(1,2,3)", "(1,2)(3,4)"}) {
    Permutation x = Permutation::from_cycles(cycles, 4);
    int reference = brute_generalized_order(a4, x);
    for (int trial = 0; trial < 10; ++trial) {
      Permutation g = a4.random_element(rng);
      CHECK(brute_generalized_order(a4, conjugate(x, g)) == reference);
    }
  }
}

TEST_CASE("element-level class function is constant on classes") {
  // f_2 over A4 for a 3-cycle class: check the class-function property by
  // comparing alpha computed from each member's class as the seed set
  PermGroup a4 = from_cycles(4, {"(1,2,3)", "(2,3,4)"});
  auto cls = brute_class_of(a4, Permutation::from_cycles("(1,2,3)", 4));
  REQUIRE(cls.size() == 4);
  for (const auto& member : cls) {
    auto again = brute_class_of(a4, member);
    CHECK(again.size() == cls.size());
    CHECK(brute_alpha(a4, again, 3) == brute_alpha(a4, cls, 3));
  }
  // and directly: f_k agrees across every conjugation orbit
  for (const auto& g : {from_cycles(3, {"(1,2)", "(1,2,3)"}),
                        from_cycles(4, {"(1,2,3)", "(2,3,4)"}),
                        from_cycles(4, {"(1,2,3,4)", "(1,3)"})}) {
    auto members = brute_class_of(g, g.generators()[0]);
    for (int k = 1; k <= 4; ++k) CHECK(brute_class_function_constant(g, members, k));
  }
}
