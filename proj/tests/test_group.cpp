#include <doctest.h>

#include <random>

#include "genord/group.hpp"
#include "test_support.hpp"

using namespace genord;
using genord::testing::bfs_closure;

namespace {

PermGroup from_cycles(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(Permutation::from_cycles(g, degree));
  return PermGroup(perms);
}

}  // namespace

TEST_CASE("order of standard groups") {
  CHECK(from_cycles(4, {"(1,2)", "(1,2,3,4)"}).order() == 24);
  CHECK(from_cycles(3, {"(1,2,3)"}).order() == 3);
  CHECK(from_cycles(5, {"(1,2,3)", "(1,2,3,4,5)"}).order() == 60);
  CHECK(from_cycles(7, {"(1,2)", "(1,2,3,4,5,6,7)"}).order() == 5040);
  CHECK(PermGroup({Permutation(6)}).order() == 1);
}

TEST_CASE("order and membership agree with breadth-first closure") {
  std::vector<std::vector<std::string>> cases = {
      {"(1,2,3,4)", "(1,3)"},           // dihedral of order 8
      {"(1,2,3)", "(2,3,4)"},           // A4
      {"(1,2)", "(3,4,5)"},             // C2 x C3
      {"(1,2,3,4,5)", "(1,2)"},         // S5
      {"(1,2,3,4,5,6)", "(1,2)"},       // S6
  };
  for (const auto& gens : cases) {
    std::size_t degree = 6;
    PermGroup g = from_cycles(degree, gens);
    std::vector<Permutation> perms;
    for (const auto& text : gens) perms.push_back(Permutation::from_cycles(text, degree));
    auto closure = bfs_closure(perms);
    CHECK(g.order() == closure.size());
    for (const auto& e : closure) CHECK(g.contains(e));
    CHECK(g.contains(Permutation(degree)));
  }
}

TEST_CASE("membership rejects outsiders") {
  PermGroup a4 = from_cycles(4, {"(1,2,3)", "(2,3,4)"});
  CHECK_FALSE(a4.contains(Permutation::from_cycles("(1,2)", 4)));
  CHECK(a4.contains(Permutation::from_cycles("(1,2)(3,4)", 4)));
}

TEST_CASE("seeded random subgroups agree with closure") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t degree = 5 + trial % 3;
    std::vector<Permutation> gens;
    for (int i = 0; i < 2; ++i) {
      std::vector<std::uint32_t> img(degree);
      for (std::size_t p = 0; p < degree; ++p) img[p] = static_cast<std::uint32_t>(p);
      std::shuffle(img.begin(), img.end(), rng);
      gens.push_back(Permutation::from_images(std::move(img)));
    }
    auto closure = bfs_closure(gens);
    PermGroup g(gens);
    REQUIRE(g.order() == closure.size());
    for (const auto& e : closure) CHECK(g.contains(e));
  }
}

TEST_CASE("element enumeration is exact and distinct") {
  PermGroup s4 = from_cycles(4, {"(1,2)", "(1,2,3,4)"});
  auto elems = s4.elements();
  CHECK(elems.size() == 24);
  std::set<Permutation> uniq(elems.begin(), elems.end());
  CHECK(uniq.size() == 24);
  for (const auto& e : elems) CHECK(s4.contains(e));

  PermGroup trivial({Permutation(3)});
  auto only = trivial.elements();
  REQUIRE(only.size() == 1);
  CHECK(only[0].is_identity());

  PermGroup s3 = from_cycles(3, {"(1,2)", "(1,2,3)"});
  CHECK(s3.elements().size() == 6);
}

TEST_CASE("enumeration cap names the cap in its error") {
  PermGroup s7 = from_cycles(7, {"(1,2)", "(1,2,3,4,5,6,7)"});
  CHECK_THROWS_WITH_AS(s7.elements(100),
                       doctest::Contains("too large for enumeration (cap 100)"),
                       EnumerationCapError);
}

TEST_CASE("random elements are members and deterministic per seed") {
  PermGroup s5 = from_cycles(5, {"(1,2)", "(1,2,3,4,5)"});
  std::mt19937_64 rng1(7), rng2(7);
  for (int i = 0; i < 50; ++i) {
    Permutation a = s5.random_element(rng1);
    Permutation b = s5.random_element(rng2);
    CHECK(a == b);
    CHECK(s5.contains(a));
  }
}

TEST_CASE("transitivity detection") {
  CHECK(from_cycles(4, {"(1,2)", "(1,2,3,4)"}).is_transitive());
  CHECK_FALSE(from_cycles(5, {"(1,2)", "(3,4,5)"}).is_transitive());
}

TEST_CASE("cayley embedding of cyclic and symmetric tables") {
  // C3: a regular transitive group of order 3 on 3 points
  MultiplicationTable c3 = MultiplicationTable::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  PermGroup g3 = cayley_embedding(c3);
  CHECK(g3.order() == 3);
  CHECK(g3.degree() == 3);
  CHECK(g3.is_transitive());

  // S3's table built from its own elements
  PermGroup s3 = from_cycles(3, {"(1,2)", "(1,2,3)"});
  auto elems = s3.elements();
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Permutation prod = compose(elems[a], elems[b]);
      rows[a][b] = static_cast<int>(
          std::find(elems.begin(), elems.end(), prod) - elems.begin());
    }
  PermGroup g6 = cayley_embedding(MultiplicationTable::from_rows(rows));
  CHECK(g6.order() == 6);
  CHECK(g6.degree() == 6);

  // regular actions are faithful: no non-identity element fixes a point
  for (const auto& e : g6.elements()) {
    if (e.is_identity()) continue;
    for (std::uint32_t p = 0; p < 6; ++p) CHECK(e[p] != p);
  }

  MultiplicationTable t1 = MultiplicationTable::from_rows({{0}});
  CHECK(cayley_embedding(t1).order() == 1);
}

TEST_CASE("multiplication table validation") {
  CHECK_THROWS_WITH_AS(MultiplicationTable::from_rows({{0, 1}, {0, 1}}),
                       doctest::Contains("column"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(MultiplicationTable::from_rows({{0, 0}, {1, 1}}),
                       doctest::Contains("row"), std::invalid_argument);
  // Latin square with two-sided identity but no associativity (order-5 loop)
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  CHECK_THROWS_WITH_AS(MultiplicationTable::from_rows(loop),
                       doctest::Contains("associative"), std::invalid_argument);
}
