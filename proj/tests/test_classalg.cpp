#include <doctest.h>

#include "genord/classalg.hpp"
#include "test_support.hpp"

using namespace genord;

namespace {

PermGroup from_cycles(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(Permutation::from_cycles(g, degree));
  return PermGroup(perms);
}

// test-side oracle: count k-tuples from the class with product 1 by direct
// enumeration (k <= 3 keeps this cheap)
BigInt enumerate_alpha(const ClassTable& t, int c, int k) {
  std::vector<Permutation> members;
  for (std::uint32_t id : t.class_members(c)) members.push_back(t.index().element(id));
  BigInt count = 0;
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    Permutation prod(t.group().degree());
    for (int i = 0; i < k; ++i) prod = compose(prod, members[pick[i]]);
    if (prod.is_identity()) ++count;
    int pos = k - 1;
    while (pos >= 0 && ++pick[pos] == members.size()) pick[pos--] = 0;
    if (pos < 0) break;
  }
  return count;
}

}  // namespace

TEST_CASE("step distribution basics") {
  ClassTable s3 = ClassTable::build(from_cycles(3, {"(1,2)", "(1,2,3)"}));
  int trans = s3.class_of(Permutation::from_cycles("(1,2)", 3));
  int cyc = s3.class_of(Permutation::from_cycles("(1,2,3)", 3));

  // e = identity: all mass lands on the inverse class
  auto d = step_distribution(s3, 0, cyc);
  CHECK(d[s3.inverse_class(cyc)] == 2);
  CHECK(d[0] == 0);

  // c = identity: mass 1 on e
  d = step_distribution(s3, trans, 0);
  CHECK(d[trans] == 1);

  // e = c = transposition class: 1 identity, 2 three-cycles
  d = step_distribution(s3, trans, trans);
  CHECK(d[0] == 1);
  CHECK(d[cyc] == 2);
  CHECK(d[trans] == 0);

  CHECK_THROWS_AS(step_distribution(s3, 7, 0), std::out_of_range);
}

TEST_CASE("alpha of the s3 transposition class, frozen oracle values") {
  ClassTable s3 = ClassTable::build(from_cycles(3, {"(1,2)", "(1,2,3)"}));
  int trans = s3.class_of(Permutation::from_cycles("(1,2)", 3));
  // independently enumerated: products of an odd number of transpositions
  // are odd, pairs contribute 3, and the counts grow by a factor of 9
  std::vector<BigInt> expected = {0, 3, 0, 27, 0, 243};
  ClassConvolution conv(s3, trans);
  for (int k = 1; k <= 6; ++k) CHECK(conv.alpha(k) == expected[k - 1]);

  CHECK(alpha_direct(s3, 0, 1) == 1);
  CHECK(alpha_direct(s3, 0, 5) == 1);
  CHECK_THROWS_AS(alpha_direct(s3, trans, 0), std::invalid_argument);
}

TEST_CASE("alpha agrees with direct tuple enumeration on small classes") {
  ClassTable a4 = ClassTable::build(from_cycles(4, {"(1,2,3)", "(2,3,4)"}));
  for (int c = 0; c < a4.num_classes(); ++c)
    for (int k = 1; k <= 3; ++k)
      CHECK(alpha_direct(a4, c, k) == enumerate_alpha(a4, c, k));

  ClassTable s3 = ClassTable::build(from_cycles(3, {"(1,2)", "(1,2,3)"}));
  for (int c = 0; c < s3.num_classes(); ++c)
    for (int k = 1; k <= 3; ++k)
      CHECK(alpha_direct(s3, c, k) == enumerate_alpha(s3, c, k));
}

TEST_CASE("conservation and the tuple-count bound") {
  std::vector<PermGroup> groups = {from_cycles(3, {"(1,2)", "(1,2,3)"}),
                                   from_cycles(4, {"(1,2)", "(1,2,3,4)"}),
                                   from_cycles(4, {"(1,2,3)", "(2,3,4)"})};
  for (const auto& g : groups) {
    ClassTable t = ClassTable::build(g);
    for (int c = 0; c < t.num_classes(); ++c) {
      ClassConvolution conv(t, c);
      for (int k = 1; k <= 6; ++k) {
        BigInt alpha = conv.alpha(k);
        BigInt class_size(t.cls(c).size);
        BigInt tuples = boost::multiprecision::pow(class_size, k);
        // sum over classes of f_k(e) * |E| equals |C|^k
        BigInt total = 0;
        for (int e = 0; e < t.num_classes(); ++e)
          total += conv.f_values()[e] * BigInt(t.cls(e).size);
        CHECK(total == tuples);
        CHECK(alpha <= boost::multiprecision::pow(class_size, k - 1));
      }
    }
  }
}

TEST_CASE("generalized order basics") {
  ClassTable s3 = ClassTable::build(from_cycles(3, {"(1,2)", "(1,2,3)"}));
  CHECK(generalized_order(s3, 0).generalized_order == 1);
  for (int c = 1; c < s3.num_classes(); ++c)
    CHECK(generalized_order(s3, c).generalized_order == 2);  // all real

  ClassTable c3 = ClassTable::build(from_cycles(3, {"(1,2,3)"}));
  CHECK(generalized_order(c3, 1).generalized_order == 3);
  CHECK(generalized_exponent(c3) == 3);

  ClassTable a4 = ClassTable::build(from_cycles(4, {"(1,2,3)", "(2,3,4)"}));
  int three_cycle = a4.class_of(Permutation::from_cycles("(1,2,3)", 4));
  AlphaProfile p = generalized_order(a4, three_cycle);
  REQUIRE(p.generalized_order == 3);
  CHECK(p.alphas[0] == 0);
  CHECK(p.alphas[1] == 0);  // inverse class differs
  CHECK(p.alphas[2] >= 4);  // c*c*c with c^3 = 1
  CHECK(generalized_exponent(a4) == 3);

  // a cap below the answer reports "not found"
  AlphaProfile capped = generalized_order(a4, three_cycle, 2);
  CHECK_FALSE(capped.generalized_order.has_value());
  CHECK(capped.k_cap == 2);
}

TEST_CASE("generalized exponent of symmetric groups is 2") {
  CHECK(generalized_exponent(ClassTable::build(from_cycles(3, {"(1,2)", "(1,2,3)"}))) == 2);
  CHECK(generalized_exponent(ClassTable::build(from_cycles(4, {"(1,2)", "(1,2,3,4)"}))) == 2);
  CHECK(generalized_exponent(ClassTable::build(from_cycles(5, {"(1,2)", "(1,2,3,4,5)"}))) == 2);
}

TEST_CASE("real nontrivial classes are exactly the generalized order 2 ones") {
  std::vector<PermGroup> groups = {from_cycles(4, {"(1,2)", "(1,2,3,4)"}),
                                   from_cycles(4, {"(1,2,3)", "(2,3,4)"}),
                                   from_cycles(3, {"(1,2,3)"}),
                                   from_cycles(4, {"(1,2,3,4)", "(1,3)"})};
  for (const auto& g : groups) {
    ClassTable t = ClassTable::build(g);
    for (int c = 0; c < t.num_classes(); ++c) {
      int go = generalized_order(t, c).generalized_order.value();
      bool real_nontrivial = c != 0 && t.cls(c).real;
      CHECK((go == 2) == real_nontrivial);
      CHECK(go <= t.cls(c).element_order);
    }
  }
}

TEST_CASE("bounds report") {
  ClassTable a4 = ClassTable::build(from_cycles(4, {"(1,2,3)", "(2,3,4)"}));
  int three_cycle = a4.class_of(Permutation::from_cycles("(1,2,3)", 4));
  BoundsReport r = bounds_report(a4, three_cycle);
  CHECK(r.gen_order == 3);
  CHECK(r.power_class_count == 3);
  CHECK(r.two_mu_plus_two == 4);
  CHECK(r.all_respected());

  ClassTable s4 = ClassTable::build(from_cycles(4, {"(1,2)", "(1,2,3,4)"}));
  BoundsReport rs = bounds_report(s4, 0);
  CHECK(rs.gen_order == 1);
  CHECK(rs.power_class_count == 1);
  CHECK(rs.transitive);
  CHECK(rs.gexp == 2);
  CHECK(rs.stabilizer_bound == 8);  // 2^(4-1)
  CHECK(rs.all_respected());
}

TEST_CASE("alpha is symmetric under class inversion") {
  // reversing and inverting a tuple matches C^k products with (C^-1)^k ones
  for (const auto& g : {from_cycles(3, {"(1,2,3)"}),
                        from_cycles(4, {"(1,2,3)", "(2,3,4)"}),
                        from_cycles(4, {"(1,2)", "(1,2,3,4)"})}) {
    ClassTable t = ClassTable::build(g);
    for (int c = 0; c < t.num_classes(); ++c)
      for (int k = 1; k <= 5; ++k)
        CHECK(alpha_direct(t, c, k) == alpha_direct(t, t.inverse_class(c), k));
  }
}

TEST_CASE("subgroup monotonicity on shared domains") {
  // elements of the subgroup cannot get a larger generalized order inside
  // the bigger group
  struct Pair {
    std::vector<std::string> sub, big;
    std::size_t degree;
  };
  std::vector<Pair> pairs = {
      {{"(1,2,3)", "(2,3,4)"}, {"(1,2)", "(1,2,3,4)"}, 4},
      {{"(1,2,3)", "(1,2,3,4,5)"}, {"(1,2)", "(1,2,3,4,5)"}, 5}};
  for (const auto& pair : pairs) {
    ClassTable sub = ClassTable::build(from_cycles(pair.degree, pair.sub));
    ClassTable big = ClassTable::build(from_cycles(pair.degree, pair.big));
    for (int c = 0; c < sub.num_classes(); ++c) {
      const Permutation& x = sub.cls(c).representative;
      int in_sub = generalized_order(sub, c).generalized_order.value();
      int in_big = generalized_order(big, big.class_of(x)).generalized_order.value();
      CHECK(in_big <= in_sub);
    }
  }
}

TEST_CASE("an order 2 class forces even group order") {
  std::vector<PermGroup> groups = {from_cycles(3, {"(1,2)", "(1,2,3)"}),
                                   from_cycles(4, {"(1,2,3)", "(2,3,4)"}),
                                   from_cycles(3, {"(1,2,3)"})};
  for (const auto& g : groups) {
    ClassTable t = ClassTable::build(g);
    bool has_order_two = false;
    for (int c = 0; c < t.num_classes(); ++c)
      if (generalized_order(t, c).generalized_order == 2) has_order_two = true;
    if (has_order_two) CHECK(g.order() % 2 == 0);
  }
}
