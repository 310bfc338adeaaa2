#include "genord/identities.hpp"

namespace genord {

IdentityReport check_commutator_identities(const PermGroup& group, int samples,
                                           std::uint64_t seed) {
  IdentityReport report;
  report.seed = seed;
  report.samples = samples;
  report.items = {{"xy = yx[x,y]", 0, 0, ""},
                  {"x^y = x[x,y]", 0, 0, ""},
                  {"[xy,z] = [x,z][x,z,y][y,z]", 0, 0, ""},
                  {"[x^k,y] = [x,y]^(x^(k-1))...[x,y]^x[x,y]", 0, 0, ""}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_k(1, 10);

  auto record = [&](int item, bool ok, const std::string& detail) {
    ++report.items[item].tested;
    if (!ok) {
      ++report.items[item].failures;
      if (report.items[item].first_counterexample.empty())
        report.items[item].first_counterexample = detail;
      report.all_pass = false;
    }
  };

  for (int s = 0; s < samples; ++s) {
    Permutation x = group.random_element(rng);
    Permutation y = group.random_element(rng);
    Permutation z = group.random_element(rng);
    int k = pick_k(rng);

    Permutation cxy = commutator(x, y);
    record(0, compose(x, y) == compose(compose(y, x), cxy),
           "x=" + x.cycle_string() + " y=" + y.cycle_string());
    record(1, conjugate(x, y) == compose(x, cxy),
           "x=" + x.cycle_string() + " y=" + y.cycle_string());

    Permutation lhs3 = commutator(compose(x, y), z);
    Permutation rhs3 = compose(compose(commutator(x, z), commutator(commutator(x, z), y)),
                               commutator(y, z));
    record(2, lhs3 == rhs3, "x=" + x.cycle_string() + " y=" + y.cycle_string() +
                                " z=" + z.cycle_string());

    Permutation lhs4 = commutator(perm_pow(x, k), y);
    Permutation rhs4(group.degree());
    for (int e = k - 1; e >= 0; --e)
      rhs4 = compose(rhs4, conjugate(cxy, perm_pow(x, e)));
    record(3, lhs4 == rhs4, "x=" + x.cycle_string() + " y=" + y.cycle_string() +
                                " k=" + std::to_string(k));
  }
  return report;
}

}  // namespace genord
