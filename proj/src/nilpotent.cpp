#include "genord/nilpotent.hpp"

#include <stdexcept>

#include "genord/classalg.hpp"

namespace genord {

PermGroup normal_closure(const PermGroup& group, std::vector<Permutation> seeds) {
  for (const auto& s : seeds)
    if (!group.contains(s))
      throw std::invalid_argument("normal closure seed is not a member of the group");
  std::vector<Permutation> gens;
  for (auto& s : seeds)
    if (!s.is_identity()) gens.push_back(std::move(s));
  if (gens.empty()) return PermGroup({Permutation(group.degree())});

  while (true) {
    PermGroup closure(gens);
    bool grew = false;
    for (std::size_t i = 0; i < gens.size() && !grew; ++i) {
      for (const auto& g : group.generators()) {
        Permutation conj = conjugate(gens[i], g);
        if (!closure.contains(conj)) {
          gens.push_back(std::move(conj));
          grew = true;
          break;
        }
      }
    }
    if (!grew) return closure;
  }
}

LowerCentralSeries lower_central_series(const PermGroup& group, int max_terms) {
  LowerCentralSeries series;
  series.terms.push_back(group);
  while (static_cast<int>(series.terms.size()) < max_terms) {
    const PermGroup& current = series.terms.back();
    std::vector<Permutation> seeds;
    for (const auto& a : current.generators())
      for (const auto& b : group.generators()) seeds.push_back(commutator(a, b));
    PermGroup next = normal_closure(group, std::move(seeds));
    if (next.order() == current.order()) break;  // stabilized
    series.terms.push_back(std::move(next));
    if (series.terms.back().order() == 1) break;
  }
  series.nilpotent = series.terms.back().order() == 1;
  if (series.nilpotent)
    series.nilpotency_class = static_cast<int>(series.terms.size()) - 1;
  return series;
}

GammaMembershipReport verify_gamma_membership(const ClassTable& table,
                                              const LowerCentralSeries& series) {
  if (!series.nilpotent)
    throw std::invalid_argument("gamma membership check requires a nilpotent group");
  GammaMembershipReport report;
  const int c = series.nilpotency_class;
  for (int ci = 0; ci < table.num_classes(); ++ci) {
    AlphaProfile profile = generalized_order(table, ci);
    int k = profile.generalized_order.value();
    const Permutation& x = table.cls(ci).representative;
    long long x_order = table.cls(ci).element_order;
    long long exponent = 1;
    for (int m = 1; m <= c + 1; ++m) {
      exponent = (exponent * k) % x_order;  // k^m mod o(x)
      Permutation power = perm_pow(x, exponent);
      // gamma_m for m beyond the chain is the trivial final term
      const PermGroup& gamma_m =
          series.terms[std::min<std::size_t>(m - 1, series.terms.size() - 1)];
      bool member = m - 1 < static_cast<int>(series.terms.size())
                        ? gamma_m.contains(power)
                        : power.is_identity();
      report.rows.push_back({ci, k, m, member});
      if (!member) report.all_pass = false;
      if (m == c + 1 && !power.is_identity()) {
        report.final_powers_identity = false;
        report.all_pass = false;
      }
    }
  }
  return report;
}

PDivisibilityReport check_p_divisibility(const ClassTable& table, long long p) {
  BigInt order = table.group().order();
  while (order > 1 && order % p == 0) order /= p;
  if (order != 1)
    throw std::invalid_argument("group order is not a power of " + std::to_string(p));
  PDivisibilityReport report;
  report.p = p;
  for (int ci = 1; ci < table.num_classes(); ++ci) {
    AlphaProfile profile = generalized_order(table, ci);
    int k = profile.generalized_order.value();
    bool divisible = k % p == 0;
    report.rows.push_back({ci, k, divisible});
    if (!divisible) report.all_pass = false;
  }
  return report;
}

}  // namespace genord
