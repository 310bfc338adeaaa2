#include "genord/classalg.hpp"

#include <stdexcept>

namespace genord {

namespace {

std::vector<std::uint64_t> step_counts(const ClassTable& table, int e, int c) {
  const ElementIndex& idx = table.index();
  std::vector<std::uint64_t> counts(table.num_classes(), 0);
  const std::uint32_t* rep = idx.images_of(
      static_cast<std::size_t>(idx.find(table.cls(e).representative)));
  for (std::uint32_t x_id : table.class_members(c)) {
    const std::uint32_t* xinv = idx.images_of(idx.inverse_id(x_id));
    std::int64_t prod = idx.find_product(rep, xinv);
    ++counts[table.class_of_id(static_cast<std::size_t>(prod))];
  }
  return counts;
}

}  // namespace

std::vector<BigInt> step_distribution(const ClassTable& table, int e, int c) {
  if (e < 0 || e >= table.num_classes() || c < 0 || c >= table.num_classes())
    throw std::out_of_range("class index out of range");
  auto counts = step_counts(table, e, c);
  return std::vector<BigInt>(counts.begin(), counts.end());
}

ClassConvolution::ClassConvolution(const ClassTable& table, int c) : table_(table), c_(c) {
  if (c < 0 || c >= table.num_classes())
    throw std::out_of_range("class index out of range");
  const int m = table.num_classes();
  matrix_.reserve(m);
  for (int e = 0; e < m; ++e) matrix_.push_back(step_counts(table, e, c));
  f_.assign(m, BigInt(0));
  f_[c] = 1;  // f_1 = indicator of class c at representatives
  k_ = 1;
}

const BigInt& ClassConvolution::alpha(int k) {
  if (k < 1) throw std::invalid_argument("alpha requires k >= 1");
  const int m = table_.num_classes();
  while (k_ < k) {
    std::vector<BigInt> next(m, BigInt(0));
    for (int e = 0; e < m; ++e) {
      BigInt acc = 0;
      for (int d = 0; d < m; ++d)
        if (matrix_[e][d] != 0 && !f_[d].is_zero()) acc += BigInt(matrix_[e][d]) * f_[d];
      next[e] = std::move(acc);
    }
    f_ = std::move(next);
    ++k_;
  }
  if (k != k_)
    throw std::logic_error("alpha queried for an earlier k than the current state");
  return f_[0];
}

BigInt alpha_direct(const ClassTable& table, int c, int k) {
  if (k < 1) throw std::invalid_argument("alpha_{C,k} requires k >= 1");
  ClassConvolution conv(table, c);
  return conv.alpha(k);
}

AlphaProfile generalized_order(const ClassTable& table, int c, int k_cap) {
  RealCensus census = table.real_census();
  if (k_cap <= 0) k_cap = 2 * census.mu + 2;
  AlphaProfile profile;
  profile.class_index = c;
  profile.k_cap = k_cap;
  ClassConvolution conv(table, c);
  for (int k = 1; k <= k_cap; ++k) {
    profile.alphas.push_back(conv.alpha(k));
    if (!profile.generalized_order && profile.alphas.back() > 0)
      profile.generalized_order = k;
  }
  return profile;
}

int generalized_exponent(const ClassTable& table) {
  int result = 1;
  for (int c = 0; c < table.num_classes(); ++c) {
    AlphaProfile p = generalized_order(table, c);
    if (!p.generalized_order)
      throw std::logic_error("generalized order not found within 2*mu + 2");
    result = std::max(result, *p.generalized_order);
  }
  return result;
}

BoundsReport bounds_report(const ClassTable& table, int c) {
  BoundsReport report;
  report.class_index = c;
  AlphaProfile profile = generalized_order(table, c);
  if (!profile.generalized_order)
    throw std::logic_error("generalized order not found within 2*mu + 2");
  report.gen_order = *profile.generalized_order;
  report.element_order = table.cls(c).element_order;
  report.power_class_count = static_cast<int>(table.power_classes(c).size());
  report.two_mu_plus_two = 2 * table.real_census().mu + 2;
  report.within_element_order = report.gen_order <= report.element_order;
  report.within_power_bound = report.gen_order <= report.power_class_count;
  report.within_mu_bound = report.gen_order <= report.two_mu_plus_two;
  report.transitive = table.group().is_transitive();
  report.gexp = generalized_exponent(table);
  report.stabilizer_bound = BigInt(1) << (table.group().degree() - 1);
  report.within_corefree_bound = BigInt(report.gexp) <= report.stabilizer_bound;
  return report;
}

}  // namespace genord
