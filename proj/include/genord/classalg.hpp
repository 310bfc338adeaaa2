#pragma once

#include <optional>
#include <vector>

#include "genord/bigint.hpp"
#include "genord/classes.hpp"

namespace genord {

/// The alpha sequence of one class: alphas[k-1] = alpha_{C,k}, the number of
/// ordered k-tuples from C whose product is the identity, and the least k
/// where it is positive.
struct AlphaProfile {
  int class_index = 0;
  int k_cap = 0;
  std::vector<BigInt> alphas;
  std::optional<int> generalized_order;
};

/// Distribution over classes of r_e * x^-1 for x ranging over class c; the
/// entries sum to |C_c|.
std::vector<BigInt> step_distribution(const ClassTable& table, int e, int c);

/// Class-level convolution engine for a fixed class c. One step costs
/// m * |C| group operations to set up; each further k costs m^2 integer
/// multiplies. All counts are exact unbounded integers.
class ClassConvolution {
 public:
  ClassConvolution(const ClassTable& table, int c);

  /// alpha_{C,k}; advances the internal class function as needed (k >= 1).
  const BigInt& alpha(int k);
  /// f_k evaluated at all class representatives (after alpha(k)).
  const std::vector<BigInt>& f_values() const { return f_; }
  int current_k() const { return k_; }

 private:
  const ClassTable& table_;
  int c_;
  std::vector<std::vector<std::uint64_t>> matrix_;  // [e][d] step counts
  std::vector<BigInt> f_;
  int k_ = 1;
};

BigInt alpha_direct(const ClassTable& table, int c, int k);

/// Least k with alpha_{C,k} > 0, searched up to k_cap (default 2*mu + 2,
/// which is guaranteed to suffice for finite groups).
AlphaProfile generalized_order(const ClassTable& table, int c, int k_cap = 0);

int generalized_exponent(const ClassTable& table);

/// Per-class bound report: generalized order against the power-class count,
/// the 2*mu + 2 bound, and the element order; plus the group-level core-free
/// stabilizer bound 2^(degree-1) for faithful transitive actions.
struct BoundsReport {
  int class_index = 0;
  int gen_order = 0;
  long long element_order = 0;
  int power_class_count = 0;
  int two_mu_plus_two = 0;
  bool within_element_order = false;
  bool within_power_bound = false;
  bool within_mu_bound = false;
  bool transitive = false;
  int gexp = 0;
  BigInt stabilizer_bound;  // 2^(degree-1), meaningful when transitive
  bool within_corefree_bound = true;
  bool all_respected() const {
    return within_element_order && within_power_bound && within_mu_bound &&
           (!transitive || within_corefree_bound);
  }
};

BoundsReport bounds_report(const ClassTable& table, int c);

}  // namespace genord
