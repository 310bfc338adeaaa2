#pragma once

#include <cstdint>
#include <vector>

#include "genord/bigint.hpp"
#include "genord/group.hpp"
#include "genord/perm.hpp"

namespace genord {

inline constexpr std::uint64_t kDefaultOracleCap = 50'000;

/// Brute-force ground truth for alpha_{C,k}: element-level convolution
/// f_{j+1}(z) = sum over c in C of f_j(z * c^-1) over all z in G. Shares no
/// code path with the class-level method.
BigInt brute_alpha(const PermGroup& group, const std::vector<Permutation>& class_elements,
                   int k, std::uint64_t cap = kDefaultOracleCap);

/// Conjugacy class of x computed by direct conjugation closure (independent
/// of the class-table machinery).
std::vector<Permutation> brute_class_of(const PermGroup& group, const Permutation& x);

/// Checks that f_k (the k-tuple product counts seeded from class_elements)
/// is constant on conjugacy classes; a class-function failure signals an
/// implementation bug.
bool brute_class_function_constant(const PermGroup& group,
                                   const std::vector<Permutation>& class_elements, int k,
                                   std::uint64_t cap = kDefaultOracleCap);

/// Least k with the identity in C^k, where C is the class of x, found by
/// growing the product sets S_{k+1} = S_k * C.
int brute_generalized_order(const PermGroup& group, const Permutation& x,
                            std::uint64_t cap = kDefaultOracleCap);

}  // namespace genord
