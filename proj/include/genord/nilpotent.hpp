#pragma once

#include <vector>

#include "genord/classes.hpp"
#include "genord/group.hpp"

namespace genord {

/// Smallest normal subgroup of G containing the seeds; verified normal by
/// generator conjugation. Seeds outside G are rejected.
PermGroup normal_closure(const PermGroup& group, std::vector<Permutation> seeds);

/// gamma_1 = G, gamma_{i+1} = [gamma_i, G], computed until the chain
/// stabilizes. terms.back() is the stable term; the group is nilpotent
/// exactly when it is trivial.
struct LowerCentralSeries {
  std::vector<PermGroup> terms;
  bool nilpotent = false;
  int nilpotency_class = -1;  // terms.size() - 1 when nilpotent
};

LowerCentralSeries lower_central_series(const PermGroup& group, int max_terms = 64);

/// For every class representative x with k its generalized order, checks
/// x^(k^m) in gamma_m for m = 1 .. c+1, and that the final power is the
/// identity. Requires a nilpotent group.
struct GammaMembershipReport {
  struct Row {
    int class_index = 0;
    int gen_order = 0;
    int m = 0;
    bool member = false;
  };
  std::vector<Row> rows;
  bool all_pass = true;
  bool final_powers_identity = true;
};

GammaMembershipReport verify_gamma_membership(const ClassTable& table,
                                              const LowerCentralSeries& series);

/// Checks p | generalized order for every nontrivial class of a p-group.
struct PDivisibilityReport {
  long long p = 0;
  struct Row {
    int class_index = 0;
    int gen_order = 0;
    bool divisible = false;
  };
  std::vector<Row> rows;
  bool all_pass = true;
};

PDivisibilityReport check_p_divisibility(const ClassTable& table, long long p);

}  // namespace genord
