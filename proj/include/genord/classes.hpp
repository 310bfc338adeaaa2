#pragma once

#include <cstdint>
#include <vector>

#include "genord/element_index.hpp"
#include "genord/group.hpp"
#include "genord/perm.hpp"

namespace genord {

struct ConjugacyClass {
  int index = 0;
  Permutation representative;  // lexicographically least member
  std::uint64_t size = 0;
  long long element_order = 0;
  bool real = false;
  int inverse_class = 0;
};

/// lambda = real classes other than the identity class, 2*mu = non-real
/// classes; 1 + lambda + 2*mu equals the class number m.
struct RealCensus {
  int lambda = 0;
  int mu = 0;
};

/// The conjugacy-class partition with canonical indexing: classes are sorted
/// by (element order, size, lexicographically least member). Class 0 is the
/// identity class. Immutable after construction.
class ClassTable {
 public:
  static ClassTable build(const PermGroup& group, std::uint64_t enum_cap = kDefaultEnumCap);

  const PermGroup& group() const { return group_; }
  const ElementIndex& index() const { return index_; }

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const ConjugacyClass& cls(int i) const { return classes_.at(i); }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }

  int class_of_id(std::size_t element_id) const { return class_of_[element_id]; }
  int class_of(const Permutation& p) const;
  const std::vector<std::uint32_t>& class_members(int i) const { return members_.at(i); }

  int inverse_class(int i) const { return classes_.at(i).inverse_class; }
  /// class of representative^j
  int power_class(int i, long long j) const;
  /// distinct classes containing powers of the representative; always
  /// contains 0, and i itself for i != 0.
  std::vector<int> power_classes(int i) const;

  RealCensus real_census() const;

 private:
  ClassTable(PermGroup group, ElementIndex index)
      : group_(std::move(group)), index_(std::move(index)) {}

  PermGroup group_;
  ElementIndex index_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::int32_t> class_of_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<std::vector<int>> power_map_;  // [i][j], j < element_order
};

}  // namespace genord
