#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "genord/bigint.hpp"
#include "genord/classalg.hpp"
#include "genord/classes.hpp"
#include "genord/cyclotomic.hpp"

namespace genord {

class CharTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TableClass {
  std::string name;
  std::uint64_t size = 0;
  long long element_order = 0;
};

/// Character table: class metadata plus the m x m matrix of irreducible
/// character values (rows are characters, row 0 the trivial character,
/// column 0 the identity class). Values are exact cyclotomics.
class CharacterTable {
 public:
  static CharacterTable load_file(const std::string& path);
  static CharacterTable from_json(const nlohmann::json& data);

  const std::string& name() const { return name_; }
  const std::string& source() const { return source_; }
  const BigInt& order() const { return order_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<TableClass>& classes() const { return classes_; }
  const Cyclotomic& value(int character, int cls) const {
    return irreducibles_.at(character).at(cls);
  }

  struct Validation {
    bool ok = true;
    std::vector<std::string> failures;
  };
  /// Exact checks: size sum, degree-square sum, row and column
  /// orthogonality, and the stored inverse map when present.
  Validation validate() const;

  bool class_real(int i) const;
  RealCensus real_census() const;
  /// Stored inverse map, or the one derived by matching conjugated columns.
  std::vector<int> inverse_map() const;

  /// alpha_{C,k} by the character formula (|C|^k/|G|) sum chi(g)^k/chi(1)^(k-2),
  /// evaluated in exact cyclotomic arithmetic; throws CharTableError if the
  /// result is not a nonnegative rational integer.
  BigInt alpha(int cls, int k) const;

  AlphaProfile generalized_order(int cls, int k_cap = 0) const;
  int generalized_exponent() const;

 private:
  void ensure_validated() const;  // alpha never runs on an unvalidated table

  std::string name_;
  std::string source_;
  BigInt order_;
  std::vector<TableClass> classes_;
  std::optional<std::vector<int>> stored_inverse_map_;
  std::vector<std::vector<Cyclotomic>> irreducibles_;
  mutable std::optional<bool> validated_;
};

/// Cross-method agreement between the group-side and table-side alpha values.
/// Classes are matched by the invariant fingerprint (element order, size,
/// real flag); within a fingerprint bucket the multisets of alpha profiles
/// must agree, which covers every consistent matching at once.
struct CrossCheck {
  struct Bucket {
    long long element_order = 0;
    std::uint64_t size = 0;
    bool real = false;
    std::vector<int> group_classes;
    std::vector<int> table_classes;
    bool match = false;
  };
  bool ok = true;
  int k_max = 0;
  std::vector<Bucket> buckets;
  std::vector<std::string> failures;
};

CrossCheck cross_check_alpha(const ClassTable& group_table, const CharacterTable& char_table,
                             int k_max);

}  // namespace genord
