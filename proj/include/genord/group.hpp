#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "genord/bigint.hpp"
#include "genord/perm.hpp"

namespace genord {

inline constexpr std::uint64_t kDefaultEnumCap = 1'000'000;

class EnumerationCapError : public std::runtime_error {
 public:
  EnumerationCapError(const BigInt& order, std::uint64_t cap)
      : std::runtime_error("group of order " + order.str() +
                           " is too large for enumeration (cap " +
                           std::to_string(cap) + ")") {}
};

/// Permutation group with a deterministic base-and-strong-generating-set
/// index answering order and membership. Immutable after construction.
class PermGroup {
 public:
  explicit PermGroup(std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return input_gens_; }
  const BigInt& order() const { return order_; }
  const std::vector<std::uint32_t>& base() const { return base_; }

  bool contains(const Permutation& p) const;

  /// All elements, each exactly once; throws EnumerationCapError if the
  /// order exceeds the cap.
  std::vector<Permutation> elements(std::uint64_t cap = kDefaultEnumCap) const;

  /// Uniformly random element (independent transversal choices per level).
  Permutation random_element(std::mt19937_64& rng) const;

  bool is_transitive() const;

 private:
  struct Level {
    std::uint32_t beta = 0;
    std::vector<Permutation> gens;
    std::vector<std::int32_t> where;  // point -> orbit position, -1 outside
    std::vector<std::uint32_t> orbit;
    std::vector<Permutation> transversal;  // [k] maps beta to orbit[k]
  };

  void rebuild_orbit(Level& level) const;
  // Sifts p through levels [from, end); returns the residue and the level at
  // which sifting stopped (levels_.size() if it survived the entire chain).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const;
  void schreier_sims();

  std::size_t degree_ = 0;
  std::vector<Permutation> input_gens_;
  std::vector<Level> levels_;
  std::vector<std::uint32_t> base_;
  BigInt order_ = 1;
};

/// n x n group multiplication table over element codes 0..n-1 with a
/// two-sided identity; rows and columns must be permutations of 0..n-1,
/// associativity is checked exhaustively for n <= 64 and on seeded samples
/// above that.
class MultiplicationTable {
 public:
  static MultiplicationTable from_rows(std::vector<std::vector<int>> rows);

  int size() const { return n_; }
  int at(int a, int b) const { return rows_[a][b]; }
  int identity_element() const { return identity_; }

 private:
  int n_ = 0;
  int identity_ = 0;
  std::vector<std::vector<int>> rows_;
};

/// Regular embedding: element g -> the permutation x -> x*g of the element
/// codes. The resulting group has degree n and order n.
PermGroup cayley_embedding(const MultiplicationTable& table);

}  // namespace genord
