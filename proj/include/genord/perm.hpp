#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace genord {

/// A permutation of {0, ..., degree-1}, stored as its image list.
/// External formats use 1-based points; the conversion happens at the
/// boundary (from_images_1based, cycle_string).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity

  /// 0-based image list; throws std::invalid_argument if not a bijection.
  static Permutation from_images(std::vector<std::uint32_t> images);
  /// 1-based image list as found in fixture files.
  static Permutation from_images_1based(const std::vector<long long>& images);
  /// Cycle notation, e.g. "(1,2,3)(4,5)" or "(1 2 3)". "()" is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator[](std::uint32_t point) const { return img_[point]; }
  const std::vector<std::uint32_t>& images() const { return img_; }
  std::vector<long long> images_1based() const;

  bool is_identity() const;
  Permutation inverse() const;
  long long order() const;  // lcm of cycle lengths
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> img_;
};

/// compose(p, q) applies p first, then q; paired with the right action this
/// makes x^g = compose(compose(inverse(g), x), g).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation conjugate(const Permutation& x, const Permutation& g);
Permutation commutator(const Permutation& x, const Permutation& y);
Permutation perm_pow(const Permutation& p, long long e);

}  // namespace genord
