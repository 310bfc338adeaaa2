#pragma once

#include <cstdint>
#include <vector>

#include "genord/group.hpp"
#include "genord/perm.hpp"

namespace genord {

/// Flat storage of every element of a group with an open-addressing hash for
/// element -> id lookup. Members are keyed by their images on the group's
/// base points (which determine a member uniquely), so the product lookups
/// in convolution inner loops touch only a handful of points.
class ElementIndex {
 public:
  static ElementIndex build(const PermGroup& group, std::uint64_t cap = kDefaultEnumCap);

  std::size_t size() const { return count_; }
  std::size_t degree() const { return degree_; }

  const std::uint32_t* images_of(std::size_t id) const { return flat_.data() + id * degree_; }
  Permutation element(std::size_t id) const;
  std::size_t identity_id() const { return identity_id_; }

  /// id of the permutation with the given image array, or -1 if it is not an
  /// element of the group.
  std::int64_t find(const std::uint32_t* images) const;
  std::int64_t find(const Permutation& p) const { return find(p.images().data()); }

  /// id of an image array known to describe a group member.
  std::int64_t find_member(const std::uint32_t* images) const;

  /// id of the product a*b (apply a, then b) of two group members; only the
  /// base-point images of the product are ever materialized.
  std::int64_t find_product(const std::uint32_t* a, const std::uint32_t* b) const;

  /// id of the inverse of element id.
  std::size_t inverse_id(std::size_t id) const { return inverse_[id]; }

 private:
  std::uint64_t hash_key(const std::uint32_t* key) const;
  bool key_matches(std::size_t id, const std::uint32_t* key) const;
  void insert(std::size_t id);

  std::size_t degree_ = 0;
  std::size_t count_ = 0;
  std::size_t identity_id_ = 0;
  std::vector<std::uint32_t> base_;       // base points of the group index
  std::vector<std::uint32_t> flat_;       // count x degree full images
  std::vector<std::uint32_t> base_flat_;  // count x base size key images
  std::vector<std::int32_t> slots_;
  std::uint64_t mask_ = 0;
  std::vector<std::uint32_t> inverse_;
};

}  // namespace genord
