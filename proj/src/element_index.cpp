#include "genord/element_index.hpp"

#include <cstring>

namespace genord {

std::uint64_t ElementIndex::hash_key(const std::uint32_t* key) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < base_.size(); ++i) {
    h ^= key[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool ElementIndex::key_matches(std::size_t id, const std::uint32_t* key) const {
  const std::uint32_t* stored = base_flat_.data() + id * base_.size();
  for (std::size_t i = 0; i < base_.size(); ++i)
    if (stored[i] != key[i]) return false;
  return true;
}

void ElementIndex::insert(std::size_t id) {
  std::uint64_t h = hash_key(base_flat_.data() + id * base_.size()) & mask_;
  while (slots_[h] >= 0) h = (h + 1) & mask_;
  slots_[h] = static_cast<std::int32_t>(id);
}

ElementIndex ElementIndex::build(const PermGroup& group, std::uint64_t cap) {
  ElementIndex idx;
  auto elements = group.elements(cap);
  idx.degree_ = group.degree();
  idx.count_ = elements.size();
  idx.base_ = group.base();
  idx.flat_.resize(idx.count_ * idx.degree_);
  idx.base_flat_.resize(idx.count_ * idx.base_.size());
  std::size_t table_size = 4;
  while (table_size < idx.count_ * 2) table_size <<= 1;
  idx.slots_.assign(table_size, -1);
  idx.mask_ = table_size - 1;
  for (std::size_t id = 0; id < idx.count_; ++id) {
    const auto& img = elements[id].images();
    std::memcpy(idx.flat_.data() + id * idx.degree_, img.data(),
                idx.degree_ * sizeof(std::uint32_t));
    for (std::size_t i = 0; i < idx.base_.size(); ++i)
      idx.base_flat_[id * idx.base_.size() + i] = img[idx.base_[i]];
    idx.insert(id);
  }
  idx.identity_id_ = static_cast<std::size_t>(idx.find(Permutation(idx.degree_)));
  idx.inverse_.resize(idx.count_);
  std::vector<std::uint32_t> scratch(idx.degree_);
  for (std::size_t id = 0; id < idx.count_; ++id) {
    const std::uint32_t* img = idx.images_of(id);
    for (std::size_t i = 0; i < idx.degree_; ++i) scratch[img[i]] = static_cast<std::uint32_t>(i);
    idx.inverse_[id] = static_cast<std::uint32_t>(idx.find_member(scratch.data()));
  }
  return idx;
}

Permutation ElementIndex::element(std::size_t id) const {
  std::vector<std::uint32_t> img(images_of(id), images_of(id) + degree_);
  return Permutation::from_images(std::move(img));
}

std::int64_t ElementIndex::find(const std::uint32_t* images) const {
  std::uint32_t key[64];
  for (std::size_t i = 0; i < base_.size(); ++i) key[i] = images[base_[i]];
  std::uint64_t h = hash_key(key) & mask_;
  while (true) {
    std::int32_t id = slots_[h];
    if (id < 0) return -1;
    if (key_matches(id, key)) {
      // distinct members never share base images, so a full mismatch here
      // means the query is not a member at all
      if (std::memcmp(images_of(id), images, degree_ * sizeof(std::uint32_t)) == 0)
        return id;
      return -1;
    }
    h = (h + 1) & mask_;
  }
}

std::int64_t ElementIndex::find_member(const std::uint32_t* images) const {
  std::uint32_t key[64];
  for (std::size_t i = 0; i < base_.size(); ++i) key[i] = images[base_[i]];
  std::uint64_t h = hash_key(key) & mask_;
  while (true) {
    std::int32_t id = slots_[h];
    if (id < 0) return -1;
    if (key_matches(id, key)) return id;
    h = (h + 1) & mask_;
  }
}

std::int64_t ElementIndex::find_product(const std::uint32_t* a, const std::uint32_t* b) const {
  std::uint32_t key[64];
  for (std::size_t i = 0; i < base_.size(); ++i) key[i] = b[a[base_[i]]];
  std::uint64_t h = hash_key(key) & mask_;
  while (true) {
    std::int32_t id = slots_[h];
    if (id < 0) return -1;
    if (key_matches(id, key)) return id;
    h = (h + 1) & mask_;
  }
}

}  // namespace genord
