#include "genord/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "genord/element_index.hpp"

namespace genord {

namespace {

// Counters stay below |C|^(k-1); run the convolution in machine words when
// that bound fits, in unbounded integers otherwise.
template <typename Counter>
BigInt convolve_alpha(const ElementIndex& idx, const std::vector<std::size_t>& class_ids,
                      int k) {
  const std::size_t n = idx.size();
  std::vector<const std::uint32_t*> inv_images;
  inv_images.reserve(class_ids.size());
  for (std::size_t id : class_ids) inv_images.push_back(idx.images_of(idx.inverse_id(id)));

  std::vector<Counter> f(n, Counter(0));
  for (std::size_t id : class_ids) f[id] += 1;
  std::vector<Counter> next(n);
  for (int step = 1; step < k; ++step) {
    for (std::size_t z = 0; z < n; ++z) {
      Counter acc(0);
      const std::uint32_t* z_img = idx.images_of(z);
      for (const std::uint32_t* cinv : inv_images)
        acc += f[idx.find_product(z_img, cinv)];
      next[z] = acc;
    }
    std::swap(f, next);
  }
  return BigInt(f[idx.identity_id()]);
}

// f_k over every element id, in unbounded integers
std::vector<BigInt> convolve_table(const ElementIndex& idx,
                                   const std::vector<std::size_t>& class_ids, int k) {
  const std::size_t n = idx.size();
  std::vector<const std::uint32_t*> inv_images;
  for (std::size_t id : class_ids) inv_images.push_back(idx.images_of(idx.inverse_id(id)));
  std::vector<BigInt> f(n, BigInt(0));
  for (std::size_t id : class_ids) f[id] += 1;
  std::vector<BigInt> next(n);
  for (int step = 1; step < k; ++step) {
    for (std::size_t z = 0; z < n; ++z) {
      BigInt acc(0);
      const std::uint32_t* z_img = idx.images_of(z);
      for (const std::uint32_t* cinv : inv_images) acc += f[idx.find_product(z_img, cinv)];
      next[z] = std::move(acc);
    }
    std::swap(f, next);
  }
  return f;
}

}  // namespace

bool brute_class_function_constant(const PermGroup& group,
                                   const std::vector<Permutation>& class_elements, int k,
                                   std::uint64_t cap) {
  if (group.order() > cap) throw EnumerationCapError(group.order(), cap);
  ElementIndex idx = ElementIndex::build(group, cap);
  std::vector<std::size_t> ids;
  for (const auto& c : class_elements) {
    std::int64_t id = idx.find(c);
    if (id < 0) throw std::invalid_argument("class element outside the group");
    ids.push_back(static_cast<std::size_t>(id));
  }
  std::vector<BigInt> f = convolve_table(idx, ids, k);
  // constant on classes: conjugating by any generator never changes f
  for (std::size_t z = 0; z < idx.size(); ++z) {
    for (const auto& g : group.generators()) {
      Permutation conj = conjugate(idx.element(z), g);
      if (f[static_cast<std::size_t>(idx.find_member(conj.images().data()))] != f[z])
        return false;
    }
  }
  return true;
}

BigInt brute_alpha(const PermGroup& group, const std::vector<Permutation>& class_elements,
                   int k, std::uint64_t cap) {
  if (k < 1) throw std::invalid_argument("alpha_{C,k} requires k >= 1");
  if (group.order() > cap) throw EnumerationCapError(group.order(), cap);
  if (class_elements.empty()) throw std::invalid_argument("class is empty");
  ElementIndex idx = ElementIndex::build(group, cap);
  std::vector<std::size_t> ids;
  ids.reserve(class_elements.size());
  for (const auto& c : class_elements) {
    std::int64_t id = idx.find(c);
    if (id < 0) throw std::invalid_argument("class element outside the group");
    ids.push_back(static_cast<std::size_t>(id));
  }
  // |C|^(k-1) bounds every value of f.
  BigInt bound = boost::multiprecision::pow(BigInt(ids.size()), k - 1);
  if (bound < (BigInt(1) << 62)) return convolve_alpha<std::uint64_t>(idx, ids, k);
  return convolve_alpha<BigInt>(idx, ids, k);
}

std::vector<Permutation> brute_class_of(const PermGroup& group, const Permutation& x) {
  if (!group.contains(x)) throw std::invalid_argument("element outside the group");
  std::vector<Permutation> members{x};
  std::vector<Permutation> sorted{x};
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const auto& g : group.generators()) {
      Permutation conj = conjugate(members[head], g);
      auto it = std::lower_bound(sorted.begin(), sorted.end(), conj);
      if (it == sorted.end() || !(*it == conj)) {
        sorted.insert(it, conj);
        members.push_back(std::move(conj));
      }
    }
  }
  return members;
}

int brute_generalized_order(const PermGroup& group, const Permutation& x, std::uint64_t cap) {
  if (group.order() > cap) throw EnumerationCapError(group.order(), cap);
  ElementIndex idx = ElementIndex::build(group, cap);
  std::vector<Permutation> class_elements = brute_class_of(group, x);
  std::vector<std::size_t> class_ids;
  for (const auto& c : class_elements)
    class_ids.push_back(static_cast<std::size_t>(idx.find(c)));

  const std::size_t n = idx.size();
  std::vector<char> current(n, 0), next(n, 0);
  for (std::size_t id : class_ids) current[id] = 1;
  // o_bullet(x) <= o(x), so the walk terminates by then.
  long long limit = x.order();
  for (int k = 1; k <= limit; ++k) {
    if (current[idx.identity_id()]) return k;
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t z = 0; z < n; ++z) {
      if (!current[z]) continue;
      const std::uint32_t* z_img = idx.images_of(z);
      for (std::size_t id : class_ids)
        next[idx.find_product(z_img, idx.images_of(id))] = 1;
    }
    std::swap(current, next);
  }
  throw std::logic_error("generalized order exceeded the element order");
}

}  // namespace genord
