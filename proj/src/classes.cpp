#include "genord/classes.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace genord {

ClassTable ClassTable::build(const PermGroup& group, std::uint64_t enum_cap) {
  ClassTable t(group, ElementIndex::build(group, enum_cap));
  const ElementIndex& idx = t.index_;
  const std::size_t n = idx.size();
  const std::size_t degree = idx.degree();

  // Conjugation orbits via generator conjugation on element ids.
  t.class_of_.assign(n, -1);
  std::vector<std::vector<std::uint32_t>> raw_members;
  std::vector<std::size_t> min_member;
  std::vector<std::uint32_t> scratch(degree), ginv(degree);

  std::vector<std::vector<std::uint32_t>> gen_invs;
  for (const auto& g : group.generators()) gen_invs.push_back(g.inverse().images());

  for (std::size_t seed = 0; seed < n; ++seed) {
    if (t.class_of_[seed] >= 0) continue;
    int ci = static_cast<int>(raw_members.size());
    std::vector<std::uint32_t> members{static_cast<std::uint32_t>(seed)};
    t.class_of_[seed] = ci;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const std::uint32_t* x = idx.images_of(members[head]);
      for (std::size_t gi = 0; gi < group.generators().size(); ++gi) {
        const auto& g = group.generators()[gi].images();
        const auto& gi_inv = gen_invs[gi];
        // g^-1 * x * g, composed pointwise
        for (std::size_t p = 0; p < degree; ++p) scratch[p] = g[x[gi_inv[p]]];
        std::int64_t id = idx.find_member(scratch.data());
        if (t.class_of_[id] < 0) {
          t.class_of_[id] = ci;
          members.push_back(static_cast<std::uint32_t>(id));
        }
      }
    }
    std::sort(members.begin(), members.end());
    raw_members.push_back(std::move(members));
  }

  // Canonical order: (element order, size, lexicographically least member).
  struct Key {
    long long order;
    std::uint64_t size;
    Permutation least;
    int raw;
  };
  std::vector<Key> keys;
  for (std::size_t ci = 0; ci < raw_members.size(); ++ci) {
    Permutation least = idx.element(raw_members[ci][0]);
    for (std::uint32_t id : raw_members[ci]) {
      Permutation cand = idx.element(id);
      if (cand < least) least = std::move(cand);
    }
    keys.push_back({least.order(), raw_members[ci].size(), std::move(least),
                    static_cast<int>(ci)});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.size != b.size) return a.size < b.size;
    return a.least < b.least;
  });

  std::vector<int> new_of_raw(raw_members.size());
  for (std::size_t i = 0; i < keys.size(); ++i) new_of_raw[keys[i].raw] = static_cast<int>(i);
  for (std::size_t id = 0; id < n; ++id) t.class_of_[id] = new_of_raw[t.class_of_[id]];

  t.members_.resize(keys.size());
  t.classes_.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    t.members_[i] = std::move(raw_members[keys[i].raw]);
    ConjugacyClass& c = t.classes_[i];
    c.index = static_cast<int>(i);
    c.representative = keys[i].least;
    c.size = keys[i].size;
    c.element_order = keys[i].order;
  }

  // Inverse and power maps off the representatives.
  t.power_map_.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    ConjugacyClass& c = t.classes_[i];
    c.inverse_class = t.class_of_[idx.inverse_id(
        static_cast<std::size_t>(idx.find(c.representative)))];
    c.real = c.inverse_class == static_cast<int>(i);
    Permutation power(degree);
    for (long long j = 0; j < c.element_order; ++j) {
      t.power_map_[i].push_back(t.class_of_[idx.find(power)]);
      power = compose(power, c.representative);
    }
  }
  return t;
}

int ClassTable::class_of(const Permutation& p) const {
  if (p.degree() != group_.degree())
    throw std::invalid_argument("element degree does not match the group");
  std::int64_t id = index_.find(p);
  if (id < 0) throw std::invalid_argument("element is not a member of the group");
  return class_of_[id];
}

int ClassTable::power_class(int i, long long j) const {
  const auto& map = power_map_.at(i);
  long long e = j % static_cast<long long>(map.size());
  if (e < 0) e += static_cast<long long>(map.size());
  return map[e];
}

std::vector<int> ClassTable::power_classes(int i) const {
  std::vector<int> out = power_map_.at(i);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RealCensus ClassTable::real_census() const {
  RealCensus census;
  int non_real = 0;
  for (const auto& c : classes_) {
    if (c.index == 0) continue;
    if (c.real)
      ++census.lambda;
    else
      ++non_real;
  }
  census.mu = non_real / 2;
  return census;
}

}  // namespace genord
