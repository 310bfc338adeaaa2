#include "genord/group.hpp"

#include <algorithm>

namespace genord {

namespace {

std::uint32_t smallest_moved_point(const Permutation& p) {
  for (std::uint32_t i = 0; i < p.degree(); ++i)
    if (p[i] != i) return i;
  throw std::logic_error("identity has no moved point");
}

}  // namespace

PermGroup::PermGroup(std::vector<Permutation> generators) {
  if (generators.empty())
    throw std::invalid_argument("a permutation group needs at least one generator");
  degree_ = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != degree_)
      throw std::invalid_argument("generators have mismatched degrees");
  input_gens_ = std::move(generators);
  schreier_sims();
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.where.assign(degree_, -1);
  level.orbit.clear();
  level.transversal.clear();
  level.orbit.push_back(level.beta);
  level.where[level.beta] = 0;
  level.transversal.emplace_back(degree_);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    std::uint32_t p = level.orbit[k];
    for (const auto& g : level.gens) {
      std::uint32_t q = g[p];
      if (level.where[q] < 0) {
        level.where[q] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(q);
        level.transversal.push_back(compose(level.transversal[k], g));
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    std::uint32_t image = p[levels_[l].beta];
    std::int32_t k = levels_[l].where[image];
    if (k < 0) return {std::move(p), l};
    p = compose(p, levels_[l].transversal[k].inverse());
  }
  return {std::move(p), levels_.size()};
}

void PermGroup::schreier_sims() {
  // Seed the chain: each generator joins every level it stabilizes down to
  // the first level whose base point it moves, creating levels as needed.
  auto add_to_chain = [&](const Permutation& g) {
    std::size_t l = 0;
    while (true) {
      if (l == levels_.size()) {
        Level lev;
        lev.beta = smallest_moved_point(g);
        levels_.push_back(std::move(lev));
      }
      levels_[l].gens.push_back(g);
      if (g[levels_[l].beta] != levels_[l].beta) break;
      ++l;
    }
  };
  for (const auto& g : input_gens_)
    if (!g.is_identity()) add_to_chain(g);

  for (auto& lev : levels_) rebuild_orbit(lev);

  // Verify each level against its Schreier generators, fixing the chain from
  // the deepest level upward.
  std::size_t i = levels_.size();
  while (i > 0) {
    // This level's own data is stable while it is being verified; pushing a
    // new level may reallocate levels_, so re-fetch references per iteration.
    const std::size_t orbit_count = levels_[i - 1].orbit.size();
    const std::size_t gen_count = levels_[i - 1].gens.size();
    bool extended = false;
    for (std::size_t k = 0; k < orbit_count && !extended; ++k) {
      for (std::size_t si = 0; si < gen_count && !extended; ++si) {
        const Level& lev = levels_[i - 1];
        Permutation us = compose(lev.transversal[k], lev.gens[si]);
        std::int32_t pos = lev.where[us[lev.beta]];
        Permutation schreier = compose(us, lev.transversal[pos].inverse());
        auto [residue, j] = sift(std::move(schreier), i);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) {
          Level fresh;
          fresh.beta = smallest_moved_point(residue);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = i; l <= j; ++l) levels_[l].gens.push_back(residue);
        for (std::size_t l = i; l <= j; ++l) rebuild_orbit(levels_[l]);
        i = j + 1;
        extended = true;
      }
    }
    if (!extended) --i;
  }

  order_ = 1;
  base_.clear();
  for (const auto& lev : levels_) {
    order_ *= static_cast<std::uint64_t>(lev.orbit.size());
    base_.push_back(lev.beta);
  }
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = sift(p, 0);
  return level == levels_.size() && residue.is_identity();
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  if (order_ > cap) throw EnumerationCapError(order_, cap);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order_));
  std::vector<Permutation> stack{Permutation(degree_)};
  // Depth-first over transversals, deepest level first, so that each element
  // appears exactly once as u_{L-1} ... u_1 u_0.
  struct Frame {
    std::size_t level;
    Permutation acc;
  };
  std::vector<Frame> frames;
  if (levels_.empty()) {
    out.emplace_back(degree_);
    return out;
  }
  frames.push_back({levels_.size(), Permutation(degree_)});
  while (!frames.empty()) {
    Frame f = std::move(frames.back());
    frames.pop_back();
    if (f.level == 0) {
      out.push_back(std::move(f.acc));
      continue;
    }
    const Level& lev = levels_[f.level - 1];
    for (const auto& u : lev.transversal)
      frames.push_back({f.level - 1, compose(f.acc, u)});
  }
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation acc(degree_);
  for (std::size_t l = levels_.size(); l > 0; --l) {
    const Level& lev = levels_[l - 1];
    std::uniform_int_distribution<std::size_t> pick(0, lev.transversal.size() - 1);
    acc = compose(acc, lev.transversal[pick(rng)]);
  }
  return acc;
}

bool PermGroup::is_transitive() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::uint32_t> todo{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    std::uint32_t p = todo.back();
    todo.pop_back();
    for (const auto& g : input_gens_) {
      std::uint32_t q = g[p];
      if (!seen[q]) {
        seen[q] = true;
        ++count;
        todo.push_back(q);
      }
    }
  }
  return count == degree_;
}

MultiplicationTable MultiplicationTable::from_rows(std::vector<std::vector<int>> rows) {
  MultiplicationTable t;
  t.n_ = static_cast<int>(rows.size());
  if (t.n_ == 0) throw std::invalid_argument("empty multiplication table");
  for (int r = 0; r < t.n_; ++r)
    if (static_cast<int>(rows[r].size()) != t.n_)
      throw std::invalid_argument("table row " + std::to_string(r) + " has wrong length");
  for (int r = 0; r < t.n_; ++r) {
    std::vector<bool> seen(t.n_, false);
    for (int c = 0; c < t.n_; ++c) {
      int v = rows[r][c];
      if (v < 0 || v >= t.n_ || seen[v])
        throw std::invalid_argument("row " + std::to_string(r) +
                                    " is not a permutation of 0..n-1");
      seen[v] = true;
    }
  }
  for (int c = 0; c < t.n_; ++c) {
    std::vector<bool> seen(t.n_, false);
    for (int r = 0; r < t.n_; ++r) {
      int v = rows[r][c];
      if (seen[v])
        throw std::invalid_argument("column " + std::to_string(c) +
                                    " is not a permutation of 0..n-1");
      seen[v] = true;
    }
  }
  int identity = -1;
  for (int e = 0; e < t.n_; ++e) {
    bool ok = true;
    for (int x = 0; x < t.n_ && ok; ++x)
      ok = rows[e][x] == x && rows[x][e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw std::invalid_argument("table has no two-sided identity");
  t.identity_ = identity;
  t.rows_ = std::move(rows);

  auto check = [&](int a, int b, int c) {
    if (t.rows_[t.rows_[a][b]][c] != t.rows_[a][t.rows_[b][c]])
      throw std::invalid_argument("table is not associative at (" + std::to_string(a) +
                                  "," + std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (t.n_ <= 64) {
    for (int a = 0; a < t.n_; ++a)
      for (int b = 0; b < t.n_; ++b)
        for (int c = 0; c < t.n_; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x67656e6f7264ULL);
    std::uniform_int_distribution<int> pick(0, t.n_ - 1);
    for (int s = 0; s < 100000; ++s) check(pick(rng), pick(rng), pick(rng));
  }
  return t;
}

PermGroup cayley_embedding(const MultiplicationTable& table) {
  int n = table.size();
  std::vector<Permutation> gens;
  gens.reserve(n);
  for (int g = 0; g < n; ++g) {
    std::vector<std::uint32_t> img(n);
    for (int x = 0; x < n; ++x) img[x] = static_cast<std::uint32_t>(table.at(x, g));
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return PermGroup(std::move(gens));
}

}  // namespace genord
