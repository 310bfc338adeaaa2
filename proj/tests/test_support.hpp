#pragma once

#include <set>
#include <string>
#include <vector>

#include "genord/perm.hpp"

namespace genord::testing {

/// Breadth-first closure of a generating set; the independent order and
/// membership oracle used against the strong-generating-set index.
inline std::set<Permutation> bfs_closure(const std::vector<Permutation>& gens) {
  std::set<Permutation> seen;
  std::vector<Permutation> todo;
  Permutation id(gens.at(0).degree());
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Permutation cur = std::move(todo.back());
    todo.pop_back();
    for (const auto& g : gens) {
      for (Permutation prod : {compose(cur, g), compose(g, cur)}) {
        if (seen.insert(prod).second) todo.push_back(prod);
      }
    }
  }
  return seen;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(GENORD_FIXTURE_DIR) + "/" + name;
}

}  // namespace genord::testing
