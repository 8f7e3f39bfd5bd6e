#pragma once

// Shared fixtures and independent oracles for the test suites. The path
// oracle counts monomial-quotient dimensions by raw walk enumeration and
// stays independent of the degreewise row reduction it checks.

#include <set>
#include <string>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/dynkin.hpp"
#include "tautilt/quiver.hpp"

namespace testutil {

using namespace tautilt;

// The 3-vertex algebra with two arrows into a common sink: 4 -> 3 <- 5.
inline AlgebraPtr fork_algebra(uint32_t p = 32003) {
  Quiver q;
  q.vertices = {3, 4, 5};
  q.arrows = {Arrow{"a", 4, 3}, Arrow{"b", 5, 3}};
  return build_algebra(q, {}, p);
}

// Hereditary A2: one arrow 1 -> 2.
inline AlgebraPtr a2_algebra(uint32_t p = 32003) {
  Quiver q;
  q.vertices = {1, 2};
  q.arrows = {Arrow{"a", 1, 2}};
  return build_algebra(q, {}, p);
}

// Nakayama quotient 3 -> 2 -> 1 with the long path killed (the Auslander
// algebra of the radical-square-zero A2).
inline AlgebraPtr nakayama3_algebra(uint32_t p = 32003) {
  Quiver q;
  q.vertices = {1, 2, 3};
  q.arrows = {Arrow{"u1", 2, 1}, Arrow{"u2", 3, 2}};
  return build_algebra(q, {monomial_relation(q, {"u1", "u2"})}, p);
}

// Kronecker quiver: two parallel arrows 1 -> 2.
inline AlgebraPtr kronecker_algebra(uint32_t p = 32003) {
  Quiver q;
  q.vertices = {1, 2};
  q.arrows = {Arrow{"x", 1, 2}, Arrow{"y", 1, 2}};
  return build_algebra(q, {}, p);
}

// Semisimple algebra on n isolated vertices.
inline AlgebraPtr semisimple_algebra(int n, uint32_t p = 32003) {
  Quiver q;
  for (int i = 1; i <= n; ++i) q.vertices.push_back(i);
  return build_algebra(q, {}, p);
}

// Oracle: dimension of KQ/I for monomial I on an acyclic quiver, by raw
// walk enumeration killing every walk that contains a dead factor. Walks
// avoiding the vertex set `avoid` can be counted as well (for quotients in
// which every surviving relation route dies).
inline int monomial_path_count(const Quiver& q, const std::vector<std::vector<int>>& dead_words,
                               const std::set<int>& avoid = {}) {
  int count = 0;
  std::vector<std::vector<int>> frontier;
  for (int v : q.vertices)
    if (!avoid.count(v)) ++count;  // trivial paths
  for (int a = 0; a < q.num_arrows(); ++a)
    if (!avoid.count(q.arrows[a].src) && !avoid.count(q.arrows[a].tgt))
      frontier.push_back({a});
  auto contains_dead = [&](const std::vector<int>& w) {
    for (const auto& d : dead_words) {
      if (d.size() > w.size()) continue;
      for (size_t s = 0; s + d.size() <= w.size(); ++s) {
        bool hit = true;
        for (size_t k = 0; k < d.size(); ++k)
          if (w[s + k] != d[k]) hit = false;
        if (hit) return true;
      }
    }
    return false;
  };
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      if (contains_dead(w)) continue;
      ++count;
      int end = q.arrows[w.back()].tgt;
      for (int a = 0; a < q.num_arrows(); ++a)
        if (q.arrows[a].src == end && !avoid.count(q.arrows[a].tgt)) {
          auto e = w;
          e.push_back(a);
          next.push_back(std::move(e));
        }
    }
    frontier = std::move(next);
  }
  return count;
}

}  // namespace testutil
