#pragma once

// The invariant suite run over whole exchange quivers: revalidation of every
// node, mutation involution at every (node, position) pair, key injectivity,
// vanishing ext1 from projectives, Yoneda hom dimensions, g-vector
// additivity, and invariance of the counts under the field and the thread
// count. Violations throw with a description.

#include <functional>
#include <set>
#include <string>

#include "tautilt/counting.hpp"
#include "tautilt/pairs.hpp"

namespace testutil {

using namespace tautilt;

struct PropertyStats {
  size_t nodes = 0;
  size_t involution_checks = 0;
  size_t injectivity_compares = 0;
};

inline void expect(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error("property violated: " + what);
}

// Find the position of `next` whose mutation leads back to `node`.
inline MutPos back_position(const STTPair& node, const STTPair& next) {
  if (next.killed != node.killed) {
    for (int v : next.killed)
      if (!node.killed.count(v)) return MutPos::killed(v);
    // killed shrank: the new summand is the one absent from node
  }
  for (size_t i = 0; i < next.gvecs.size(); ++i) {
    bool in_node = false;
    for (const auto& g : node.gvecs) in_node = in_node || g == next.gvecs[i];
    if (!in_node) return MutPos::summand(static_cast<int>(i));
  }
  throw std::runtime_error("property violated: mutation produced no new position");
}

inline PropertyStats property_suite(const std::function<AlgebraPtr(uint32_t)>& builder,
                                    long long budget = 1000000) {
  PropertyStats stats;
  AlgebraPtr A = builder(32003);
  ExchangeQuiver q = exchange_quiver(A, budget, 1);
  stats.nodes = q.nodes.size();

  // Thread invariance: identical node keys and edges for 1 vs 3 threads.
  ExchangeQuiver q3 = exchange_quiver(A, budget, 3);
  expect(q.nodes.size() == q3.nodes.size() && q.edges.size() == q3.edges.size(),
         "search size changed with thread count");
  {
    auto it1 = q.nodes.begin();
    auto it3 = q3.nodes.begin();
    for (; it1 != q.nodes.end(); ++it1, ++it3) expect(it1->first == it3->first, "thread keys");
    for (size_t i = 0; i < q.edges.size(); ++i)
      expect(q.edges[i].src == q3.edges[i].src && q.edges[i].tgt == q3.edges[i].tgt &&
                 q.edges[i].position == q3.edges[i].position,
             "thread edges");
  }

  // Field invariance: same node count and the same g-vector keys at p = 101.
  {
    AlgebraPtr A101 = builder(101);
    ExchangeQuiver q101 = exchange_quiver(A101, budget, 1);
    expect(q101.nodes.size() == q.nodes.size(), "node count changed with the field");
    auto it1 = q.nodes.begin();
    auto it2 = q101.nodes.begin();
    for (; it1 != q.nodes.end(); ++it1, ++it2)
      expect(it1->first == it2->first, "keys changed with the field");
  }

  // Root and sink are the unique extremal nodes.
  {
    std::map<std::string, int> indeg, outdeg;
    for (const EQEdge& e : q.edges) {
      ++outdeg[e.src];
      ++indeg[e.tgt];
    }
    int n = A->num_vertices();
    for (const auto& [key, node] : q.nodes) {
      expect(indeg[key] + outdeg[key] == n, "node degree is not |vertices|");
      expect((indeg[key] == 0) == (key == q.root_key), "root is not the unique source");
      expect((outdeg[key] == 0) == (key == q.sink_key), "sink is not the unique target");
    }
  }

  // Every node revalidates, its recomputed key matches, and its module
  // satisfies the defining relations when those are known.
  for (const auto& [key, node] : q.nodes) {
    STTPair re = validate_pair(node.module(), node.killed);
    expect(pair_key(re) == key, "revalidation changed the key");
    if (A->relations_exact)
      expect(rep_check_relations(node.module(), A->relations),
             "a node module violates the relations");
  }

  // Mutation is an involution at every (node, position) pair.
  for (const auto& [key, node] : q.nodes) {
    for (int s = 0; s < static_cast<int>(node.summands.size()); ++s) {
      STTPair next = mutate(node, MutPos::summand(s));
      STTPair back = mutate(next, back_position(node, next));
      expect(pair_key(back) == key, "involution failed at a summand position");
      ++stats.involution_checks;
    }
    for (int v : node.killed) {
      STTPair next = mutate(node, MutPos::killed(v));
      STTPair back = mutate(next, back_position(node, next));
      expect(pair_key(back) == key, "involution failed at a killed position");
      ++stats.involution_checks;
    }
  }

  // Key injectivity: distinct nodes are non-isomorphic pairs (full pairwise
  // check at desk scale).
  if (q.nodes.size() <= 60) {
    std::vector<const STTPair*> all;
    for (const auto& [key, node] : q.nodes) all.push_back(&node);
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j) {
        ++stats.injectivity_compares;
        if (all[i]->killed != all[j]->killed) continue;
        if (all[i]->summands.size() != all[j]->summands.size()) continue;
        bool same = true;
        std::vector<bool> used(all[j]->summands.size(), false);
        for (const Rep& x : all[i]->summands) {
          bool matched = false;
          for (size_t k = 0; k < all[j]->summands.size(); ++k) {
            if (used[k]) continue;
            if (indec_isomorphic(x, all[j]->summands[k])) {
              used[k] = true;
              matched = true;
              break;
            }
          }
          same = same && matched;
        }
        expect(!same, "two distinct keys carry isomorphic pairs");
      }
  }

  // ext1(projective, -) = 0, Yoneda dimensions, g-vector additivity.
  size_t sampled = 0;
  for (const auto& [key, node] : q.nodes) {
    if (++sampled > 40) break;
    Rep M = node.module();
    for (int v = 0; v < A->num_vertices(); ++v) {
      expect(ext1(rep_projective(A, v), M) == 0, "ext1 from a projective is nonzero");
      expect(hom_dim(rep_projective(A, v), M) == M.dims[v], "hom(P(i), M) != dims(M)(i)");
    }
    if (node.summands.size() >= 2) {
      Rep s01 = rep_direct_sum(node.summands[0], node.summands[1]);
      std::vector<int> expected = node.gvecs[0];
      for (size_t k = 0; k < expected.size(); ++k) expected[k] += node.gvecs[1][k];
      expect(g_vector(s01) == expected, "g-vector is not additive");
    }
  }

  return stats;
}

}  // namespace testutil
