#pragma once

// The algebra families of the workbench: Dynkin quivers in their fixed
// orientations, radical-square-zero quotients, the Auslander-algebra
// presentations of those quotients, the projective-injective idempotent,
// and the reduced algebra it cuts out.

#include <set>
#include <string>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/homalg.hpp"

namespace tautilt {

struct DynkinSpec {
  char series = 'A';  // 'A', 'D', 'E'
  int rank = 1;

  void validate() const {
    if (series == 'A' && rank >= 1) return;
    if (series == 'D' && rank >= 4) return;
    if (series == 'E' && (rank == 6 || rank == 7 || rank == 8)) return;
    throw ParseError(std::string("invalid Dynkin spec ") + series + std::to_string(rank));
  }

  std::string name() const { return std::string(1, series) + std::to_string(rank); }
};

// Fixed orientations: A is the linear chain 1 -> 2 -> ... -> m; D has
// 1 -> 3 and 2 -> 3 -> 4 -> ... -> m; E hangs 3 above the branch vertex 4
// in 1 -> 2 -> 4 -> 5 -> ... -> m.
inline Quiver dynkin_quiver(const DynkinSpec& spec) {
  spec.validate();
  int m = spec.rank;
  Quiver q;
  for (int i = 1; i <= m; ++i) q.vertices.push_back(i);
  auto arrow = [&](int i, int s, int t) {
    q.arrows.push_back(Arrow{"a" + std::to_string(i), s, t});
  };
  if (spec.series == 'A') {
    for (int i = 1; i < m; ++i) arrow(i, i, i + 1);
  } else if (spec.series == 'D') {
    arrow(1, 1, 3);
    arrow(2, 2, 3);
    for (int i = 3; i < m; ++i) arrow(i, i, i + 1);
  } else {
    arrow(1, 1, 2);
    arrow(2, 2, 4);
    arrow(3, 3, 4);
    for (int i = 4; i < m; ++i) arrow(i, i, i + 1);
  }
  q.validate();
  return q;
}

// KQ / rad^2: every length-2 path becomes a monomial relation.
inline AlgebraPtr rad_square_zero(const Quiver& q, uint32_t p = 32003) {
  std::vector<Relation> rels;
  for (int a = 0; a < q.num_arrows(); ++a)
    for (int b = 0; b < q.num_arrows(); ++b)
      if (q.arrows[a].tgt == q.arrows[b].src) rels.push_back(Relation{{RelTerm{1, {a, b}}}});
  return build_algebra(q, rels, p);
}

// Auslander-algebra presentation of the radical-square-zero algebra of the
// given Dynkin type, with the vertex numbering of the source diagrams.
inline std::pair<Quiver, std::vector<Relation>> auslander_quiver(const DynkinSpec& spec) {
  spec.validate();
  int m = spec.rank;
  Quiver q;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rel_strings;
  auto rel = [&](std::vector<std::string> lhs, std::vector<std::string> rhs = {}) {
    rel_strings.emplace_back(std::move(lhs), std::move(rhs));
  };
  auto an = [](int i) { return "a" + std::to_string(i); };
  auto arrow = [&](int i, int s, int t) { q.arrows.push_back(Arrow{an(i), s, t}); };

  if (spec.series == 'A') {
    for (int i = 1; i <= 2 * m - 1; ++i) q.vertices.push_back(i);
    for (int i = 1; i <= 2 * m - 2; ++i) arrow(i, i + 1, i);
    for (int k = 1; k <= m - 1; ++k) rel({an(2 * k - 1), an(2 * k)});
  } else if (spec.series == 'D') {
    for (int i = 1; i <= 2 * m; ++i) q.vertices.push_back(i);
    for (int i = 1; i <= 2 * m - 6; ++i) arrow(i, i + 1, i);
    arrow(2 * m - 5, 2 * m - 4, 2 * m - 5);
    arrow(2 * m - 4, 2 * m - 3, 2 * m - 5);
    arrow(2 * m - 3, 2 * m - 2, 2 * m - 4);
    arrow(2 * m - 2, 2 * m - 2, 2 * m - 3);
    arrow(2 * m - 1, 2 * m - 1, 2 * m - 2);
    arrow(2 * m, 2 * m, 2 * m - 2);
    for (int k = 1; k <= m - 3; ++k) rel({an(2 * k - 1), an(2 * k)});
    rel({an(2 * m - 5), an(2 * m - 3)}, {an(2 * m - 4), an(2 * m - 2)});
    rel({an(2 * m - 3), an(2 * m - 1)});
    rel({an(2 * m - 2), an(2 * m)});
  } else {
    int n = 2 * m;  // 12, 14, 16 vertices
    for (int i = 1; i <= n; ++i) q.vertices.push_back(i);
    int c = n - 8;  // length of the initial chain: 4, 6, 8
    for (int i = 1; i <= c; ++i) arrow(i, i + 1, i);
    arrow(c + 1, c + 2, c + 1);      // top branch into the chain end
    arrow(c + 2, c + 3, c + 1);      // bottom branch
    arrow(c + 3, c + 4, c + 2);      // diamond, top route
    arrow(c + 4, c + 4, c + 3);      // diamond, bottom route
    arrow(c + 5, c + 5, c + 4);      // top tail
    arrow(c + 6, c + 6, c + 4);      // bottom tail
    arrow(c + 7, c + 7, c + 6);
    arrow(c + 8, c + 8, c + 7);
    for (int k = 1; 2 * k <= c; ++k) rel({an(2 * k - 1), an(2 * k)});
    rel({an(c + 1), an(c + 3)}, {an(c + 2), an(c + 4)});
    rel({an(c + 3), an(c + 5)});
    rel({an(c + 4), an(c + 6)});
    rel({an(c + 7), an(c + 8)});
  }
  q.validate();
  std::vector<Relation> rels;
  for (const auto& [lhs, rhs] : rel_strings)
    rels.push_back(rhs.empty() ? monomial_relation(q, lhs) : commutativity_relation(q, lhs, rhs));
  return {q, rels};
}

inline AlgebraPtr auslander_presentation(const DynkinSpec& spec, uint32_t p = 32003) {
  auto [q, rels] = auslander_quiver(spec);
  return build_algebra(q, rels, p);
}

// Vertices whose projective is also injective; computed, never hardcoded.
inline std::set<int> proj_inj_idempotent(const AlgebraPtr& A) {
  std::set<int> e;
  for (int v = 0; v < A->num_vertices(); ++v)
    if (is_injective_module(rep_projective(A, v))) e.insert(A->quiver.vertices[v]);
  return e;
}

inline AlgebraPtr reduced_algebra(const DynkinSpec& spec, uint32_t p = 32003) {
  AlgebraPtr gamma = auslander_presentation(spec, p);
  return quotient_by_idempotent(gamma, proj_inj_idempotent(gamma));
}

}  // namespace tautilt
