#include <catch2/catch_amalgamated.hpp>

#include "tautilt/algebra.hpp"
#include "test_helpers.hpp"

using namespace tautilt;
using testutil::fork_algebra;

namespace {

// Small diamond with a commutativity relation: 6 -> {4,5} -> 3,
// u3 u5 = u4 u6 in written order (u3: 4->3, u4: 5->3, u5: 6->4, u6: 6->5).
AlgebraPtr diamond_algebra(uint32_t p = 32003) {
  Quiver q;
  q.vertices = {3, 4, 5, 6};
  q.arrows = {Arrow{"u3", 4, 3}, Arrow{"u4", 5, 3}, Arrow{"u5", 6, 4}, Arrow{"u6", 6, 5}};
  return build_algebra(q, {commutativity_relation(q, {"u3", "u5"}, {"u4", "u6"})}, p);
}

AlgebraPtr gamma_a3(uint32_t p = 32003) {
  Quiver q;
  q.vertices = {1, 2, 3, 4, 5};
  q.arrows = {Arrow{"u1", 2, 1}, Arrow{"u2", 3, 2}, Arrow{"u3", 4, 3}, Arrow{"u4", 5, 4}};
  return build_algebra(
      q, {monomial_relation(q, {"u1", "u2"}), monomial_relation(q, {"u3", "u4"})}, p);
}

}  // namespace

TEST_CASE("fork algebra has the forced 5-element basis") {
  AlgebraPtr A = fork_algebra();
  REQUIRE(A->dim() == 5);
  REQUIRE(A->num_vertices() == 3);
  // 3 idempotents + 2 arrows, nothing composes
  int words_len1 = 0;
  for (const BasisWord& w : A->basis) words_len1 += w.len() == 1;
  REQUIRE(words_len1 == 2);
}

TEST_CASE("Auslander presentation of rad-square-zero A3 has dimension 10") {
  AlgebraPtr A = gamma_a3();
  // Oracle: raw walks modulo the two monomial dead pairs (traversal order).
  std::vector<std::vector<int>> dead = {{1, 0}, {3, 2}};  // [u2,u1], [u4,u3]
  REQUIRE(testutil::monomial_path_count(A->quiver, dead) == 10);
  REQUIRE(A->dim() == 10);
  // the single surviving length-2 word is the u2 u3 walk
  int len2 = 0;
  for (const BasisWord& w : A->basis)
    if (w.len() == 2) {
      ++len2;
      REQUIRE(w.arrows == std::vector<int>{2, 1});  // traverse u3 then u2
    }
  REQUIRE(len2 == 1);
}

TEST_CASE("hereditary A2 has dimension 3") {
  REQUIRE(testutil::a2_algebra()->dim() == 3);
}

TEST_CASE("a loop with no relations is rejected as infinite-dimensional") {
  Quiver q;
  q.vertices = {1};
  q.arrows = {Arrow{"l", 1, 1}};
  REQUIRE_THROWS_WITH(build_algebra(q, {}), Catch::Matchers::ContainsSubstring("not finite-dimensional"));
}

TEST_CASE("inhomogeneous and mismatched relations are rejected") {
  Quiver q;
  q.vertices = {1, 2, 3};
  q.arrows = {Arrow{"a", 1, 2}, Arrow{"b", 2, 3}};
  Relation mixed;
  mixed.terms.push_back(RelTerm{1, {0, 1}});
  mixed.terms.push_back(RelTerm{1, {0}});
  REQUIRE_THROWS_WITH(build_algebra(q, {mixed}),
                      Catch::Matchers::ContainsSubstring("inhomogeneous relation"));

  Quiver q2;
  q2.vertices = {1, 2, 3, 4};
  q2.arrows = {Arrow{"a", 1, 2}, Arrow{"b", 2, 3}, Arrow{"c", 2, 4}};
  Relation mism;
  mism.terms.push_back(RelTerm{1, {0, 1}});
  mism.terms.push_back(RelTerm{1, {0, 2}});
  REQUIRE_THROWS_WITH(build_algebra(q2, {mism}),
                      Catch::Matchers::ContainsSubstring("endpoint mismatch"));
}

TEST_CASE("multiplication table is associative and unital on desk algebras") {
  for (AlgebraPtr A : {fork_algebra(), gamma_a3(), diamond_algebra()}) {
    int d = A->dim();
    // e_i orthogonality and identity sandwich
    for (int i = 0; i < A->num_vertices(); ++i)
      for (int j = 0; j < A->num_vertices(); ++j) {
        const LinComb& prod = A->mult[A->idem[i]][A->idem[j]];
        if (i == j) {
          REQUIRE(prod == LinComb{{A->idem[i], 1u}});
        } else {
          REQUIRE(prod.empty());
        }
      }
    for (int b = 0; b < d; ++b) {
      REQUIRE(A->mult[A->idem[A->basis[b].src]][b] == LinComb{{b, 1u}});
      REQUIRE(A->mult[b][A->idem[A->basis[b].tgt]] == LinComb{{b, 1u}});
    }
    // exhaustive associativity on basis triples
    auto mul_vec = [&](const LinComb& v, int c) {
      LinComb out;
      for (const auto& [b, coeff] : v)
        for (const auto& [b2, c2] : A->mult[b][c]) lincomb_add(out, b2, mul_mod(coeff, c2, A->p), A->p);
      return out;
    };
    auto vec_mul = [&](int a, const LinComb& v) {
      LinComb out;
      for (const auto& [b, coeff] : v)
        for (const auto& [b2, c2] : A->mult[a][b]) lincomb_add(out, b2, mul_mod(coeff, c2, A->p), A->p);
      return out;
    };
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          REQUIRE(mul_vec(A->mult[a][b], c) == vec_mul(a, A->mult[b][c]));
  }
}

TEST_CASE("Cartan matrix matches basis slice sizes and total dimension") {
  AlgebraPtr A = gamma_a3();
  auto c = A->cartan();
  int total = 0;
  for (const auto& row : c)
    for (int x : row) total += x;
  REQUIRE(total == A->dim());
  // P(2) words start at vertex 2: e2 and u1
  REQUIRE(c[1][1] == 1);
  REQUIRE(c[1][0] == 1);
  REQUIRE(c[1][2] == 0);
}

TEST_CASE("basis is independent of arrow declaration order") {
  Quiver q1, q2;
  q1.vertices = {3, 4, 5, 6};
  q1.arrows = {Arrow{"u3", 4, 3}, Arrow{"u4", 5, 3}, Arrow{"u5", 6, 4}, Arrow{"u6", 6, 5}};
  q2.vertices = {3, 4, 5, 6};
  q2.arrows = {Arrow{"u6", 6, 5}, Arrow{"u4", 5, 3}, Arrow{"u5", 6, 4}, Arrow{"u3", 4, 3}};
  AlgebraPtr A1 = build_algebra(q1, {commutativity_relation(q1, {"u3", "u5"}, {"u4", "u6"})});
  AlgebraPtr A2 = build_algebra(q2, {commutativity_relation(q2, {"u3", "u5"}, {"u4", "u6"})});
  REQUIRE(A1->dim() == A2->dim());
  std::set<std::string> names1, names2;
  for (int b = 0; b < A1->dim(); ++b) names1.insert(A1->word_name(b));
  for (int b = 0; b < A2->dim(); ++b) names2.insert(A2->word_name(b));
  REQUIRE(names1 == names2);
}

TEST_CASE("idempotent quotient kills whole classes, not just monomials") {
  AlgebraPtr A = diamond_algebra();
  REQUIRE(A->dim() == 9);  // 4 idempotents + 4 arrows + 1 merged length-2 class

  // Killing vertex 5 must also kill the surviving route through 4, since
  // the two routes are identified by the commutativity relation.
  AlgebraPtr Q = quotient_by_idempotent(A, {5});
  REQUIRE(Q->num_vertices() == 3);
  REQUIRE(Q->dim() == 5);  // e3, e4, e6, u3, u5 and no length-2 word
  for (const BasisWord& w : Q->basis) REQUIRE(w.len() <= 1);

  SECTION("empty idempotent set is the identity") {
    AlgebraPtr same = quotient_by_idempotent(A, {});
    REQUIRE(same->dim() == A->dim());
    REQUIRE(same->quiver.vertices == A->quiver.vertices);
  }
  SECTION("killing everything yields the zero algebra") {
    AlgebraPtr zero = quotient_by_idempotent(A, {3, 4, 5, 6});
    REQUIRE(zero->dim() == 0);
    REQUIRE(zero->num_vertices() == 0);
  }
}

TEST_CASE("blocks split disconnected algebras and preserve content") {
  AlgebraPtr S = testutil::semisimple_algebra(3);
  REQUIRE(blocks(S).size() == 3);
  REQUIRE(blocks(fork_algebra()).size() == 1);

  Quiver q;
  std::vector<Relation> rels;
  q.vertices = {3, 4, 5};
  q.arrows = {Arrow{"a", 4, 3}, Arrow{"b", 5, 3}};
  Quiver q2;
  q2.vertices = {1, 2};
  q2.arrows = {Arrow{"c", 1, 2}};
  disjoint_union(q, rels, q2, {});
  AlgebraPtr sum = build_algebra(q, rels);
  auto blks = blocks(sum);
  REQUIRE(blks.size() == 2);
  REQUIRE(blks[0].second == std::vector<int>{3, 4, 5});
  REQUIRE(blks[0].first->dim() == 5);
  REQUIRE(blks[1].first->dim() == 3);
  int total = 0;
  for (const auto& [blk, ids] : blks) total += blk->dim();
  REQUIRE(total == sum->dim());
}

TEST_CASE("opposite algebra is an involution with reversed words") {
  AlgebraPtr A = gamma_a3();
  AlgebraPtr B = opposite(A);
  REQUIRE(B->dim() == A->dim());
  REQUIRE(opposite(B) == A);  // cached round trip returns the same object
  for (int b = 0; b < A->dim(); ++b) {
    REQUIRE(B->basis[b].src == A->basis[b].tgt);
    REQUIRE(B->basis[b].tgt == A->basis[b].src);
  }
  for (int i = 0; i < A->dim(); ++i)
    for (int j = 0; j < A->dim(); ++j) REQUIRE(B->mult[i][j] == A->mult[j][i]);
}
