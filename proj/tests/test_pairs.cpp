#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tautilt/pairs.hpp"
#include "test_helpers.hpp"

using namespace tautilt;
using testutil::a2_algebra;
using testutil::fork_algebra;
using testutil::semisimple_algebra;

namespace {

AlgebraPtr one_vertex_algebra(uint32_t p = 32003) {
  Quiver q;
  q.vertices = {1};
  return build_algebra(q, {}, p);
}

}  // namespace

TEST_CASE("pair validation accepts the regular pair and rejects bad input") {
  AlgebraPtr A = fork_algebra();
  STTPair root = root_pair(A);
  REQUIRE(root.size() == 3);
  REQUIRE(root.killed.empty());

  // the figure's top node: S(3) + P(4) + P(5)
  Rep M = rep_direct_sum(rep_simple(A, 0),
                         rep_direct_sum(rep_projective(A, 1), rep_projective(A, 2)));
  STTPair ok = validate_pair(M, {});
  REQUIRE(ok.summands.size() == 3);

  REQUIRE_THROWS_WITH(validate_pair(rep_simple(A, 0), {4}),
                      Catch::Matchers::ContainsSubstring("wrong summand count"));
  Rep two = rep_direct_sum(rep_simple(A, 0), rep_projective(A, 1));
  REQUIRE_THROWS_WITH(validate_pair(two, {4}),
                      Catch::Matchers::ContainsSubstring("support overlap"));
  Rep bad = rep_direct_sum(rep_simple(A, 0),
                           rep_direct_sum(rep_simple(A, 1), rep_simple(A, 2)));
  REQUIRE_THROWS_WITH(validate_pair(bad, {}),
                      Catch::Matchers::ContainsSubstring("not tau-rigid"));
}

TEST_CASE("validation basicifies its module argument") {
  AlgebraPtr A = fork_algebra();
  Rep M = rep_direct_sum(rep_simple(A, 0), rep_simple(A, 0));
  STTPair p = validate_pair(M, {4, 5});
  REQUIRE(p.summands.size() == 1);
}

TEST_CASE("mutating the root at the sink projective inserts the biserial") {
  AlgebraPtr A = fork_algebra();
  STTPair root = root_pair(A);
  // locate the summand S(3) = P(3): its g-vector is the unit at vertex 3
  int pos = -1;
  for (size_t i = 0; i < root.summands.size(); ++i)
    if (root.gvecs[i] == std::vector<int>{1, 0, 0}) pos = static_cast<int>(i);
  REQUIRE(pos >= 0);
  STTPair next = mutate(root, MutPos::summand(pos));
  REQUIRE(next.killed.empty());
  bool has_biserial = false;
  for (const Rep& s : next.summands) has_biserial |= s.dims == std::vector<int>{1, 1, 1};
  REQUIRE(has_biserial);

  // mutating back at the biserial returns the original pair
  int back = -1;
  for (size_t i = 0; i < next.summands.size(); ++i)
    if (next.summands[i].dims == std::vector<int>{1, 1, 1}) back = static_cast<int>(i);
  STTPair again = mutate(next, MutPos::summand(back));
  REQUIRE(pair_key(again) == pair_key(root));
}

TEST_CASE("one-vertex algebra: mutation kills the only summand") {
  AlgebraPtr A = one_vertex_algebra();
  STTPair root = root_pair(A);
  STTPair bottom = mutate(root, MutPos::summand(0));
  REQUIRE(bottom.summands.empty());
  REQUIRE(bottom.killed == std::set<int>{1});
  STTPair back = mutate(bottom, MutPos::killed(1));
  REQUIRE(pair_key(back) == pair_key(root));
}

TEST_CASE("invalid mutation positions are rejected") {
  AlgebraPtr A = fork_algebra();
  STTPair root = root_pair(A);
  REQUIRE_THROWS_AS(mutate(root, MutPos::summand(7)), ParseError);
  REQUIRE_THROWS_AS(mutate(root, MutPos::killed(3)), ParseError);
}

TEST_CASE("exchange quiver of the fork has 14 nodes and 21 edges") {
  AlgebraPtr A = fork_algebra();
  ExchangeQuiver q = exchange_quiver(A);
  REQUIRE(q.nodes.size() == 14);
  REQUIRE(q.edges.size() == 21);

  // unique root (no in-edges) and unique sink (no out-edges)
  std::map<std::string, int> indeg, outdeg;
  for (const EQEdge& e : q.edges) {
    ++outdeg[e.src];
    ++indeg[e.tgt];
  }
  for (const auto& [key, node] : q.nodes) {
    REQUIRE(indeg[key] + outdeg[key] == 3);
    if (indeg[key] == 0) REQUIRE(key == q.root_key);
    if (outdeg[key] == 0) REQUIRE(key == q.sink_key);
  }
  const STTPair& sink = q.nodes.at(q.sink_key);
  REQUIRE(sink.summands.empty());
  REQUIRE(sink.killed == std::set<int>({3, 4, 5}));
}

TEST_CASE("exchange quiver sizes for semisimple and hereditary A2") {
  REQUIRE(exchange_quiver(semisimple_algebra(3)).nodes.size() == 8);
  REQUIRE(exchange_quiver(a2_algebra()).nodes.size() == 5);
  REQUIRE(exchange_quiver(one_vertex_algebra()).nodes.size() == 2);
}

TEST_CASE("node budget is enforced") {
  REQUIRE_THROWS_AS(exchange_quiver(fork_algebra(), 5), BudgetError);
}

TEST_CASE("thread count does not change the result") {
  AlgebraPtr A = fork_algebra();
  ExchangeQuiver q1 = exchange_quiver(A, 1000000, 1);
  ExchangeQuiver q3 = exchange_quiver(A, 1000000, 3);
  REQUIRE(q1.nodes.size() == q3.nodes.size());
  REQUIRE(q1.edges.size() == q3.edges.size());
  auto keys = [](const ExchangeQuiver& q) {
    std::vector<std::string> ks;
    for (const auto& [k, n] : q.nodes) ks.push_back(k);
    return ks;
  };
  REQUIRE(keys(q1) == keys(q3));
  for (size_t i = 0; i < q1.edges.size(); ++i) {
    REQUIRE(q1.edges[i].src == q3.edges[i].src);
    REQUIRE(q1.edges[i].tgt == q3.edges[i].tgt);
    REQUIRE(q1.edges[i].position == q3.edges[i].position);
  }
}

TEST_CASE("brute force enumeration matches the search") {
  AlgebraPtr A = fork_algebra();
  std::vector<STTPair> brute = brute_force_stt(A, {1, 1, 1});
  REQUIRE(brute.size() == 14);
  ExchangeQuiver q = exchange_quiver(A);
  std::set<std::string> bfs_keys, brute_keys;
  for (const auto& [k, n] : q.nodes) bfs_keys.insert(k);
  for (const STTPair& p : brute) brute_keys.insert(pair_key(p));
  REQUIRE(bfs_keys == brute_keys);

  REQUIRE(brute_force_stt(one_vertex_algebra(), {1}).size() == 2);
  REQUIRE(brute_force_stt(a2_algebra(), {1, 1}).size() == 5);
}

TEST_CASE("brute force refuses oversized inputs") {
  AlgebraPtr big = semisimple_algebra(5);
  REQUIRE_THROWS_AS(brute_force_stt(big, {1, 1, 1, 1, 1}), ParseError);
}
