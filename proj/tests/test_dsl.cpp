#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "tautilt/counting.hpp"
#include "tautilt/dsl.hpp"

using namespace tautilt;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("the fork file parses and builds a 5-dimensional algebra") {
  DslFile d = parse_dsl(slurp(DATA_DIR "/fork.dsl"));
  REQUIRE(d.quiver.num_vertices() == 3);
  REQUIRE(d.quiver.num_arrows() == 2);
  REQUIRE_FALSE(d.p_set);
  REQUIRE(d.p == 32003);
  REQUIRE(build_algebra(d.quiver, d.relations, d.p)->dim() == 5);
}

TEST_CASE("a D4 presentation with commutativity relations parses") {
  std::string text = R"(
# Auslander presentation of the radical-square-zero D4 algebra
field: 101
vertices: 1 2 3 4 5 6 7 8
arrow: u1 : 2 -> 1
arrow: u2 : 3 -> 2
arrow: u3 : 4 -> 3
arrow: u4 : 5 -> 3
arrow: u5 : 6 -> 4
arrow: u6 : 6 -> 5
arrow: u7 : 7 -> 6
arrow: u8 : 8 -> 6
relation: u1*u2 = 0
relation: u3*u5 - u4*u6 = 0
relation: u5*u7 = 0
relation: u6*u8 = 0
)";
  DslFile d = parse_dsl(text);
  REQUIRE(d.p == 101);
  REQUIRE(d.p_set);
  REQUIRE(d.relations.size() == 4);
  REQUIRE(d.relations[1].terms.size() == 2);
  REQUIRE(d.relations[1].terms[1].coeff == -1);
  AlgebraPtr A = build_algebra(d.quiver, d.relations, d.p);
  REQUIRE(A->dim() == 22);
  REQUIRE(exchange_quiver(quotient_by_idempotent(A, {2, 6, 7, 8}), 1000, 1).nodes.size() == 28);
}

TEST_CASE("coefficients and signs are parsed") {
  std::string text = R"(
vertices: 1 2 3
arrow: a : 1 -> 2
arrow: b : 2 -> 3
arrow: c : 1 -> 2
relation: 2*b*a + 3*b*c = 0
)";
  DslFile d = parse_dsl(text);
  REQUIRE(d.relations.size() == 1);
  REQUIRE(d.relations[0].terms[0].coeff == 2);
  REQUIRE(d.relations[0].terms[1].coeff == 3);
  REQUIRE(build_algebra(d.quiver, d.relations, 32003)->dim() == 7);
}

TEST_CASE("non-composable products are rejected with the offending pair") {
  REQUIRE_THROWS_WITH(parse_dsl(slurp(DATA_DIR "/bad_compose.dsl")),
                      Catch::Matchers::ContainsSubstring("u1*u3 not composable") &&
                          Catch::Matchers::ContainsSubstring("line 5"));
}

TEST_CASE("malformed input carries line numbers") {
  REQUIRE_THROWS_WITH(parse_dsl("vertices: 1 2\nvertices: 3\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
  REQUIRE_THROWS_WITH(parse_dsl("arrow: a 1 -> 2\n"),
                      Catch::Matchers::ContainsSubstring("line 1"));
  REQUIRE_THROWS_WITH(parse_dsl("field: 10\n"),
                      Catch::Matchers::ContainsSubstring("prime"));
  REQUIRE_THROWS_WITH(parse_dsl("vertices: 1\nrelation: x = 0\n"),
                      Catch::Matchers::ContainsSubstring("unknown arrow"));
  REQUIRE_THROWS_WITH(parse_dsl("vertices: 1 1\n"),
                      Catch::Matchers::ContainsSubstring("duplicate"));
}

TEST_CASE("present output round-trips through the parser for every family") {
  for (DynkinSpec spec : {DynkinSpec{'A', 1}, DynkinSpec{'A', 3}, DynkinSpec{'D', 4},
                          DynkinSpec{'D', 6}, DynkinSpec{'E', 6}, DynkinSpec{'E', 7},
                          DynkinSpec{'E', 8}}) {
    auto [q, rels] = auslander_quiver(spec);
    std::string text = emit_dsl(q, rels, 32003, "presentation " + spec.name());
    DslFile d = parse_dsl(text);
    AlgebraPtr direct = build_algebra(q, rels, 32003);
    AlgebraPtr reparsed = build_algebra(d.quiver, d.relations, d.p);
    REQUIRE(direct->dim() == reparsed->dim());
    REQUIRE(direct->cartan() == reparsed->cartan());
  }
}
