#pragma once

// Quivers and homogeneous relations.
//
// Composition convention. A path is stored as its arrow sequence in
// traversal order: [a, b] is "walk a, then b" and needs tgt(a) == src(b).
// Written products compose the other way round, like functions: the string
// a1*a2 (as presentations are written, and as the DSL reads) is the walk
// [a2, a1] and is composable
// exactly when src(a1) == tgt(a2). The trivial path at vertex i is e_i, and
// a path w from i to j satisfies e_i * w = w = w * e_j.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "tautilt/errors.hpp"

namespace tautilt {

struct Arrow {
  std::string name;
  int src = 0;  // vertex id
  int tgt = 0;  // vertex id
};

struct Quiver {
  std::vector<int> vertices;  // distinct positive ids, in declaration order
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }

  int vertex_index(int id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == id) return static_cast<int>(i);
    throw ParseError("unknown vertex id " + std::to_string(id));
  }

  bool has_vertex(int id) const {
    return std::find(vertices.begin(), vertices.end(), id) != vertices.end();
  }

  int arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == name) return static_cast<int>(i);
    throw ParseError("unknown arrow " + name);
  }

  void validate() const {
    std::map<int, int> vseen;
    for (int v : vertices) {
      if (v <= 0) throw ParseError("vertex ids must be positive");
      if (++vseen[v] > 1) throw ParseError("duplicate vertex id " + std::to_string(v));
    }
    std::map<std::string, int> aseen;
    for (const Arrow& a : arrows) {
      if (a.name.empty()) throw ParseError("empty arrow name");
      if (++aseen[a.name] > 1) throw ParseError("duplicate arrow " + a.name);
      if (!has_vertex(a.src) || !has_vertex(a.tgt))
        throw ParseError("arrow " + a.name + " has undeclared endpoint");
    }
  }
};

// One homogeneous relation: a K-linear combination of parallel paths of a
// common length >= 2. Coefficients are kept as integers and reduced mod p
// when an algebra is built. Paths are arrow-index sequences in traversal
// order.
struct RelTerm {
  long long coeff = 1;
  std::vector<int> arrows;
};

struct Relation {
  std::vector<RelTerm> terms;
};

// Traversal-order validity: consecutive arrows must chain head-to-tail.
inline bool word_composable(const Quiver& q, const std::vector<int>& word) {
  for (size_t k = 0; k + 1 < word.size(); ++k)
    if (q.arrows[word[k]].tgt != q.arrows[word[k + 1]].src) return false;
  return true;
}

inline int word_src(const Quiver& q, const std::vector<int>& word) {
  return q.arrows[word.front()].src;
}

inline int word_tgt(const Quiver& q, const std::vector<int>& word) {
  return q.arrows[word.back()].tgt;
}

// Monomial relation from a written product string (leftmost factor acts
// last): reverses the names into traversal order.
inline Relation monomial_relation(const Quiver& q, const std::vector<std::string>& written) {
  RelTerm t;
  t.coeff = 1;
  for (auto it = written.rbegin(); it != written.rend(); ++it)
    t.arrows.push_back(q.arrow_index(*it));
  return Relation{{t}};
}

// Commutativity relation lhs - rhs = 0, both sides written products.
inline Relation commutativity_relation(const Quiver& q, const std::vector<std::string>& lhs,
                                       const std::vector<std::string>& rhs) {
  Relation r = monomial_relation(q, lhs);
  Relation s = monomial_relation(q, rhs);
  s.terms[0].coeff = -1;
  r.terms.push_back(s.terms[0]);
  return r;
}

}  // namespace tautilt
