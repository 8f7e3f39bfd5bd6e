#pragma once

// Finite-dimensional bound quiver algebras KQ/I over GF(p), for homogeneous
// admissible ideals. The basis is computed degree by degree: candidates of
// degree d are one-arrow extensions of surviving words of degree d-1, the
// span of all relation consequences of degree d is row-reduced with the
// lexicographically largest word as pivot, and the non-pivot words survive.
// The construction stops at the first empty slice and rejects presentations
// whose slices stay nonempty past the length cap.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tautilt/gfp.hpp"
#include "tautilt/matrix.hpp"
#include "tautilt/quiver.hpp"

namespace tautilt {

// Sparse linear combination of basis indices, sorted by index.
using LinComb = std::vector<std::pair<int, uint32_t>>;

inline void lincomb_add(LinComb& v, int idx, uint32_t c, uint32_t p) {
  if (!c) return;
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const std::pair<int, uint32_t>& e, int i) { return e.first < i; });
  if (it != v.end() && it->first == idx) {
    it->second = add_mod(it->second, c, p);
    if (it->second == 0) v.erase(it);
  } else {
    v.insert(it, {idx, c});
  }
}

struct BasisWord {
  std::vector<int> arrows;  // traversal order; empty for an idempotent e_i
  int src = 0;              // vertex index
  int tgt = 0;              // vertex index
  int len() const { return static_cast<int>(arrows.size()); }
};

struct Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct Algebra {
  Quiver quiver;
  uint32_t p = 32003;
  std::vector<BasisWord> basis;          // degree 0 first (one e_i per vertex)
  std::vector<int> idem;                 // vertex index -> basis index
  std::vector<int> arrow_basis;          // arrow index -> basis index
  std::vector<std::vector<LinComb>> mult;  // [i][j] -> NF of basis_i * basis_j
  std::vector<Relation> relations;       // defining relations, when known
  bool relations_exact = true;           // false for idempotent quotients

  int dim() const { return static_cast<int>(basis.size()); }
  int num_vertices() const { return quiver.num_vertices(); }

  bool is_semisimple() const { return dim() == num_vertices(); }

  // Vertex itinerary of a basis word: src, every intermediate vertex, tgt.
  std::vector<int> itinerary(int b) const {
    const BasisWord& w = basis[b];
    std::vector<int> vs{w.src};
    for (int a : w.arrows) vs.push_back(quiver.vertex_index(quiver.arrows[a].tgt));
    return vs;
  }

  std::vector<std::vector<int>> cartan() const {
    std::vector<std::vector<int>> c(num_vertices(), std::vector<int>(num_vertices(), 0));
    for (const BasisWord& w : basis) ++c[w.src][w.tgt];
    return c;
  }

  std::string word_name(int b) const {
    const BasisWord& w = basis[b];
    if (w.arrows.empty()) return "e" + std::to_string(quiver.vertices[w.src]);
    std::string s;
    // written order: leftmost factor acts last
    for (auto it = w.arrows.rbegin(); it != w.arrows.rend(); ++it) {
      if (!s.empty()) s += "*";
      s += quiver.arrows[*it].name;
    }
    return s;
  }
};

namespace detail {

// Lexicographic comparison of words by their arrow-name sequences.
inline bool word_name_less(const Quiver& q, const std::vector<int>& a, const std::vector<int>& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t k = 0; k < n; ++k) {
    const std::string& x = q.arrows[a[k]].name;
    const std::string& y = q.arrows[b[k]].name;
    if (x != y) return x < y;
  }
  return a.size() < b.size();
}

}  // namespace detail

inline AlgebraPtr build_algebra(const Quiver& quiver, const std::vector<Relation>& relations,
                                uint32_t p = 32003, int length_cap = 0) {
  quiver.validate();
  if (!is_prime(p)) throw ParseError("field characteristic must be prime, got " + std::to_string(p));
  if (length_cap <= 0) length_cap = std::max(4, 2 * quiver.num_vertices());

  auto A = std::make_shared<Algebra>();
  A->quiver = quiver;
  A->p = p;
  A->relations = relations;
  A->relations_exact = true;

  // Validate relations: homogeneous, composable, common endpoints.
  for (const Relation& r : relations) {
    if (r.terms.empty()) throw ParseError("empty relation");
    size_t len = r.terms[0].arrows.size();
    if (len < 2) throw ParseError("inhomogeneous relation: term of length < 2");
    int src = -1, tgt = -1;
    for (const RelTerm& t : r.terms) {
      if (t.arrows.size() != len)
        throw ParseError("inhomogeneous relation: terms of different lengths");
      if (reduce_mod(t.coeff, p) == 0)
        throw ParseError("relation coefficient vanishes mod " + std::to_string(p));
      if (!word_composable(quiver, t.arrows))
        throw ParseError("relation path not composable");
      int s = quiver.vertex_index(word_src(quiver, t.arrows));
      int g = quiver.vertex_index(word_tgt(quiver, t.arrows));
      if (src < 0) {
        src = s;
        tgt = g;
      } else if (s != src || g != tgt) {
        throw ParseError("endpoint mismatch: relation paths disagree on source/target");
      }
    }
  }

  int nv = quiver.num_vertices();
  for (int i = 0; i < nv; ++i) {
    A->basis.push_back(BasisWord{{}, i, i});
    A->idem.push_back(i);
  }

  // ext: (basis word of degree d-1, arrow) -> NF over degree-d basis words.
  std::unordered_map<uint64_t, LinComb> ext;
  auto ext_key = [](int b, int a) { return (static_cast<uint64_t>(b) << 20) | static_cast<uint64_t>(a); };

  std::vector<int> prev_slice(nv);
  for (int i = 0; i < nv; ++i) prev_slice[i] = i;
  std::vector<std::vector<int>> slices{prev_slice};  // slices[d] = basis indices of degree d

  A->arrow_basis.assign(quiver.num_arrows(), -1);

  // Shift an element (LinComb over basis words, all of one degree) along one
  // arrow, using ext tables of already-finished degrees.
  auto shift_arrow = [&](const LinComb& v, int arrow) {
    LinComb out;
    for (const auto& [b, c] : v) {
      auto it = ext.find(ext_key(b, arrow));
      if (it == ext.end()) continue;  // product is zero or not composable
      for (const auto& [nb, nc] : it->second) lincomb_add(out, nb, mul_mod(c, nc, p), p);
    }
    return out;
  };

  for (int d = 1;; ++d) {
    if (slices.back().empty()) break;
    if (d > length_cap)
      throw ParseError("not finite-dimensional: nonzero paths past length cap " +
                       std::to_string(length_cap));

    // Candidates: one-arrow extensions of the previous slice, lex-sorted.
    struct Cand {
      int prefix;  // basis index, degree d-1
      int arrow;
      std::vector<int> word;
      int src, tgt;
    };
    std::vector<Cand> cands;
    for (int b : slices.back()) {
      for (int a = 0; a < quiver.num_arrows(); ++a) {
        if (quiver.vertices[A->basis[b].tgt] != quiver.arrows[a].src) continue;
        Cand c;
        c.prefix = b;
        c.arrow = a;
        c.word = A->basis[b].arrows;
        c.word.push_back(a);
        c.src = A->basis[b].src;
        c.tgt = quiver.vertex_index(quiver.arrows[a].tgt);
        cands.push_back(std::move(c));
      }
    }
    if (cands.empty()) break;
    std::sort(cands.begin(), cands.end(), [&](const Cand& x, const Cand& y) {
      return detail::word_name_less(quiver, x.word, y.word);
    });

    std::map<std::pair<int, int>, int> cand_index;  // (prefix, arrow) -> candidate position
    for (size_t k = 0; k < cands.size(); ++k)
      cand_index[{cands[k].prefix, cands[k].arrow}] = static_cast<int>(k);

    // Relation consequences of degree d: b * rho for surviving b of degree
    // d - len(rho). Right extensions of lower-degree consequences reduce to
    // zero through the ext tables, so these rows generate the whole slice of
    // the ideal.
    std::vector<std::vector<uint32_t>> rows;  // dense over candidate positions
    for (const Relation& r : relations) {
      int len = static_cast<int>(r.terms[0].arrows.size());
      int pd = d - len;
      if (pd < 0 || pd >= static_cast<int>(slices.size())) continue;
      int rel_src = quiver.vertex_index(word_src(quiver, r.terms[0].arrows));
      for (int b : slices[pd]) {
        if (A->basis[b].tgt != rel_src) continue;
        std::vector<uint32_t> row(cands.size(), 0);
        bool nonzero = false;
        for (const RelTerm& t : r.terms) {
          LinComb cur{{b, reduce_mod(t.coeff, p)}};
          for (size_t k = 0; k + 1 < t.arrows.size(); ++k) cur = shift_arrow(cur, t.arrows[k]);
          // last arrow lands in candidate space
          int last = t.arrows.back();
          for (const auto& [w, c] : cur) {
            auto it = cand_index.find({w, last});
            if (it == cand_index.end()) continue;
            row[it->second] = add_mod(row[it->second], c, p);
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }

    // Row-reduce with the lex-largest candidate as pivot: order columns in
    // descending lex order.
    int nc = static_cast<int>(cands.size());
    std::vector<int> col_of_cand(nc);  // candidate position -> matrix column
    for (int k = 0; k < nc; ++k) col_of_cand[k] = nc - 1 - k;
    Mat m(p, static_cast<int>(rows.size()), nc);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int k = 0; k < nc; ++k) m.at(static_cast<int>(i), col_of_cand[k]) = rows[i][k];
    std::vector<int> pivots = rref(m);
    std::vector<bool> dead(nc, false);
    std::vector<int> pivot_row_of(nc, -1);
    for (size_t r = 0; r < pivots.size(); ++r) {
      int k = nc - 1 - pivots[r];  // candidate position
      dead[k] = true;
      pivot_row_of[k] = static_cast<int>(r);
    }

    // Survivors become basis words of degree d (ascending lex order).
    std::vector<int> slice;
    std::vector<int> basis_of_cand(nc, -1);
    for (int k = 0; k < nc; ++k) {
      if (dead[k]) continue;
      int idx = A->dim();
      A->basis.push_back(BasisWord{cands[k].word, cands[k].src, cands[k].tgt});
      basis_of_cand[k] = idx;
      slice.push_back(idx);
      if (d == 1) A->arrow_basis[cands[k].arrow] = idx;
    }

    // ext entries for every candidate of this degree.
    for (int k = 0; k < nc; ++k) {
      LinComb nf;
      if (!dead[k]) {
        nf = {{basis_of_cand[k], 1}};
      } else {
        int r = pivot_row_of[k];
        for (int k2 = 0; k2 < nc; ++k2) {
          if (dead[k2]) continue;
          uint32_t c = m.at(r, col_of_cand[k2]);
          if (c) lincomb_add(nf, basis_of_cand[k2], neg_mod(c, p), p);
        }
      }
      if (!nf.empty()) ext[ext_key(cands[k].prefix, cands[k].arrow)] = std::move(nf);
    }

    slices.push_back(std::move(slice));
  }

  // Multiplication table: fold the right factor's arrows through ext.
  int dim = A->dim();
  A->mult.assign(dim, std::vector<LinComb>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const BasisWord& wj = A->basis[j];
      if (A->basis[i].tgt != wj.src) continue;  // product is zero
      LinComb cur{{i, 1}};
      for (int a : wj.arrows) {
        cur = shift_arrow(cur, a);
        if (cur.empty()) break;
      }
      A->mult[i][j] = std::move(cur);
    }
  }

  return A;
}

// ---------------------------------------------------------------------------
// Derived algebras: quotients by vertex idempotents, blocks, opposites.

namespace detail {

// Rebuild an Algebra from a surviving subset of basis words of `A`, with a
// reduction map sending every A-basis vector to its class. `reduce` maps an
// A-LinComb to a LinComb over surviving indices (in A-numbering).
template <typename Reduce>
inline AlgebraPtr subquotient_algebra(const Algebra& A, const std::vector<int>& survivors,
                                      const std::vector<int>& kept_vertices,
                                      const std::vector<int>& kept_arrows, Reduce reduce,
                                      std::vector<Relation> rels, bool rels_exact) {
  auto B = std::make_shared<Algebra>();
  B->p = A.p;
  B->relations = std::move(rels);
  B->relations_exact = rels_exact;
  for (int v : kept_vertices) B->quiver.vertices.push_back(A.quiver.vertices[v]);
  for (int a : kept_arrows) B->quiver.arrows.push_back(A.quiver.arrows[a]);

  std::vector<int> new_of_old(A.dim(), -1);
  for (size_t k = 0; k < survivors.size(); ++k) new_of_old[survivors[k]] = static_cast<int>(k);
  std::vector<int> arrow_new_of_old(A.quiver.num_arrows(), -1);
  for (size_t k = 0; k < kept_arrows.size(); ++k) arrow_new_of_old[kept_arrows[k]] = static_cast<int>(k);

  B->idem.assign(B->quiver.num_vertices(), -1);
  B->arrow_basis.assign(B->quiver.num_arrows(), -1);
  for (size_t k = 0; k < survivors.size(); ++k) {
    const BasisWord& w = A.basis[survivors[k]];
    BasisWord nw;
    for (int a : w.arrows) {
      int na = arrow_new_of_old[a];
      if (na < 0) throw InvariantError("surviving word uses a dropped arrow");
      nw.arrows.push_back(na);
    }
    nw.src = B->quiver.vertex_index(A.quiver.vertices[w.src]);
    nw.tgt = B->quiver.vertex_index(A.quiver.vertices[w.tgt]);
    B->basis.push_back(nw);
    if (w.arrows.empty()) B->idem[nw.src] = static_cast<int>(k);
    if (w.arrows.size() == 1) B->arrow_basis[nw.arrows[0]] = static_cast<int>(k);
  }
  for (int i : B->idem)
    if (i < 0) throw InvariantError("missing idempotent in derived algebra");

  int dim = static_cast<int>(survivors.size());
  B->mult.assign(dim, std::vector<LinComb>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      LinComb prod = reduce(A.mult[survivors[i]][survivors[j]]);
      LinComb out;
      for (const auto& [b, c] : prod) {
        int nb = new_of_old[b];
        if (nb < 0) throw InvariantError("reduced product leaves the surviving span");
        lincomb_add(out, nb, c, A.p);
      }
      B->mult[i][j] = std::move(out);
    }
  return B;
}

}  // namespace detail

// A/(e): kill every path through a vertex of `e`. Empty e copies A; killing
// every vertex yields the zero algebra (dimension 0).
inline AlgebraPtr quotient_by_idempotent(const AlgebraPtr& Aptr, const std::set<int>& e_vertex_ids) {
  const Algebra& A = *Aptr;
  for (int v : e_vertex_ids)
    if (!A.quiver.has_vertex(v))
      throw ParseError("idempotent set names unknown vertex " + std::to_string(v));

  std::vector<bool> killed_vertex(A.num_vertices(), false);
  for (int v : e_vertex_ids) killed_vertex[A.quiver.vertex_index(v)] = true;

  // Ideal slice: normal forms of all products of basis words meeting at a
  // killed vertex. Row-reduce over the whole basis, pivoting on the
  // lex-largest word of each degree.
  std::vector<LinComb> rows;
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = 0; j < A.dim(); ++j) {
      if (A.basis[i].tgt != A.basis[j].src) continue;
      if (!killed_vertex[A.basis[i].tgt]) continue;
      const LinComb& prod = A.mult[i][j];
      if (!prod.empty()) rows.push_back(prod);
    }
  }

  // Column order: reverse basis order = (degree desc within...) — basis is
  // stored degree-ascending and lex-ascending inside each degree, and rows
  // are homogeneous, so reversing the basis order pivots on the lex-largest
  // word of the right degree.
  int dim = A.dim();
  Mat m(A.p, static_cast<int>(rows.size()), dim);
  for (size_t r = 0; r < rows.size(); ++r)
    for (const auto& [b, c] : rows[r]) m.at(static_cast<int>(r), dim - 1 - b) = c;
  std::vector<int> pivots = rref(m);
  std::vector<bool> dead(dim, false);
  std::vector<int> pivot_row(dim, -1);
  for (size_t r = 0; r < pivots.size(); ++r) {
    int b = dim - 1 - pivots[r];
    dead[b] = true;
    pivot_row[b] = static_cast<int>(r);
  }

  std::vector<int> survivors;
  for (int b = 0; b < dim; ++b)
    if (!dead[b]) survivors.push_back(b);
  for (int b : survivors)
    for (int v : Aptr->itinerary(b))
      if (killed_vertex[v]) throw InvariantError("quotient survivor passes through killed vertex");

  std::vector<int> kept_vertices, kept_arrows;
  for (int v = 0; v < A.num_vertices(); ++v)
    if (!killed_vertex[v]) kept_vertices.push_back(v);
  for (int a = 0; a < A.quiver.num_arrows(); ++a) {
    int ab = A.arrow_basis[a];
    if (ab >= 0 && !dead[ab]) kept_arrows.push_back(a);
  }

  auto reduce = [&](const LinComb& v) {
    LinComb out;
    for (const auto& [b, c] : v) {
      if (!dead[b]) {
        lincomb_add(out, b, c, A.p);
      } else {
        int r = pivot_row[b];
        // pivot = -tail: substitute
        for (int b2 = 0; b2 < dim; ++b2) {
          if (dead[b2]) continue;
          uint32_t t = m.at(r, dim - 1 - b2);
          if (t) lincomb_add(out, b2, mul_mod(c, neg_mod(t, A.p), A.p), A.p);
        }
      }
    }
    return out;
  };

  return detail::subquotient_algebra(A, survivors, kept_vertices, kept_arrows, reduce, {}, false);
}

// Block decomposition: one block per connected component of the quiver,
// ordered by smallest embedded vertex id. Second member of each entry is the
// list of original vertex ids the block occupies.
inline std::vector<std::pair<AlgebraPtr, std::vector<int>>> blocks(const AlgebraPtr& Aptr) {
  const Algebra& A = *Aptr;
  int nv = A.num_vertices();
  std::vector<int> comp(nv, -1);
  int ncomp = 0;
  for (int s = 0; s < nv; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arrow& a : A.quiver.arrows) {
        int x = A.quiver.vertex_index(a.src), y = A.quiver.vertex_index(a.tgt);
        if (x == v && comp[y] < 0) comp[y] = ncomp, stack.push_back(y);
        if (y == v && comp[x] < 0) comp[x] = ncomp, stack.push_back(x);
      }
    }
    ++ncomp;
  }

  std::vector<std::pair<AlgebraPtr, std::vector<int>>> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> kept_vertices, kept_arrows, survivors;
    for (int v = 0; v < nv; ++v)
      if (comp[v] == c) kept_vertices.push_back(v);
    for (int a = 0; a < A.quiver.num_arrows(); ++a)
      if (comp[A.quiver.vertex_index(A.quiver.arrows[a].src)] == c) kept_arrows.push_back(a);
    for (int b = 0; b < A.dim(); ++b)
      if (comp[A.basis[b].src] == c) survivors.push_back(b);
    // A relation's paths share endpoints, so it lies in exactly one block.
    std::vector<int> arrow_new(A.quiver.num_arrows(), -1);
    for (size_t k = 0; k < kept_arrows.size(); ++k) arrow_new[kept_arrows[k]] = static_cast<int>(k);
    std::vector<Relation> block_rels;
    for (const Relation& r : A.relations) {
      if (r.terms.empty()) continue;
      if (comp[A.quiver.vertex_index(A.quiver.arrows[r.terms[0].arrows[0]].src)] != c) continue;
      Relation nr = r;
      for (RelTerm& t : nr.terms)
        for (int& a : t.arrows) a = arrow_new[a];
      block_rels.push_back(std::move(nr));
    }
    auto identity_reduce = [](const LinComb& v) { return v; };
    AlgebraPtr blk = detail::subquotient_algebra(A, survivors, kept_vertices, kept_arrows,
                                                 identity_reduce, std::move(block_rels),
                                                 A.relations_exact);
    std::vector<int> ids;
    for (int v : kept_vertices) ids.push_back(A.quiver.vertices[v]);
    out.emplace_back(blk, ids);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.second.front() < y.second.front();
  });
  return out;
}

// Opposite algebra: same vertices, reversed arrows, reversed basis words at
// the same indices, mult_op(i, j) = mult(j, i). The index map is the
// identity, which is what transpose-based constructions rely on.
inline AlgebraPtr opposite(const AlgebraPtr& Aptr) {
  struct Entry {
    std::weak_ptr<const Algebra> self;  // guards against address reuse
    std::weak_ptr<const Algebra> op;
  };
  static std::mutex cache_mutex;
  static std::map<const Algebra*, Entry> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(Aptr.get());
    if (it != cache.end() && it->second.self.lock() == Aptr)
      if (auto sp = it->second.op.lock()) return sp;
  }

  const Algebra& A = *Aptr;
  auto B = std::make_shared<Algebra>();
  B->p = A.p;
  B->quiver.vertices = A.quiver.vertices;
  for (const Arrow& a : A.quiver.arrows) B->quiver.arrows.push_back(Arrow{a.name, a.tgt, a.src});
  for (const BasisWord& w : A.basis) {
    BasisWord r;
    r.arrows.assign(w.arrows.rbegin(), w.arrows.rend());
    r.src = w.tgt;
    r.tgt = w.src;
    B->basis.push_back(r);
  }
  B->idem = A.idem;
  B->arrow_basis = A.arrow_basis;
  for (const Relation& r : A.relations) {
    Relation nr = r;
    for (RelTerm& t : nr.terms) std::reverse(t.arrows.begin(), t.arrows.end());
    B->relations.push_back(std::move(nr));
  }
  B->relations_exact = A.relations_exact;
  int dim = A.dim();
  B->mult.assign(dim, std::vector<LinComb>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) B->mult[i][j] = A.mult[j][i];

  // Cache both directions so opposite(opposite(A)) returns A itself.
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache[Aptr.get()] = Entry{Aptr, B};
  cache[B.get()] = Entry{B, Aptr};
  return B;
}

// Disjoint union of two presentations; the second quiver's vertex ids are
// shifted past the first's maximum and its arrows renamed on clashes.
inline void disjoint_union(Quiver& q, std::vector<Relation>& rels, const Quiver& q2,
                           const std::vector<Relation>& rels2) {
  int offset = 0;
  for (int v : q.vertices) offset = std::max(offset, v);
  int arrow_offset = q.num_arrows();
  std::set<std::string> names;
  for (const Arrow& a : q.arrows) names.insert(a.name);
  for (int v : q2.vertices) q.vertices.push_back(v + offset);
  for (const Arrow& a : q2.arrows) {
    std::string nm = a.name;
    while (names.count(nm)) nm += "'";
    names.insert(nm);
    q.arrows.push_back(Arrow{nm, a.src + offset, a.tgt + offset});
  }
  for (const Relation& r : rels2) {
    Relation nr = r;
    for (RelTerm& t : nr.terms)
      for (int& a : t.arrows) a += arrow_offset;
    rels.push_back(nr);
  }
}

}  // namespace tautilt
