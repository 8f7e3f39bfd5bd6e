#pragma once

// Right modules over a bound quiver algebra as quiver representations:
// one GF(p) space per vertex and, for each arrow a: s -> t, a matrix of
// shape dims(t) x dims(s) acting on column vectors. The action of a path
// applies its arrows in traversal order, so the matrix of [a1, a2] is
// X_{a2} * X_{a1}. P(i) = e_i A has the basis words starting at i.

#include <algorithm>
#include <cassert>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/matrix.hpp"

namespace tautilt {

struct Rep {
  AlgebraPtr A;
  std::vector<int> dims;  // by vertex index
  std::vector<Mat> mats;  // by arrow index

  int total() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
  bool is_zero() const { return total() == 0; }

  std::vector<int> support() const {  // vertex ids with nonzero fiber
    std::vector<int> s;
    for (size_t v = 0; v < dims.size(); ++v)
      if (dims[v] > 0) s.push_back(A->quiver.vertices[v]);
    return s;
  }
};

// A morphism M -> N: one matrix per vertex, shape N.dims[v] x M.dims[v].
using Morphism = std::vector<Mat>;

inline Rep rep_zero(const AlgebraPtr& A) {
  Rep m;
  m.A = A;
  m.dims.assign(A->num_vertices(), 0);
  for (const Arrow& a : A->quiver.arrows) {
    (void)a;
    m.mats.push_back(Mat(A->p, 0, 0));
  }
  return m;
}

inline Rep rep_simple(const AlgebraPtr& A, int vidx) {
  Rep m = rep_zero(A);
  m.dims[vidx] = 1;
  for (int k = 0; k < A->quiver.num_arrows(); ++k) {
    int s = A->quiver.vertex_index(A->quiver.arrows[k].src);
    int t = A->quiver.vertex_index(A->quiver.arrows[k].tgt);
    m.mats[k] = Mat(A->p, m.dims[t], m.dims[s]);
  }
  return m;
}

// Basis words of P(i) grouped by target vertex, ascending basis index.
inline std::vector<std::vector<int>> proj_words(const Algebra& A, int vidx) {
  std::vector<std::vector<int>> by_tgt(A.num_vertices());
  for (int b = 0; b < A.dim(); ++b)
    if (A.basis[b].src == vidx) by_tgt[A.basis[b].tgt].push_back(b);
  return by_tgt;
}

inline Rep rep_projective(const AlgebraPtr& A, int vidx) {
  Rep m;
  m.A = A;
  auto words = proj_words(*A, vidx);
  m.dims.assign(A->num_vertices(), 0);
  for (int v = 0; v < A->num_vertices(); ++v) m.dims[v] = static_cast<int>(words[v].size());
  for (int k = 0; k < A->quiver.num_arrows(); ++k) {
    int s = A->quiver.vertex_index(A->quiver.arrows[k].src);
    int t = A->quiver.vertex_index(A->quiver.arrows[k].tgt);
    Mat X(A->p, m.dims[t], m.dims[s]);
    int ab = A->arrow_basis[k];
    for (int c = 0; c < m.dims[s]; ++c) {
      const LinComb& prod = A->mult[words[s][c]][ab];
      for (const auto& [b, coeff] : prod) {
        auto it = std::find(words[t].begin(), words[t].end(), b);
        assert(it != words[t].end());
        X.at(static_cast<int>(it - words[t].begin()), c) = coeff;
      }
    }
    m.mats.push_back(std::move(X));
  }
  return m;
}

inline Rep rep_direct_sum(const Rep& x, const Rep& y) {
  assert(x.A == y.A);
  Rep m;
  m.A = x.A;
  for (size_t v = 0; v < x.dims.size(); ++v) m.dims.push_back(x.dims[v] + y.dims[v]);
  for (size_t k = 0; k < x.mats.size(); ++k) m.mats.push_back(Mat::direct_sum(x.mats[k], y.mats[k]));
  return m;
}

inline Rep rep_regular(const AlgebraPtr& A) {
  Rep m = rep_zero(A);
  for (int v = 0; v < A->num_vertices(); ++v) m = rep_direct_sum(m, rep_projective(A, v));
  return m;
}

// Matrix of the action of a traversal-order word on column vectors.
inline Mat word_matrix(const Rep& m, const std::vector<int>& word, int src_vidx) {
  const Algebra& A = *m.A;
  Mat cur = Mat::identity(A.p, m.dims[src_vidx]);
  for (int a : word) cur = m.mats[a] * cur;
  return cur;
}

inline bool rep_check_relations(const Rep& m, const std::vector<Relation>& rels) {
  const Algebra& A = *m.A;
  for (const Relation& r : rels) {
    int s = A.quiver.vertex_index(word_src(A.quiver, r.terms[0].arrows));
    int t = A.quiver.vertex_index(word_tgt(A.quiver, r.terms[0].arrows));
    Mat sum(A.p, m.dims[t], m.dims[s]);
    for (const RelTerm& term : r.terms)
      sum = sum + word_matrix(m, term.arrows, s).scaled(reduce_mod(term.coeff, A.p));
    if (!sum.is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hom spaces and exact structure.

inline int morphism_flat_size(const Rep& M, const Rep& N) {
  int n = 0;
  for (size_t v = 0; v < M.dims.size(); ++v) n += M.dims[v] * N.dims[v];
  return n;
}

inline std::vector<int> morphism_offsets(const Rep& M, const Rep& N) {
  std::vector<int> off(M.dims.size() + 1, 0);
  for (size_t v = 0; v < M.dims.size(); ++v) off[v + 1] = off[v] + M.dims[v] * N.dims[v];
  return off;
}

inline std::vector<uint32_t> flatten_morphism(const Rep& M, const Rep& N, const Morphism& f) {
  std::vector<uint32_t> out;
  out.reserve(morphism_flat_size(M, N));
  for (size_t v = 0; v < M.dims.size(); ++v)
    for (uint32_t x : f[v].a) out.push_back(x);
  return out;
}

inline Morphism unflatten_morphism(const Rep& M, const Rep& N, const std::vector<uint32_t>& flat) {
  Morphism f;
  size_t pos = 0;
  for (size_t v = 0; v < M.dims.size(); ++v) {
    Mat m(M.A->p, N.dims[v], M.dims[v]);
    for (auto& x : m.a) x = flat[pos++];
    f.push_back(std::move(m));
  }
  return f;
}

inline Morphism zero_morphism(const Rep& M, const Rep& N) {
  Morphism f;
  for (size_t v = 0; v < M.dims.size(); ++v) f.push_back(Mat(M.A->p, N.dims[v], M.dims[v]));
  return f;
}

inline Morphism identity_morphism(const Rep& M) {
  Morphism f;
  for (size_t v = 0; v < M.dims.size(); ++v) f.push_back(Mat::identity(M.A->p, M.dims[v]));
  return f;
}

// g after f.
inline Morphism morph_compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  for (size_t v = 0; v < f.size(); ++v) h.push_back(g[v] * f[v]);
  return h;
}

inline bool morph_is_zero(const Morphism& f) {
  for (const Mat& m : f)
    if (!m.is_zero()) return false;
  return true;
}

// Basis of Hom(M, N): solutions of phi_t X_a = Y_a phi_s for every arrow.
inline std::vector<Morphism> hom(const Rep& M, const Rep& N) {
  if (M.A != N.A) throw ParseError("hom: modules over different algebras");
  const Algebra& A = *M.A;
  int nvars = morphism_flat_size(M, N);
  if (nvars == 0) return {};
  std::vector<int> off = morphism_offsets(M, N);
  auto var = [&](int v, int r, int c) { return off[v] + r * M.dims[v] + c; };

  int neq = 0;
  for (int k = 0; k < A.quiver.num_arrows(); ++k) {
    int s = A.quiver.vertex_index(A.quiver.arrows[k].src);
    int t = A.quiver.vertex_index(A.quiver.arrows[k].tgt);
    neq += N.dims[t] * M.dims[s];
  }
  Mat sys(A.p, neq, nvars);
  int row = 0;
  for (int k = 0; k < A.quiver.num_arrows(); ++k) {
    int s = A.quiver.vertex_index(A.quiver.arrows[k].src);
    int t = A.quiver.vertex_index(A.quiver.arrows[k].tgt);
    const Mat& XM = M.mats[k];
    const Mat& XN = N.mats[k];
    for (int r = 0; r < N.dims[t]; ++r)
      for (int c = 0; c < M.dims[s]; ++c) {
        for (int j = 0; j < M.dims[t]; ++j)
          sys.at(row, var(t, r, j)) = add_mod(sys.at(row, var(t, r, j)), XM.at(j, c), A.p);
        for (int j = 0; j < N.dims[s]; ++j)
          sys.at(row, var(s, j, c)) =
              sub_mod(sys.at(row, var(s, j, c)), XN.at(r, j), A.p);
        ++row;
      }
  }
  Mat ns = nullspace(sys);
  std::vector<Morphism> basis;
  for (int j = 0; j < ns.cols; ++j) {
    std::vector<uint32_t> flat(nvars);
    for (int i = 0; i < nvars; ++i) flat[i] = ns.at(i, j);
    basis.push_back(unflatten_morphism(M, N, flat));
  }
  return basis;
}

inline int hom_dim(const Rep& M, const Rep& N) { return static_cast<int>(hom(M, N).size()); }

// Subrepresentation spanned by given independent columns per vertex.
inline std::pair<Rep, Morphism> sub_rep_from_bases(const Rep& N, const std::vector<Mat>& bases) {
  const Algebra& A = *N.A;
  Rep S;
  S.A = N.A;
  for (size_t v = 0; v < N.dims.size(); ++v) S.dims.push_back(bases[v].cols);
  for (int k = 0; k < A.quiver.num_arrows(); ++k) {
    int s = A.quiver.vertex_index(A.quiver.arrows[k].src);
    int t = A.quiver.vertex_index(A.quiver.arrows[k].tgt);
    auto sol = solve(bases[t], N.mats[k] * bases[s]);
    if (!sol) throw InvariantError("sub_rep_from_bases: span is not arrow-stable");
    S.mats.push_back(*sol);
  }
  Morphism incl;
  for (size_t v = 0; v < N.dims.size(); ++v) incl.push_back(bases[v]);
  return {std::move(S), std::move(incl)};
}

inline std::pair<Rep, Morphism> kernel_rep(const Rep& M, const Rep& N, const Morphism& f) {
  std::vector<Mat> bases;
  for (size_t v = 0; v < M.dims.size(); ++v) bases.push_back(nullspace(f[v]));
  return sub_rep_from_bases(M, bases);
}

inline std::pair<Rep, Morphism> image_rep(const Rep& M, const Rep& N, const Morphism& f) {
  std::vector<Mat> bases;
  for (size_t v = 0; v < N.dims.size(); ++v) bases.push_back(column_space(f[v]));
  return sub_rep_from_bases(N, bases);
}

// Cokernel of f: M -> N, returned with the projection N -> C.
inline std::pair<Rep, Morphism> cokernel_rep(const Rep& M, const Rep& N, const Morphism& f) {
  const Algebra& A = *N.A;
  std::vector<Mat> proj, sect;
  for (size_t v = 0; v < N.dims.size(); ++v) {
    Mat B = column_space(f[v]);
    // Extend B by unit vectors to a basis of the fiber; the added unit
    // vectors represent the cokernel classes.
    std::vector<int> chosen;
    Mat cur = B;
    for (int i = 0; i < N.dims[v] && cur.cols < N.dims[v]; ++i) {
      Mat unit(A.p, N.dims[v], 1);
      unit.at(i, 0) = 1;
      Mat cand = Mat::hstack(cur, unit);
      if (rank(cand) == cand.cols) {
        cur = cand;
        chosen.push_back(i);
      }
    }
    Mat S(A.p, N.dims[v], static_cast<int>(chosen.size()));
    for (size_t j = 0; j < chosen.size(); ++j) S.at(chosen[j], static_cast<int>(j)) = 1;
    Mat full = Mat::hstack(B, S);
    Mat pr(A.p, static_cast<int>(chosen.size()), N.dims[v]);
    if (full.cols > 0) {
      auto inv = inverse(full);
      if (!inv) throw InvariantError("cokernel: basis extension not invertible");
      for (int r = 0; r < pr.rows; ++r)
        for (int c = 0; c < N.dims[v]; ++c) pr.at(r, c) = inv->at(B.cols + r, c);
    }
    proj.push_back(std::move(pr));
    sect.push_back(std::move(S));
  }
  Rep C;
  C.A = N.A;
  for (size_t v = 0; v < N.dims.size(); ++v) C.dims.push_back(proj[v].rows);
  for (int k = 0; k < A.quiver.num_arrows(); ++k) {
    int s = A.quiver.vertex_index(A.quiver.arrows[k].src);
    int t = A.quiver.vertex_index(A.quiver.arrows[k].tgt);
    C.mats.push_back(proj[t] * (N.mats[k] * sect[s]));
  }
  return {std::move(C), std::move(proj)};
}

// rad M = M * rad A: spanned by the images of all arrow actions.
inline std::pair<Rep, Morphism> rad_subrep(const Rep& M) {
  const Algebra& A = *M.A;
  std::vector<Mat> bases;
  for (size_t v = 0; v < M.dims.size(); ++v) {
    Mat acc(A.p, M.dims[v], 0);
    for (int k = 0; k < A.quiver.num_arrows(); ++k)
      if (A.quiver.vertex_index(A.quiver.arrows[k].tgt) == static_cast<int>(v))
        acc = Mat::hstack(acc, M.mats[k]);
    bases.push_back(column_space(acc));
  }
  return sub_rep_from_bases(M, bases);
}

// ---------------------------------------------------------------------------
// Direct sums of indecomposable projectives with tracked block structure.

struct ProjSum {
  std::vector<int> verts;  // vertex index of each projective summand, in order
  Rep rep;
  std::vector<std::vector<int>> offset;  // [summand][vertex] -> column offset

  int num_summands() const { return static_cast<int>(verts.size()); }
  std::vector<int> mults(int nv) const {
    std::vector<int> m(nv, 0);
    for (int v : verts) ++m[v];
    return m;
  }
};

inline ProjSum make_proj_sum(const AlgebraPtr& A, const std::vector<int>& verts) {
  ProjSum ps;
  ps.verts = verts;
  ps.rep = rep_zero(A);
  for (int v : verts) {
    std::vector<int> off;
    for (int u = 0; u < A->num_vertices(); ++u) off.push_back(ps.rep.dims[u]);
    ps.offset.push_back(off);
    ps.rep = rep_direct_sum(ps.rep, rep_projective(A, v));
  }
  return ps;
}

// Yoneda morphism P(i) -> M sending e_i to the column vector `gen` at vertex i.
inline Morphism yoneda_morphism(const AlgebraPtr& A, int vidx, const Rep& M, const Mat& gen) {
  auto words = proj_words(*A, vidx);
  Rep P = rep_projective(A, vidx);
  Morphism f;
  for (int v = 0; v < A->num_vertices(); ++v) {
    Mat comp(A->p, M.dims[v], P.dims[v]);
    for (size_t c = 0; c < words[v].size(); ++c) {
      Mat img = word_matrix(M, A->basis[words[v][c]].arrows, vidx) * gen;
      for (int r = 0; r < M.dims[v]; ++r) comp.at(r, static_cast<int>(c)) = img.at(r, 0);
    }
    f.push_back(std::move(comp));
  }
  return f;
}

// Projective cover P -> M: one P(i) per top generator.
struct Cover {
  ProjSum P;
  Morphism d;  // P.rep -> M
};

inline Cover proj_cover(const Rep& M) {
  const AlgebraPtr& A = M.A;
  auto [R, rincl] = rad_subrep(M);
  // Top generators: unit vectors extending rad M to a basis, per vertex.
  std::vector<int> verts;
  std::vector<Mat> gens;
  for (int v = 0; v < A->num_vertices(); ++v) {
    Mat cur = rincl[v];
    for (int i = 0; i < M.dims[v] && cur.cols < M.dims[v]; ++i) {
      Mat unit(A->p, M.dims[v], 1);
      unit.at(i, 0) = 1;
      Mat cand = Mat::hstack(cur, unit);
      if (rank(cand) == cand.cols) {
        cur = cand;
        verts.push_back(v);
        gens.push_back(unit);
      }
    }
  }
  Cover c;
  c.P = make_proj_sum(A, verts);
  c.d = zero_morphism(c.P.rep, M);
  for (size_t k = 0; k < verts.size(); ++k) {
    Morphism fk = yoneda_morphism(A, verts[k], M, gens[k]);
    Rep Pk = rep_projective(A, verts[k]);
    for (int v = 0; v < A->num_vertices(); ++v)
      for (int r = 0; r < M.dims[v]; ++r)
        for (int col = 0; col < Pk.dims[v]; ++col)
          c.d[v].at(r, c.P.offset[k][v] + col) = fk[v].at(r, col);
  }
  return c;
}

// Injectives via the opposite algebra: I(i) is the dual of the opposite
// projective at i (transpose all matrices; arrow indices correspond).
inline Rep dual_rep(const Rep& N, const AlgebraPtr& target) {
  Rep m;
  m.A = target;
  m.dims = N.dims;
  for (size_t k = 0; k < N.mats.size(); ++k) m.mats.push_back(N.mats[k].transposed());
  return m;
}

inline Rep rep_injective(const AlgebraPtr& A, int vidx) {
  AlgebraPtr B = opposite(A);
  return dual_rep(rep_projective(B, vidx), A);
}

// Embed a block module into a bigger algebra along a vertex-id embedding
// (arrows are matched by name).
inline Rep embed_rep(const Rep& m, const AlgebraPtr& big) {
  Rep out = rep_zero(big);
  const Quiver& bq = m.A->quiver;
  for (int v = 0; v < bq.num_vertices(); ++v)
    out.dims[big->quiver.vertex_index(bq.vertices[v])] = m.dims[v];
  for (int k = 0; k < big->quiver.num_arrows(); ++k) {
    const Arrow& a = big->quiver.arrows[k];
    int s = big->quiver.vertex_index(a.src);
    int t = big->quiver.vertex_index(a.tgt);
    Mat X(big->p, out.dims[t], out.dims[s]);
    for (int k2 = 0; k2 < bq.num_arrows(); ++k2)
      if (bq.arrows[k2].name == a.name && bq.arrows[k2].src == a.src && bq.arrows[k2].tgt == a.tgt)
        X = m.mats[k2];
    out.mats[k] = std::move(X);
  }
  return out;
}

}  // namespace tautilt
