#pragma once

// Homological toolkit built on minimal projective presentations:
// tau-rigidity via surjectivity of Hom(P0, X) -> Hom(P1, X), Ext^1 through
// the syzygy, projective dimension <= 1, faithfulness, g-vectors, and the
// transpose/translate constructions over the opposite algebra.

#include <vector>

#include "tautilt/representation.hpp"

namespace tautilt {

struct Presentation {
  ProjSum P0, P1;
  Morphism d0;     // P0.rep -> M, a projective cover
  Morphism d1;     // P1.rep -> P0.rep, covering ker d0
  Rep K;           // ker d0
  Morphism kincl;  // K -> P0.rep
};

inline Presentation min_proj_presentation(const Rep& M) {
  const AlgebraPtr& A = M.A;
  Presentation pr;
  if (M.is_zero()) {
    pr.P0 = make_proj_sum(A, {});
    pr.P1 = make_proj_sum(A, {});
    pr.d0 = zero_morphism(pr.P0.rep, M);
    pr.d1 = zero_morphism(pr.P1.rep, pr.P0.rep);
    pr.K = rep_zero(A);
    pr.kincl = zero_morphism(pr.K, pr.P0.rep);
    return pr;
  }
  Cover c0 = proj_cover(M);
  pr.P0 = std::move(c0.P);
  pr.d0 = std::move(c0.d);
  auto [K, kincl] = kernel_rep(pr.P0.rep, M, pr.d0);
  pr.K = std::move(K);
  pr.kincl = std::move(kincl);
  if (pr.K.is_zero()) {
    pr.P1 = make_proj_sum(A, {});
    pr.d1 = zero_morphism(pr.P1.rep, pr.P0.rep);
  } else {
    Cover c1 = proj_cover(pr.K);
    pr.P1 = std::move(c1.P);
    pr.d1 = morph_compose(pr.kincl, c1.d);
  }
  return pr;
}

// g(M) = [P0] - [P1], indexed by vertex.
inline std::vector<int> g_vector(const Rep& M) {
  Presentation pr = min_proj_presentation(M);
  int nv = M.A->num_vertices();
  std::vector<int> g(nv, 0);
  for (int v : pr.P0.verts) ++g[v];
  for (int v : pr.P1.verts) --g[v];
  return g;
}

// Rank of the span of a list of morphisms (as vectors in the flat space).
inline int morphism_span_rank(const Rep& M, const Rep& N, const std::vector<Morphism>& fs) {
  if (fs.empty()) return 0;
  int L = morphism_flat_size(M, N);
  Mat m(M.A->p, static_cast<int>(fs.size()), L);
  for (size_t i = 0; i < fs.size(); ++i) {
    std::vector<uint32_t> flat = flatten_morphism(M, N, fs[i]);
    for (int j = 0; j < L; ++j) m.at(static_cast<int>(i), j) = flat[j];
  }
  return rank(m);
}

// Presentation-based tau-rigidity test: X is tau-rigid iff precomposition with d1
// maps Hom(P0, X) onto Hom(P1, X).
inline bool is_tau_rigid(const Rep& X) {
  if (X.is_zero()) return true;
  Presentation pr = min_proj_presentation(X);
  if (pr.P1.num_summands() == 0) return true;  // projective
  std::vector<Morphism> h1 = hom(pr.P1.rep, X);
  if (h1.empty()) return true;
  std::vector<Morphism> h0 = hom(pr.P0.rep, X);
  std::vector<Morphism> images;
  for (const Morphism& f : h0) images.push_back(morph_compose(f, pr.d1));
  return morphism_span_rank(pr.P1.rep, X, images) == static_cast<int>(h1.size());
}

// dim Ext^1(M, N) = dim Hom(K, N) - rank(Hom(P0, N) -> Hom(K, N)) for the
// syzygy K of a minimal presentation (Ext^1(P0, -) = 0).
inline int ext1(const Rep& M, const Rep& N) {
  if (M.A != N.A) throw ParseError("ext1: modules over different algebras");
  if (M.is_zero() || N.is_zero()) return 0;
  Presentation pr = min_proj_presentation(M);
  if (pr.K.is_zero()) return 0;
  std::vector<Morphism> hK = hom(pr.K, N);
  if (hK.empty()) return 0;
  std::vector<Morphism> h0 = hom(pr.P0.rep, N);
  std::vector<Morphism> restricted;
  for (const Morphism& f : h0) restricted.push_back(morph_compose(f, pr.kincl));
  return static_cast<int>(hK.size()) - morphism_span_rank(pr.K, N, restricted);
}

inline bool pd_le_1(const Rep& M) {
  if (M.is_zero()) return true;
  Presentation pr = min_proj_presentation(M);
  for (size_t v = 0; v < pr.P1.rep.dims.size(); ++v)
    if (rank(pr.d1[v]) != pr.P1.rep.dims[v]) return false;
  return true;
}

inline bool is_injective_module(const Rep& M) {
  for (int v = 0; v < M.A->num_vertices(); ++v)
    if (ext1(rep_simple(M.A, v), M) != 0) return false;
  return true;
}

// Faithful = zero annihilator: no algebra element acts as zero on M.
inline bool is_faithful(const Rep& M) {
  const Algebra& A = *M.A;
  if (A.dim() == 0) return true;
  // Column b = flattened action of basis word b, in its (src, tgt) slot.
  std::vector<int> slot_off;
  int L = 0;
  for (int b = 0; b < A.dim(); ++b) {
    slot_off.push_back(L);
    L += M.dims[A.basis[b].src] * M.dims[A.basis[b].tgt];
  }
  if (L == 0) return false;  // every word acts as zero on a too-small module
  Mat m(A.p, L, A.dim());
  for (int b = 0; b < A.dim(); ++b) {
    Mat act = word_matrix(M, A.basis[b].arrows, A.basis[b].src);
    int off = slot_off[b];
    for (size_t i = 0; i < act.a.size(); ++i) m.at(off + static_cast<int>(i), b) = act.a[i];
  }
  return rank(m) == A.dim();
}

// ---------------------------------------------------------------------------
// Transpose and Auslander–Reiten translate via the opposite algebra.

// Morphism P_B(j) -> P_B(i) given by left multiplication with an element
// y of e_i B e_j (a combination of B-basis words with src i, tgt j).
inline Morphism left_mult_morphism(const AlgebraPtr& B, const LinComb& y, int j, int i) {
  auto words_j = proj_words(*B, j);
  auto words_i = proj_words(*B, i);
  Rep Pj = rep_projective(B, j);
  Rep Pi = rep_projective(B, i);
  Morphism f;
  for (int v = 0; v < B->num_vertices(); ++v) {
    Mat comp(B->p, Pi.dims[v], Pj.dims[v]);
    for (size_t c = 0; c < words_j[v].size(); ++c) {
      for (const auto& [yw, yc] : y) {
        const LinComb& prod = B->mult[yw][words_j[v][c]];
        for (const auto& [b, coeff] : prod) {
          auto it = std::find(words_i[v].begin(), words_i[v].end(), b);
          if (it == words_i[v].end()) throw InvariantError("left_mult_morphism: stray product");
          int r = static_cast<int>(it - words_i[v].begin());
          comp.at(r, static_cast<int>(c)) =
              add_mod(comp.at(r, static_cast<int>(c)), mul_mod(yc, coeff, B->p), B->p);
        }
      }
    }
    f.push_back(std::move(comp));
  }
  return f;
}

// Extract d1's components as algebra elements: entry (r, c) lies in
// e_{j_r} A e_{i_c} where j_r runs over P0 summands and i_c over P1 summands.
inline std::vector<std::vector<LinComb>> presentation_matrix(const Presentation& pr,
                                                             const AlgebraPtr& A) {
  int R = pr.P0.num_summands(), C = pr.P1.num_summands();
  std::vector<std::vector<LinComb>> D(R, std::vector<LinComb>(C));
  for (int c = 0; c < C; ++c) {
    int ic = pr.P1.verts[c];
    auto words_c = proj_words(*A, ic);
    // column of the trivial word e_{ic} inside summand c at vertex ic
    int epos = -1;
    for (size_t k = 0; k < words_c[ic].size(); ++k)
      if (words_c[ic][k] == A->idem[ic]) epos = static_cast<int>(k);
    if (epos < 0) throw InvariantError("presentation_matrix: missing idempotent word");
    int col = pr.P1.offset[c][ic] + epos;
    for (int r = 0; r < R; ++r) {
      int jr = pr.P0.verts[r];
      auto words_r = proj_words(*A, jr);
      for (size_t k = 0; k < words_r[ic].size(); ++k) {
        uint32_t coeff = pr.d1[ic].at(pr.P0.offset[r][ic] + static_cast<int>(k), col);
        if (coeff) lincomb_add(D[r][c], words_r[ic][k], coeff, A->p);
      }
    }
  }
  return D;
}

// Tr M over the opposite algebra: cokernel of the transposed presentation.
// Projective summands of M contribute nothing.
inline Rep transpose_module(const Rep& M) {
  const AlgebraPtr& A = M.A;
  AlgebraPtr B = opposite(A);
  Presentation pr = min_proj_presentation(M);
  if (pr.P1.num_summands() == 0) return rep_zero(B);
  std::vector<std::vector<LinComb>> D = presentation_matrix(pr, A);
  ProjSum Q0 = make_proj_sum(B, pr.P0.verts);  // source of the transposed map
  ProjSum Q1 = make_proj_sum(B, pr.P1.verts);
  Morphism G = zero_morphism(Q0.rep, Q1.rep);
  for (int r = 0; r < pr.P0.num_summands(); ++r)
    for (int c = 0; c < pr.P1.num_summands(); ++c) {
      if (D[r][c].empty()) continue;
      // In the opposite algebra the element keeps its basis index.
      Morphism comp = left_mult_morphism(B, D[r][c], pr.P0.verts[r], pr.P1.verts[c]);
      Rep Pj = rep_projective(B, pr.P0.verts[r]);
      Rep Pi = rep_projective(B, pr.P1.verts[c]);
      for (int v = 0; v < B->num_vertices(); ++v)
        for (int i = 0; i < Pi.dims[v]; ++i)
          for (int j = 0; j < Pj.dims[v]; ++j)
            G[v].at(Q1.offset[c][v] + i, Q0.offset[r][v] + j) =
                add_mod(G[v].at(Q1.offset[c][v] + i, Q0.offset[r][v] + j), comp[v].at(i, j), B->p);
    }
  return cokernel_rep(Q0.rep, Q1.rep, G).first;
}

// tau M = D Tr M; zero for projectives.
inline Rep tau_translate(const Rep& M) {
  Rep tr = transpose_module(M);
  return dual_rep(tr, M.A);
}

}  // namespace tautilt
