#pragma once

// Decomposition into indecomposables by Fitting splitting over End(M).
// Splitting endomorphisms are drawn deterministically: first the End-basis
// elements themselves, then basis elements shifted by their eigenvalues
// (covers bases consisting of units). A piece is certified indecomposable
// by End/rad being one-dimensional, with rad computed by the trace form;
// this needs p to exceed dim End(M) and dim M, enforced as a hard error.

#include <vector>

#include "tautilt/homalg.hpp"
#include "tautilt/representation.hpp"

namespace tautilt {

// Endomorphism as one block-diagonal matrix on the total space.
inline Mat endo_total_matrix(const Rep& M, const Morphism& f) {
  Mat m(M.A->p, 0, 0);
  for (size_t v = 0; v < M.dims.size(); ++v) m = Mat::direct_sum(m, f[v]);
  return m;
}

inline uint32_t mat_trace(const Mat& m, uint32_t p) {
  uint32_t t = 0;
  for (int i = 0; i < m.rows; ++i) t = add_mod(t, m.at(i, i), p);
  return t;
}

// Dimension of rad End(M) via the trace form tr(xy) on End(M).
inline int endo_radical_dim(const Rep& M, const std::vector<Morphism>& endos) {
  uint32_t p = M.A->p;
  if (p <= static_cast<uint32_t>(endos.size()) || p <= static_cast<uint32_t>(M.total()))
    throw FieldError("field too small: p must exceed dim End(M) and dim M");
  int n = static_cast<int>(endos.size());
  std::vector<Mat> mats;
  for (const Morphism& f : endos) mats.push_back(endo_total_matrix(M, f));
  Mat gram(p, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      uint32_t t = mat_trace(mats[i] * mats[j], p);
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  return n - rank(gram);
}

// Minimal polynomial of a square matrix by Krylov linear algebra.
inline std::vector<uint32_t> min_poly(const Mat& F) {
  uint32_t p = F.p;
  int n = F.rows;
  int L = n * n;
  std::vector<Mat> pows{Mat::identity(p, n)};
  for (int d = 1; d <= n; ++d) pows.push_back(pows.back() * F);
  for (int deg = 1; deg <= n; ++deg) {
    // Solve pows[deg] = sum_{k<deg} c_k pows[k].
    Mat sys(p, L, deg);
    Mat rhs(p, L, 1);
    for (int k = 0; k < deg; ++k)
      for (int i = 0; i < L; ++i) sys.at(i, k) = pows[k].a[i];
    for (int i = 0; i < L; ++i) rhs.at(i, 0) = pows[deg].a[i];
    auto sol = solve(sys, rhs);
    if (sol) {
      std::vector<uint32_t> coeffs(deg + 1);  // monic, ascending degree
      coeffs[deg] = 1;
      for (int k = 0; k < deg; ++k) coeffs[k] = neg_mod(sol->at(k, 0), p);
      return coeffs;
    }
  }
  throw InvariantError("min_poly: no dependency found");
}

inline std::vector<uint32_t> poly_roots(const std::vector<uint32_t>& poly, uint32_t p) {
  std::vector<uint32_t> roots;
  for (uint32_t c = 0; c < p; ++c) {
    uint32_t acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
      acc = add_mod(mul_mod(acc, c, p), *it, p);
    if (acc == 0) roots.push_back(c);
  }
  return roots;
}

namespace detail {

// Try a Fitting split along ker(phi^N) + im(phi^N); null if phi is
// nilpotent or invertible.
inline bool fitting_split(const Rep& M, const Morphism& phi, Rep& ker_out, Rep& im_out) {
  int n = M.total();
  uint64_t e = 1;
  while (e < static_cast<uint64_t>(n)) e <<= 1;
  Morphism F;
  for (size_t v = 0; v < M.dims.size(); ++v) F.push_back(mat_pow(phi[v], e));
  int r = 0;
  for (size_t v = 0; v < M.dims.size(); ++v) r += rank(F[v]);
  if (r == 0 || r == n) return false;
  ker_out = kernel_rep(M, M, F).first;
  im_out = image_rep(M, M, F).first;
  return true;
}

inline void decompose_into(const Rep& M, std::vector<Rep>& out) {
  if (M.is_zero()) return;
  std::vector<Morphism> endos = hom(M, M);
  if (endos.size() == 1) {
    out.push_back(M);
    return;
  }
  uint32_t p = M.A->p;
  if (p <= static_cast<uint32_t>(endos.size()) || p <= static_cast<uint32_t>(M.total()))
    throw FieldError("field too small: p must exceed dim End(M) and dim M");

  Rep K, I;
  for (const Morphism& e : endos) {
    if (fitting_split(M, e, K, I)) {
      decompose_into(K, out);
      decompose_into(I, out);
      return;
    }
  }
  // Every basis element is nilpotent or invertible; shift by eigenvalues.
  Morphism id = identity_morphism(M);
  for (const Morphism& e : endos) {
    Mat F = endo_total_matrix(M, e);
    for (uint32_t c : poly_roots(min_poly(F), p)) {
      Morphism shifted;
      for (size_t v = 0; v < M.dims.size(); ++v) shifted.push_back(e[v] - id[v].scaled(c));
      if (fitting_split(M, shifted, K, I)) {
        decompose_into(K, out);
        decompose_into(I, out);
        return;
      }
    }
  }
  if (static_cast<int>(endos.size()) - endo_radical_dim(M, endos) == 1) {
    out.push_back(M);
    return;
  }
  throw InvariantError("decompose: endomorphism algebra is not split local");
}

}  // namespace detail

// Indecomposable summands with multiplicity (order is deterministic).
inline std::vector<Rep> decompose(const Rep& M) {
  std::vector<Rep> out;
  detail::decompose_into(M, out);
  return out;
}

// Isomorphism test for modules already known indecomposable: equal dimension
// vectors plus nonzero hom in both directions.
inline bool indec_isomorphic(const Rep& X, const Rep& Y) {
  if (X.dims != Y.dims) return false;
  return hom_dim(X, Y) >= 1 && hom_dim(Y, X) >= 1;
}

inline bool is_isomorphic(const Rep& M, const Rep& N) {
  if (M.A != N.A) throw ParseError("is_isomorphic: modules over different algebras");
  if (M.dims != N.dims) return false;
  if (M.is_zero()) return true;
  std::vector<Rep> ms = decompose(M);
  std::vector<Rep> ns = decompose(N);
  if (ms.size() != ns.size()) return false;
  std::vector<bool> used(ns.size(), false);
  for (const Rep& x : ms) {
    bool found = false;
    for (size_t j = 0; j < ns.size(); ++j) {
      if (used[j]) continue;
      if (indec_isomorphic(x, ns[j])) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Distinct isomorphism classes among a list of indecomposables.
inline std::vector<Rep> distinct_classes(const std::vector<Rep>& mods) {
  std::vector<Rep> out;
  for (const Rep& m : mods) {
    bool seen = false;
    for (const Rep& o : out)
      if (indec_isomorphic(m, o)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(m);
  }
  return out;
}

// Classical tilting test: pd <= 1, no self-extensions, and as many
// pairwise-nonisomorphic indecomposable summands as the algebra has simples.
inline bool is_tilting(const Rep& T) {
  int n = T.A->num_vertices();
  if (T.is_zero()) return n == 0;
  if (!pd_le_1(T)) return false;
  if (ext1(T, T) != 0) return false;
  std::vector<Rep> classes = distinct_classes(decompose(T));
  return static_cast<int>(classes.size()) == n;
}

}  // namespace tautilt
