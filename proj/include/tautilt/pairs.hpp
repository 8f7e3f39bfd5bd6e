#pragma once

// Support tau-tilting pairs (M, P), their mutation, and the exchange quiver.
//
// A pair holds the indecomposable summands of M (basic, sorted by g-vector)
// and the killed vertex set P. Left mutation at a summand X with remainder U
// takes the cokernel Y of a minimal left add(U)-approximation X -> B: the
// replacement is the new summand class of Y, or, when Y = 0, the unique
// vertex missing from supp(U) and the killed set moves in. Mutation at a
// killed vertex (and at a summand whose exchange goes upward) is computed
// through the 2-term duality with the opposite algebra: transpose the
// module part, swap projective summands with killed vertices, left-mutate
// there, and dualize back.

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tautilt/decompose.hpp"
#include "tautilt/homalg.hpp"

namespace tautilt {

struct STTPair {
  AlgebraPtr A;
  std::vector<Rep> summands;               // indecomposable, sorted by g-vector
  std::vector<std::vector<int>> gvecs;     // aligned with summands
  std::set<int> killed;                    // vertex ids

  int size() const { return static_cast<int>(summands.size()) + static_cast<int>(killed.size()); }

  Rep module() const {
    Rep m = rep_zero(A);
    for (const Rep& s : summands) m = rep_direct_sum(m, s);
    return m;
  }
};

inline std::string pair_key(const STTPair& p) {
  std::ostringstream os;
  os << "g";
  for (const auto& g : p.gvecs) {
    os << "[";
    for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    os << "]";
  }
  os << ";k{";
  bool first = true;
  for (int v : p.killed) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "}";
  return os.str();
}

// Assemble and check a pair from indecomposable summands. Throws with the
// violated clause: "not tau-rigid", "support overlap", "wrong summand count".
inline STTPair make_pair_checked(const AlgebraPtr& A, std::vector<Rep> summands,
                                 std::set<int> killed) {
  STTPair p;
  p.A = A;
  Rep m = rep_zero(A);
  for (const Rep& s : summands) m = rep_direct_sum(m, s);
  if (static_cast<int>(summands.size()) + static_cast<int>(killed.size()) != A->num_vertices())
    throw InvariantError("wrong summand count");
  for (int v : killed)
    if (m.dims[A->quiver.vertex_index(v)] != 0) throw InvariantError("support overlap");
  if (!is_tau_rigid(m)) throw InvariantError("not tau-rigid");

  std::vector<std::pair<std::vector<int>, Rep>> tagged;
  for (Rep& s : summands) tagged.emplace_back(g_vector(s), std::move(s));
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (size_t i = 0; i + 1 < tagged.size(); ++i)
    if (tagged[i].first == tagged[i + 1].first)
      throw InvariantError("pair summands share a g-vector");
  for (auto& [g, s] : tagged) {
    p.gvecs.push_back(g);
    p.summands.push_back(std::move(s));
  }
  p.killed = std::move(killed);
  return p;
}

// Public validation: basic-ify an arbitrary module and check the pair.
inline STTPair validate_pair(const Rep& M, const std::set<int>& killed) {
  std::vector<Rep> classes;
  if (!M.is_zero()) classes = distinct_classes(decompose(M));
  return make_pair_checked(M.A, std::move(classes), killed);
}

inline STTPair root_pair(const AlgebraPtr& A) {
  std::vector<Rep> ps;
  for (int v = 0; v < A->num_vertices(); ++v) ps.push_back(rep_projective(A, v));
  return make_pair_checked(A, std::move(ps), {});
}

// X in Fac(U): the universal evaluation U^hom -> X is surjective.
inline bool in_fac(const Rep& X, const Rep& U) {
  if (X.is_zero()) return true;
  if (U.is_zero()) return false;
  std::vector<Morphism> hs = hom(U, X);
  for (size_t v = 0; v < X.dims.size(); ++v) {
    if (X.dims[v] == 0) continue;
    Mat acc(X.A->p, X.dims[v], 0);
    for (const Morphism& f : hs) acc = Mat::hstack(acc, f[v]);
    if (rank(acc) != X.dims[v]) return false;
  }
  return true;
}

namespace detail {

inline int unit_gvec_vertex(const std::vector<int>& g) {
  int v = -1;
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    if (g[i] != 1 || v >= 0) return -1;
    v = static_cast<int>(i);
  }
  return v;
}

}  // namespace detail

// Left mutation at summand `idx`; nullopt when the exchange at that position
// goes upward (the deleted pair completes to something strictly larger).
inline std::optional<STTPair> try_left_mutation(const STTPair& pair, int idx) {
  const AlgebraPtr& A = pair.A;
  const Rep& X = pair.summands[idx];
  std::vector<Rep> U;
  for (size_t i = 0; i < pair.summands.size(); ++i)
    if (static_cast<int>(i) != idx) U.push_back(pair.summands[i]);
  Rep Usum = rep_zero(A);
  for (const Rep& u : U) Usum = rep_direct_sum(Usum, u);

  if (in_fac(X, Usum)) return std::nullopt;  // this position mutates upward

  // Universal map into add(U), then greedy left-minimization: drop columns
  // as long as every hom(X, U_b) still factors through the rest.
  struct Col {
    int target;  // index into U
    Morphism f;
  };
  std::vector<Col> cols;
  std::vector<std::vector<Morphism>> homXU;
  for (size_t a = 0; a < U.size(); ++a) {
    homXU.push_back(hom(X, U[a]));
    for (const Morphism& f : homXU.back()) cols.push_back(Col{static_cast<int>(a), f});
  }
  std::vector<std::vector<std::vector<Morphism>>> homUU(U.size());
  for (size_t a = 0; a < U.size(); ++a) {
    homUU[a].resize(U.size());
    for (size_t b = 0; b < U.size(); ++b) homUU[a][b] = hom(U[a], U[b]);
  }
  auto approximates = [&](const std::vector<bool>& keep) {
    for (size_t b = 0; b < U.size(); ++b) {
      if (homXU[b].empty()) continue;
      std::vector<Morphism> reach;
      for (size_t c = 0; c < cols.size(); ++c) {
        if (!keep[c]) continue;
        for (const Morphism& psi : homUU[cols[c].target][b])
          reach.push_back(morph_compose(psi, cols[c].f));
      }
      if (morphism_span_rank(X, U[b], reach) != static_cast<int>(homXU[b].size())) return false;
    }
    return true;
  };
  std::vector<bool> keep(cols.size(), true);
  for (size_t c = 0; c < cols.size(); ++c) {
    keep[c] = false;
    if (!approximates(keep)) keep[c] = true;
  }

  Rep B = rep_zero(A);
  std::vector<int> chosen;
  for (size_t c = 0; c < cols.size(); ++c)
    if (keep[c]) {
      B = rep_direct_sum(B, U[cols[c].target]);
      chosen.push_back(static_cast<int>(c));
    }
  Morphism f = zero_morphism(X, B);
  {
    std::vector<int> off(A->num_vertices(), 0);
    for (int c : chosen) {
      const Rep& tgt = U[cols[c].target];
      for (int v = 0; v < A->num_vertices(); ++v) {
        for (int r = 0; r < tgt.dims[v]; ++r)
          for (int cc = 0; cc < X.dims[v]; ++cc)
            f[v].at(off[v] + r, cc) = cols[c].f[v].at(r, cc);
        off[v] += tgt.dims[v];
      }
    }
  }

  Rep Y = cokernel_rep(X, B, f).first;

  if (!Y.is_zero()) {
    std::vector<Rep> fresh;
    for (const Rep& cls : distinct_classes(decompose(Y))) {
      bool old = false;
      for (const Rep& u : U)
        if (indec_isomorphic(cls, u)) {
          old = true;
          break;
        }
      if (!old) fresh.push_back(cls);
    }
    if (fresh.size() == 1) {
      std::vector<Rep> ns = U;
      ns.push_back(fresh[0]);
      try {
        return make_pair_checked(A, std::move(ns), pair.killed);
      } catch (const InvariantError&) {
        // fall through to the kill route
      }
    } else if (fresh.size() > 1) {
      return std::nullopt;  // resolved by the dual route or reported there
    }
  }

  // Kill route: the unique vertex outside supp(U) and the killed set.
  std::vector<int> missing;
  for (int v = 0; v < A->num_vertices(); ++v)
    if (Usum.dims[v] == 0 && !pair.killed.count(A->quiver.vertices[v]))
      missing.push_back(A->quiver.vertices[v]);
  if (missing.size() == 1) {
    std::set<int> nk = pair.killed;
    nk.insert(missing[0]);
    try {
      return make_pair_checked(A, U, std::move(nk));
    } catch (const InvariantError&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// The dual pair over the opposite algebra under the 2-term correspondence:
// non-projective summands transpose, projective summands P(v) become killed
// vertices, killed vertices v become the opposite projectives P_B(v).
struct DualPair {
  STTPair dpair;
  std::vector<int> summand_pos;  // original summand index -> dual summand index (-1 for projectives)
  std::map<int, int> killed_pos;  // killed vertex id -> dual summand index
};

inline DualPair dual_pair(const STTPair& pair) {
  const AlgebraPtr& A = pair.A;
  AlgebraPtr B = opposite(A);

  struct Tagged {
    Rep rep;
    std::vector<int> g;
    int from_summand = -1;
    int from_killed = -1;  // vertex id
  };
  std::vector<Tagged> items;
  std::set<int> dual_killed;
  for (size_t i = 0; i < pair.summands.size(); ++i) {
    int v = detail::unit_gvec_vertex(pair.gvecs[i]);
    if (v >= 0) {
      dual_killed.insert(A->quiver.vertices[v]);
    } else {
      Tagged t;
      t.rep = transpose_module(pair.summands[i]);
      t.g = g_vector(t.rep);
      t.from_summand = static_cast<int>(i);
      items.push_back(std::move(t));
    }
  }
  for (int v : pair.killed) {
    Tagged t;
    t.rep = rep_projective(B, B->quiver.vertex_index(v));
    t.g = g_vector(t.rep);
    t.from_killed = v;
    items.push_back(std::move(t));
  }
  std::sort(items.begin(), items.end(), [](const Tagged& x, const Tagged& y) { return x.g < y.g; });

  DualPair out;
  out.dpair.A = B;
  out.dpair.killed = std::move(dual_killed);
  out.summand_pos.assign(pair.summands.size(), -1);
  for (size_t k = 0; k < items.size(); ++k) {
    if (items[k].from_summand >= 0) out.summand_pos[items[k].from_summand] = static_cast<int>(k);
    if (items[k].from_killed >= 0) out.killed_pos[items[k].from_killed] = static_cast<int>(k);
    out.dpair.gvecs.push_back(items[k].g);
    out.dpair.summands.push_back(std::move(items[k].rep));
  }
  if (out.dpair.size() != B->num_vertices())
    throw InvariantError("dual pair has wrong summand count");
  return out;
}

struct MutPos {
  bool at_killed = false;
  int summand_index = -1;  // when !at_killed
  int vertex_id = -1;      // when at_killed
  static MutPos summand(int i) { return MutPos{false, i, -1}; }
  static MutPos killed(int v) { return MutPos{true, -1, v}; }
};

// The unique other completion of the almost complete pair obtained by
// deleting the chosen position.
inline STTPair mutate(const STTPair& pair, const MutPos& pos) {
  const AlgebraPtr& A = pair.A;
  if (!pos.at_killed) {
    if (pos.summand_index < 0 || pos.summand_index >= static_cast<int>(pair.summands.size()))
      throw ParseError("invalid position: no such summand");
    if (auto r = try_left_mutation(pair, pos.summand_index)) return *r;
    // Upward exchange: projective summands always mutate downward, so the
    // dual position is a genuine module summand of the dual pair.
    if (detail::unit_gvec_vertex(pair.gvecs[pos.summand_index]) >= 0)
      throw InvariantError("non-unique completion: projective summand failed to mutate");
  } else if (!pair.killed.count(pos.vertex_id)) {
    throw ParseError("invalid position: vertex not killed");
  }
  DualPair d = dual_pair(pair);
  int dual_idx = pos.at_killed ? d.killed_pos.at(pos.vertex_id) : d.summand_pos[pos.summand_index];
  if (dual_idx < 0) throw InvariantError("dual position not found");
  auto r = try_left_mutation(d.dpair, dual_idx);
  if (!r) throw InvariantError("non-unique completion");
  STTPair back = dual_pair(*r).dpair;
  // full re-validation of the dualized result
  return make_pair_checked(A, std::move(back.summands), std::move(back.killed));
}

// ---------------------------------------------------------------------------
// Exchange quiver by breadth-first search from (Lambda, 0).

struct EQEdge {
  std::string src, tgt;
  int position;  // summand index in the source node's canonical order
};

struct ExchangeQuiver {
  std::map<std::string, STTPair> nodes;
  std::vector<EQEdge> edges;
  std::string root_key, sink_key;
};

inline ExchangeQuiver exchange_quiver(const AlgebraPtr& A, long long node_budget = 1000000,
                                      int threads = 1) {
  ExchangeQuiver q;
  STTPair root = root_pair(A);
  q.root_key = pair_key(root);
  q.nodes.emplace(q.root_key, root);
  std::vector<std::string> layer{q.root_key};

  while (!layer.empty()) {
    // Expand the layer: left mutations at every module summand. Expansion is
    // pure; results are merged in deterministic (node, position) order.
    struct Expansion {
      size_t layer_idx;
      int position;
      STTPair result;
    };
    std::vector<Expansion> results;
    auto expand_range = [&](size_t begin, size_t end, std::vector<Expansion>& out) {
      for (size_t i = begin; i < end; ++i) {
        const STTPair& node = q.nodes.at(layer[i]);
        for (int s = 0; s < static_cast<int>(node.summands.size()); ++s)
          if (auto r = try_left_mutation(node, s)) out.push_back(Expansion{i, s, std::move(*r)});
      }
    };
    int t = std::max(1, threads);
    if (t == 1 || layer.size() == 1) {
      expand_range(0, layer.size(), results);
    } else {
      size_t n = layer.size();
      size_t chunk = (n + t - 1) / t;
      std::vector<std::vector<Expansion>> per_thread(t);
      std::vector<std::thread> workers;
      for (int k = 0; k < t; ++k) {
        size_t b = std::min(n, k * chunk), e = std::min(n, (k + 1) * chunk);
        workers.emplace_back([&, b, e, k] { expand_range(b, e, per_thread[k]); });
      }
      for (auto& w : workers) w.join();
      for (auto& v : per_thread)
        for (auto& x : v) results.push_back(std::move(x));
      std::stable_sort(results.begin(), results.end(), [](const Expansion& x, const Expansion& y) {
        return x.layer_idx != y.layer_idx ? x.layer_idx < y.layer_idx : x.position < y.position;
      });
    }

    std::vector<std::string> next;
    for (Expansion& e : results) {
      std::string k = pair_key(e.result);
      q.edges.push_back(EQEdge{layer[e.layer_idx], k, e.position});
      if (!q.nodes.count(k)) {
        q.nodes.emplace(k, std::move(e.result));
        next.push_back(k);
        if (static_cast<long long>(q.nodes.size()) > node_budget)
          throw BudgetError("node budget " + std::to_string(node_budget) + " exceeded");
      }
    }
    layer = std::move(next);
  }

  std::sort(q.edges.begin(), q.edges.end(), [](const EQEdge& x, const EQEdge& y) {
    return x.src != y.src ? x.src < y.src : (x.tgt != y.tgt ? x.tgt < y.tgt : x.position < y.position);
  });

  std::set<int> all_ids(A->quiver.vertices.begin(), A->quiver.vertices.end());
  for (const auto& [k, node] : q.nodes)
    if (node.summands.empty() && node.killed == all_ids) q.sink_key = k;
  if (q.sink_key.empty()) throw InvariantError("exchange quiver has no sink (0, all)");
  return q;
}

// ---------------------------------------------------------------------------
// Brute-force enumeration of support tau-tilting pairs for small algebras.
//
// Representations are enumerated with 0/1 matrix entries, which reaches
// every isomorphism class when the quiver is a tree (every indecomposable
// is a tree module); the exchange-quiver cross-check guards the uses here.

inline std::vector<STTPair> brute_force_stt(const AlgebraPtr& A, const std::vector<int>& dim_cap) {
  int nv = A->num_vertices();
  if (nv > 4) throw ParseError("brute_force_stt guard: more than 4 vertices");
  if (static_cast<int>(dim_cap.size()) != nv) throw ParseError("brute_force_stt: bad cap size");
  if (!A->relations_exact)
    throw ParseError("brute_force_stt: defining relations unknown for this algebra");

  // Enumerate dimension vectors <= cap.
  std::vector<std::vector<int>> dim_vectors{{}};
  for (int v = 0; v < nv; ++v) {
    if (dim_cap[v] < 0 || dim_cap[v] > 3) throw ParseError("brute_force_stt guard: cap entry");
    std::vector<std::vector<int>> next;
    for (const auto& d : dim_vectors)
      for (int x = 0; x <= dim_cap[v]; ++x) {
        auto e = d;
        e.push_back(x);
        next.push_back(std::move(e));
      }
    dim_vectors = std::move(next);
  }

  std::vector<Rep> classes;
  for (const auto& dims : dim_vectors) {
    int total = 0;
    for (int d : dims) total += d;
    if (total == 0) continue;
    int bits = 0;
    std::vector<std::pair<int, int>> shapes;
    for (const Arrow& a : A->quiver.arrows) {
      int s = A->quiver.vertex_index(a.src), t = A->quiver.vertex_index(a.tgt);
      shapes.emplace_back(dims[t], dims[s]);
      bits += dims[t] * dims[s];
    }
    if (bits > 18) throw ParseError("brute_force_stt guard: too many matrix entries");
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
      Rep m;
      m.A = A;
      m.dims = dims;
      int pos = 0;
      for (auto [r, c] : shapes) {
        Mat x(A->p, r, c);
        for (int i = 0; i < r * c; ++i, ++pos)
          if (mask >> pos & 1) x.a[i] = 1;
        m.mats.push_back(std::move(x));
      }
      if (!rep_check_relations(m, A->relations)) continue;
      for (Rep& part : decompose(m)) {
        bool seen = false;
        for (const Rep& c : classes)
          if (indec_isomorphic(part, c)) {
            seen = true;
            break;
          }
        if (!seen) classes.push_back(std::move(part));
      }
    }
  }

  std::vector<Rep> rigid;
  for (const Rep& c : classes)
    if (is_tau_rigid(c)) rigid.push_back(c);
  if (rigid.size() > 20) throw ParseError("brute_force_stt guard: too many classes");

  std::vector<STTPair> pairs;
  int nc = static_cast<int>(rigid.size());
  for (long long mask = 0; mask < (1LL << nc); ++mask) {
    std::vector<Rep> S;
    for (int i = 0; i < nc; ++i)
      if (mask >> i & 1) S.push_back(rigid[i]);
    if (static_cast<int>(S.size()) > nv) continue;
    Rep sum = rep_zero(A);
    for (const Rep& s : S) sum = rep_direct_sum(sum, s);
    if (!is_tau_rigid(sum)) continue;
    std::vector<int> free_verts;
    for (int v = 0; v < nv; ++v)
      if (sum.dims[v] == 0) free_verts.push_back(A->quiver.vertices[v]);
    int need = nv - static_cast<int>(S.size());
    if (need > static_cast<int>(free_verts.size())) continue;
    // all killed subsets of the right size
    std::vector<int> sel(free_verts.size(), 0);
    std::fill(sel.begin(), sel.begin() + need, 1);
    std::sort(sel.begin(), sel.end());
    do {
      std::set<int> killed;
      for (size_t i = 0; i < sel.size(); ++i)
        if (sel[i]) killed.insert(free_verts[i]);
      if (static_cast<int>(killed.size()) != need) continue;
      pairs.push_back(make_pair_checked(A, S, std::move(killed)));
    } while (std::next_permutation(sel.begin(), sel.end()));
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const STTPair& x, const STTPair& y) { return pair_key(x) < pair_key(y); });
  return pairs;
}

}  // namespace tautilt
