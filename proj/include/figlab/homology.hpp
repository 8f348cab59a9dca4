#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "figlab/certified.hpp"
#include "figlab/functors.hpp"
#include "figlab/presentation.hpp"

namespace figlab {

/// True when char k does not divide |G_n| = n! |G|^n.
template <class K>
bool semisimple_degree(const WreathContext& ctx, const K& k, int n) {
  const std::uint32_t p = k.characteristic();
  if (p == 0 || n == 0) return true;
  if (static_cast<int>(p) <= n) return false;
  return ctx.group_order() % static_cast<int>(p) != 0;
}

/// The G_n-saturation of im t_{n-1} inside V_n: the degree-n part of the
/// submodule generated in lower degrees.
template <class K>
Subspace<K> lower_span(const Module<K>& V, int n) {
  IncrementalBasis<K> b(V.field(), V.dim(n));
  if (n == 0) return b.subspace();
  const auto& t = V.trans(n - 1);
  std::vector<Vec<K>> seeds;
  for (std::size_t j = 0; j < t.cols(); ++j) seeds.push_back(t.column(j));
  return saturate(V.rep(n), b, seeds);
}

/// H_0(V)_n = V_n / V_{<n}, with zero transitions.
template <class K>
Module<K> h0(const Module<K>& V) {
  typename Module<K>::Data d;
  d.field = V.field();
  d.ctx = V.ctx();
  d.window = V.window();
  d.valid_through = V.valid_through();
  for (int n = 0; n <= V.window(); ++n) d.actions.push_back(quotient_rep(V.rep(n), lower_span(V, n)));
  for (int n = 0; n < V.window(); ++n) d.trans.push_back(Matrix<K>(V.field(), d.actions[n + 1].dim, d.actions[n].dim));
  return Module<K>(std::move(d));
}

/// Largest degree carrying a nonzero space, or -inf.
template <class K>
Degree top_degree(const Module<K>& V) {
  Degree d = Degree::neg_inf();
  for (int n = 0; n <= V.window(); ++n) {
    if (V.dim(n) != 0) d = n;
  }
  return d;
}

/// max{n < valid_through : ker t_n != 0}; torsion at valid_through itself is invisible.
template <class K>
Degree torsion_degree_raw(const Module<K>& V) {
  Degree d = Degree::neg_inf();
  for (int n = 0; n < V.valid_through(); ++n) {
    if (rank(V.trans(n)) < V.dim(n)) d = n;
  }
  return d;
}

template <class K>
Degree generating_degree_raw(const Module<K>& V) {
  Degree d = Degree::neg_inf();
  for (int n = 0; n <= V.valid_through(); ++n) {
    if (lower_span(V, n).codim() != 0) d = n;
  }
  return d;
}

template <class K>
CertifiedValue torsion_degree(const Module<K>& V) {
  return {torsion_degree_raw(V), Status::window_exact, V.window()};
}

template <class K>
CertifiedValue generating_degree(const Module<K>& V) {
  return {generating_degree_raw(V), Status::window_exact, V.window()};
}

enum class CoverPolicy {
  /// M(W) slots with W mapping onto H_0: minimal in semisimple degrees,
  /// saturated lifts elsewhere. Every slot is sharp-filtered.
  filtered,
  /// Projective slots: as filtered in semisimple degrees, kG_n elsewhere.
  projective,
  /// kG_n slots everywhere.
  free,
};

template <class K>
struct Cover {
  FreeSum<K> F;
  std::vector<Matrix<K>> phis;  // W_i -> X_{d_i}
  std::vector<bool> free_slot;
  ModuleMap<K> map;             // F -> X
};

namespace detail {

/// An equivariant section of V_n -> V_n / U, averaged along the coset chain
/// G_0 < G_1 < ... < G_n. Needs char k prime to |G_n|.
template <class K>
Matrix<K> equivariant_section(const WreathContext& ctx, const K& k, const RepMatrices<K>& X,
                              const RepMatrices<K>& Q, const Subspace<K>& U) {
  const int n = X.n;
  Matrix<K> s = quotient_section(U);
  for (int m = 0; m < n; ++m) {
    Matrix<K> acc(k, s.rows(), s.cols());
    for (std::size_t q = 0; q < ctx.num_cosets(m); ++q) {
      const GnElement r = iota_power(ctx, ctx.coset_rep(m, q), n - m - 1);
      const Matrix<K> rq_inv = rep_matrix(ctx, k, Q, ctx.inverse(r));
      const Matrix<K> srq = multiply(s, rq_inv);
      std::vector<Vec<K>> cols;
      for (std::size_t j = 0; j < srq.cols(); ++j) cols.push_back(apply_element(ctx, X, r, srq.column(j)));
      acc = add(acc, Matrix<K>::from_columns(k, s.rows(), cols));
    }
    s = scale(acc, k.inv(k.from_int(static_cast<long>(ctx.num_cosets(m)))));
  }
  return s;
}

}  // namespace detail

/// A cover of X by basic filtered modules, slots in increasing degree, lifts
/// taken from the RREF complement of V_{<n}.
template <class K>
Cover<K> cover(const Module<K>& X, CoverPolicy policy) {
  const auto& ctx = X.ctx();
  const K& k = X.field();
  std::vector<RepMatrices<K>> slots;
  Cover<K> c;
  for (int n = 0; n <= X.window(); ++n) {
    const Subspace<K> U = lower_span(X, n);
    if (U.codim() == 0) continue;
    if (policy != CoverPolicy::free && semisimple_degree(ctx, k, n)) {
      RepMatrices<K> Q = quotient_rep(X.rep(n), U);
      c.phis.push_back(detail::equivariant_section(ctx, k, X.rep(n), Q, U));
      slots.push_back(std::move(Q));
      c.free_slot.push_back(false);
      continue;
    }
    const Matrix<K> lifts = quotient_section(U);
    IncrementalBasis<K> covered(k, X.dim(n));
    for (std::size_t i = 0; i < U.dim(); ++i) covered.add(U.vector(i));
    if (policy == CoverPolicy::filtered) {
      IncrementalBasis<K> W(k, X.dim(n));
      for (std::size_t j = 0; j < lifts.cols(); ++j) {
        Vec<K> v = lifts.column(j);
        if (covered.contains(v)) continue;
        std::vector<Vec<K>> queue{v};
        W.add(v);
        covered.add(v);
        while (!queue.empty()) {
          Vec<K> w = std::move(queue.back());
          queue.pop_back();
          for (const auto& a : X.rep(n).mats) {
            Vec<K> y = mul_vec(a, w);
            if (W.add(y)) {
              covered.add(y);
              queue.push_back(std::move(y));
            }
          }
        }
      }
      const Subspace<K> Ws = W.subspace();
      slots.push_back(subrep(X.rep(n), Ws));
      c.phis.push_back(Ws.inclusion());
      c.free_slot.push_back(false);
    } else {
      // A generic combination of the uncovered lifts generates far more than
      // a single lift, which keeps the number of kG_n slots near minimal.
      std::mt19937_64 rng(0x9e3779b9u + static_cast<unsigned>(n));
      while (true) {
        std::vector<std::size_t> open;
        for (std::size_t j = 0; j < lifts.cols(); ++j) {
          if (!covered.contains(lifts.column(j))) open.push_back(j);
        }
        if (open.empty()) break;
        Vec<K> v = lifts.column(open.front());
        if (open.size() > 1) {
          Vec<K> g(X.dim(n), k.zero());
          for (std::size_t j : open) {
            const auto c = k.from_int(static_cast<long>(1 + rng() % 97));
            const Vec<K> col = lifts.column(j);
            for (std::size_t r = 0; r < g.size(); ++r) g[r] = k.add(g[r], k.mul(c, col[r]));
          }
          if (!covered.contains(g)) v = std::move(g);
        }
        Matrix<K> phi = regular_relation(X, n, v);
        for (std::size_t y = 0; y < phi.cols(); ++y) covered.add(phi.column(y));
        slots.push_back(regular_rep(ctx, k, n));
        c.phis.push_back(std::move(phi));
        c.free_slot.push_back(true);
      }
    }
  }
  c.F = basic_sum(ctx, k, slots, X.window());
  c.map = yoneda_sum(c.F, X, c.phis);
  return c;
}

/// Nakayama cover with kG_n slots; see CoverPolicy::free.
template <class K>
Cover<K> free_cover(const Module<K>& V) {
  return cover(V, CoverPolicy::free);
}

template <class K>
Module<K> syzygy(const Module<K>& V, CoverPolicy policy = CoverPolicy::free) {
  return kernel(cover(V, policy).map).module;
}

template <class K>
struct ResolutionLevel {
  Cover<K> cover;                          // F_j -> X_j, X_0 = V, X_j = K_{j-1}
  std::optional<SubmoduleResult<K>> syz;   // K_j inside F_j
};

/// F_length -> ... -> F_0 -> V built from iterated covers on the window of V.
template <class K>
struct Resolution {
  Module<K> target;
  CoverPolicy policy = CoverPolicy::filtered;
  std::vector<ResolutionLevel<K>> levels;

  int length() const { return static_cast<int>(levels.size()) - 1; }
  const FreeSum<K>& F(int j) const { return levels.at(j).cover.F; }

  /// d_j : F_j -> F_{j-1} for j >= 1.
  ModuleMap<K> differential(int j) const {
    return compose(levels.at(j - 1).syz->inclusion, levels.at(j).cover.map);
  }

  /// Image of slot i of F_j (j >= 1) inside F_{j-1} in degree d_i: W_i -> (F_{j-1})_{d_i}.
  Matrix<K> slot_image(int j, std::size_t i) const {
    const auto& lv = levels.at(j);
    const int d = lv.cover.F.slots[i].n;
    return multiply(levels.at(j - 1).syz->inclusion.mats[d], lv.cover.phis[i]);
  }
};

template <class K>
Resolution<K> resolve(const Module<K>& V, int length, CoverPolicy policy) {
  Resolution<K> r{V, policy, {}};
  Module<K> X = V;
  for (int j = 0; j <= length; ++j) {
    ResolutionLevel<K> lv{cover(X, policy), std::nullopt};
    if (j < length) {
      lv.syz = kernel(lv.cover.map);
      X = lv.syz->module;
    }
    r.levels.push_back(std::move(lv));
  }
  return r;
}

namespace detail {

/// H_0(F_j)_n is the sum of the slots of degree n, sitting at S = [n] (colex
/// index 0) of each block. Returns (slot, offset in F_n) pairs.
template <class K>
std::vector<std::pair<std::size_t, std::size_t>> top_slots(const FreeSum<K>& F, int n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n > F.module.window()) return out;
  for (std::size_t i = 0; i < F.slots.size(); ++i) {
    if (F.slots[i].n == n) out.push_back({i, F.offsets[n][i]});
  }
  return out;
}

template <class K>
RepMatrices<K> top_rep(const WreathContext& ctx, const K& k, const FreeSum<K>& F, int n) {
  RepMatrices<K> r{n, 0, std::vector<Matrix<K>>(ctx.num_gens(n), Matrix<K>(k, 0, 0))};
  for (auto [i, off] : top_slots(F, n)) r = direct_sum_rep(r, F.slots[i]);
  return r;
}

/// H_0(d_j)_n : H_0(F_j)_n -> H_0(F_{j-1})_n.
template <class K>
Matrix<K> h0_differential(const Resolution<K>& R, int j, int n) {
  const K& k = R.target.field();
  const auto rows = top_slots(R.F(j - 1), n);
  const auto cols = top_slots(R.F(j), n);
  std::size_t nr = 0, nc = 0;
  for (auto [i, off] : rows) nr += R.F(j - 1).slots[i].dim;
  for (auto [i, off] : cols) nc += R.F(j).slots[i].dim;
  Matrix<K> out(k, nr, nc);
  std::size_t c0 = 0;
  for (auto [i, off] : cols) {
    const Matrix<K> img = R.slot_image(j, i);
    std::size_t r0 = 0;
    for (auto [i2, off2] : rows) {
      const std::size_t w = R.F(j - 1).slots[i2].dim;
      paste(out, submatrix(img, off2, 0, w, img.cols()), r0, c0);
      r0 += w;
    }
    c0 += img.cols();
  }
  return out;
}

}  // namespace detail

/// H_i(V) for i >= 1 as the homology of H_0(F_.) for a resolution by sharp
/// filtered modules, which are homology acyclic. Transitions are zero.
template <class K>
Module<K> h_i_from(const Resolution<K>& R, int i) {
  if (i < 1 || R.length() < i + 1) throw PreconditionError("h_i: resolution too short");
  const auto& V = R.target;
  const K& k = V.field();
  const auto& ctx = V.ctx();
  typename Module<K>::Data d;
  d.field = k;
  d.ctx = ctx;
  d.window = V.window();
  d.valid_through = V.valid_through();
  for (int n = 0; n <= V.window(); ++n) {
    const RepMatrices<K> top = detail::top_rep(ctx, k, R.F(i), n);
    const Matrix<K> A = detail::h0_differential(R, i, n);
    const Matrix<K> B = detail::h0_differential(R, i + 1, n);
    const Subspace<K> Z = A.rows() == 0 ? Subspace<K>::full(k, top.dim) : kernel_basis(A);
    std::vector<Vec<K>> bcoords;
    for (std::size_t j = 0; j < B.cols(); ++j) bcoords.push_back(Z.coords(B.column(j)));
    const Subspace<K> Bz = Subspace<K>::span(k, Z.dim(), bcoords);
    d.actions.push_back(quotient_rep(subrep(top, Z), Bz));
  }
  for (int n = 0; n < V.window(); ++n) d.trans.push_back(Matrix<K>(k, d.actions[n + 1].dim, d.actions[n].dim));
  return Module<K>(std::move(d));
}

template <class K>
Module<K> h_i(const Module<K>& V, int i) {
  if (i < 0) throw PreconditionError("h_i: negative index");
  if (i == 0) return h0(V);
  return h_i_from(resolve(V, i + 1, CoverPolicy::filtered), i);
}

/// H_0 of the i-th iterated syzygy under filtered covers; agrees with h_i
/// when every degree is semisimple (the covers are then minimal).
template <class K>
Module<K> h_i_via_syzygy(const Module<K>& V, int i) {
  Module<K> X = V;
  for (int j = 0; j < i; ++j) X = syzygy(X, CoverPolicy::filtered);
  return h0(X);
}

template <class K>
CertifiedValue hd(const Module<K>& V, int i) {
  return {top_degree(h_i(V, i)), Status::window_exact, V.window()};
}

/// Basis of Hom_{G_n}(W, V_n), each element a dim V_n x dim W matrix.
template <class K>
std::vector<Matrix<K>> equivariant_hom_basis(const K& k, const RepMatrices<K>& W, const RepMatrices<K>& Vn) {
  const std::size_t dv = Vn.dim, dw = W.dim, unknowns = dv * dw;
  std::vector<Matrix<K>> out;
  if (unknowns == 0) return out;
  IncrementalBasis<K> rows(k, unknowns);
  Vec<K> eq(unknowns, k.zero());
  for (std::size_t g = 0; g < W.mats.size(); ++g) {
    const auto& a = Vn.mats[g];
    const auto& b = W.mats[g];
    // (a X - X b)(r, c) = 0 with X(r, c) at r * dw + c
    for (std::size_t r = 0; r < dv; ++r) {
      for (std::size_t c = 0; c < dw; ++c) {
        for (std::size_t l = 0; l < dv; ++l) {
          if (!k.is_zero(a(r, l))) eq[l * dw + c] = k.add(eq[l * dw + c], a(r, l));
        }
        for (std::size_t l = 0; l < dw; ++l) {
          if (!k.is_zero(b(l, c))) eq[r * dw + l] = k.sub(eq[r * dw + l], b(l, c));
        }
        rows.add(eq);
        std::fill(eq.begin(), eq.end(), k.zero());
      }
    }
  }
  const Subspace<K> sol = kernel_basis(rows.subspace().basis());
  for (std::size_t i = 0; i < sol.dim(); ++i) {
    Matrix<K> X(k, dv, dw);
    const Vec<K> v = sol.vector(i);
    for (std::size_t r = 0; r < dv; ++r) {
      for (std::size_t c = 0; c < dw; ++c) X(r, c) = v[r * dw + c];
    }
    out.push_back(std::move(X));
  }
  return out;
}

/// dim Ext^i(T, V) for i = 0..imax from a projective resolution P of T
/// (length >= imax + 1): Hom(M(W), V) = Hom_{G_d}(W, V_d) slotwise and the
/// coboundary precomposes with d_{j+1} on slot generators.
template <class K>
std::vector<std::size_t> ext_dims(const Resolution<K>& P, const Module<K>& V, int imax) {
  if (P.length() < imax + 1) throw PreconditionError("ext: resolution too short");
  const K& k = V.field();
  const auto& ctx = V.ctx();
  // Hom_j as a list of basis elements, each a list of slot matrices.
  using HomElem = std::vector<Matrix<K>>;
  const auto hom_basis = [&](int j) {
    const auto& F = P.F(j);
    std::vector<HomElem> basis;
    for (std::size_t i = 0; i < F.slots.size(); ++i) {
      const auto& W = F.slots[i];
      if (W.n > V.window()) {
        throw WindowExhausted("ext: generator in degree " + std::to_string(W.n) + " beyond window of V");
      }
      std::vector<Matrix<K>> local;
      if (P.levels[j].cover.free_slot[i]) {
        for (std::size_t b = 0; b < V.dim(W.n); ++b) local.push_back(regular_relation(V, W.n, unit_vec(k, V.dim(W.n), b)));
      } else {
        local = equivariant_hom_basis(k, W, V.rep(W.n));
      }
      for (auto& m : local) {
        HomElem e;
        for (std::size_t i2 = 0; i2 < F.slots.size(); ++i2) {
          e.push_back(i2 == i ? m : Matrix<K>(k, V.dim(F.slots[i2].n), F.slots[i2].dim));
        }
        basis.push_back(std::move(e));
      }
    }
    return basis;
  };
  // Coboundary Hom_j -> flattened Hom_k(slots of F_{j+1}, V).
  const auto coboundary_rank = [&](int j, const std::vector<HomElem>& basis) -> std::size_t {
    const auto& F = P.F(j);
    const auto& F1 = P.F(j + 1);
    std::size_t ambient = 0;
    for (const auto& W : F1.slots) ambient += V.dim(W.n) * W.dim;
    if (ambient == 0 || basis.empty()) return 0;
    std::vector<Matrix<K>> images;
    for (std::size_t i = 0; i < F1.slots.size(); ++i) images.push_back(P.slot_image(j + 1, i));
    IncrementalBasis<K> img(k, ambient);
    for (const auto& phi : basis) {
      Vec<K> flat;
      flat.reserve(ambient);
      for (std::size_t i = 0; i < F1.slots.size(); ++i) {
        const int d = F1.slots[i].n;
        Matrix<K> psi(k, V.dim(d), F1.slots[i].dim);
        for (std::size_t s = 0; s < F.slots.size(); ++s) {
          if (F.slots[s].n > d || phi[s].is_zero()) continue;
          const Matrix<K> Y = submatrix(images[i], F.offsets[d][s], 0, F.offsets[d][s + 1] - F.offsets[d][s],
                                        images[i].cols());
          if (Y.is_zero()) continue;
          psi = add(psi, multiply(yoneda_component(V, F.slots[s], phi[s], d), Y));
        }
        for (std::size_t r = 0; r < psi.rows(); ++r) {
          for (std::size_t c = 0; c < psi.cols(); ++c) flat.push_back(psi(r, c));
        }
      }
      img.add(flat);
    }
    return img.dim();
  };
  (void)ctx;
  std::vector<std::size_t> out;
  std::size_t prev_rank = 0;
  for (int j = 0; j <= imax; ++j) {
    const auto basis = hom_basis(j);
    const std::size_t r = coboundary_rank(j, basis);
    out.push_back(basis.size() - r - prev_rank);
    prev_rank = r;
  }
  return out;
}

/// dim Ext^i(T, V) for i <= imax, resolving T on the window of V. A torsion T
/// has reg(T) <= td(T), so F_j is generated in degrees <= td(T) + j and the
/// window can be cut to td(T) + imax + 1.
template <class K>
std::vector<std::size_t> ext_dims(const Module<K>& T, const Module<K>& V, int imax) {
  int D = std::min(T.window(), V.window());
  if (T.dim(T.window()) == 0 && T.valid_through() == T.window()) {
    const Degree td = top_degree(T);
    D = std::min(D, td.finite() ? td.value() + imax + 1 : 0);
  }
  return ext_dims(resolve(truncate(T, D), imax + 1, CoverPolicy::projective), truncate(V, D), imax);
}

/// dim Ext^i(kG_s, V); the resolution of kG_s needs degrees up to s + i + 1.
template <class K>
std::size_t ext_torsion(int s, const Module<K>& V, int i) {
  if (V.window() < s + i + 1) {
    throw WindowExhausted("ext_torsion: window " + std::to_string(V.window()) + " below " +
                          std::to_string(s + i + 1));
  }
  const auto T = materialize(kG_presentation(V.ctx(), V.field(), s), s + i + 1);
  return ext_dims(T, truncate(V, s + i + 1), i).back();
}

}  // namespace figlab
