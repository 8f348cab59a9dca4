#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "figlab/module_ops.hpp"

namespace figlab {

namespace detail {

inline Morphism iota_power(const WreathContext& ctx, Morphism e, int b) {
  for (int i = 0; i < b; ++i) e = ctx.iota(e);
  return e;
}

template <class K>
RepMatrices<K> restrict_power(const WreathContext& ctx, RepMatrices<K> r, int b) {
  for (int i = 0; i < b; ++i) r = restrict_rep(ctx, r);
  return r;
}

}  // namespace detail

/// Sigma_b V = V o iota^b. Degree n carries V_{n+b} with G_n acting through
/// iota^b; the transition is V(iota^b(std)), which is rho(s) t rather than t
/// alone because iota moves the image of the last point.
template <class K>
Module<K> shift_b(const Module<K>& V, int b) {
  if (b < 0) throw PreconditionError("shift_b: negative shift");
  if (b > V.valid_through() || b > V.window()) {
    throw WindowExhausted("shift by " + std::to_string(b) + " needs more than valid_through " +
                          std::to_string(V.valid_through()));
  }
  const auto& ctx = V.ctx();
  typename Module<K>::Data d;
  d.field = V.field();
  d.ctx = ctx;
  d.window = V.window() - b;
  d.valid_through = V.valid_through() - b;
  for (int n = 0; n <= d.window; ++n) d.actions.push_back(detail::restrict_power(ctx, V.rep(n + b), b));
  for (int n = 0; n < d.window; ++n) {
    d.trans.push_back(morphism_matrix(V, detail::iota_power(ctx, ctx.std_inclusion(n, n + 1), b)));
  }
  return Module<K>(std::move(d));
}

template <class K>
Module<K> shift(const Module<K>& V) {
  return shift_b(V, 1);
}

template <class K>
ModuleMap<K> shift_map(const ModuleMap<K>& f, int b = 1) {
  ModuleMap<K> g{shift_b(f.source, b), shift_b(f.target, b), {}};
  for (int n = 0; n + b <= f.window(); ++n) g.mats.push_back(f.mats[n + b]);
  return g;
}

/// tau_b : V -> Sigma_b V, the transition composite t_{n+b-1} ... t_n in degree n.
template <class K>
ModuleMap<K> tau_b(const Module<K>& V, int b) {
  ModuleMap<K> f{V, shift_b(V, b), {}};
  const int D = f.target.window();
  f.source = truncate(V, D);
  for (int n = 0; n <= D; ++n) f.mats.push_back(trans_composite(V, n, n + b));
  validate_map(f);
  return f;
}

template <class K>
ModuleMap<K> tau_map(const Module<K>& V) {
  return tau_b(V, 1);
}

/// D_b V = coker(tau_b).
template <class K>
Module<K> derivative_b(const Module<K>& V, int b) {
  if (V.window() < b) throw WindowExhausted("derivative needs window at least " + std::to_string(b));
  return cokernel(tau_b(V, b)).module;
}

template <class K>
Module<K> derivative(const Module<K>& V) {
  return derivative_b(V, 1);
}

/// D(f) : DX -> DY in the bases chosen by derivative().
template <class K>
ModuleMap<K> derivative_map(const ModuleMap<K>& f) {
  const auto tx = tau_map(f.source);
  const auto ty = tau_map(f.target);
  ModuleMap<K> g{cokernel(tx).module, cokernel(ty).module, {}};
  const int D = std::min(g.source.window(), g.target.window());
  for (int n = 0; n <= D; ++n) {
    const Matrix<K> q = quotient_map(ty.mats[n].rows(), image_basis(ty.mats[n]));
    const Matrix<K> e = quotient_section(image_basis(tx.mats[n]));
    g.mats.push_back(multiply(q, multiply(f.mats[n + 1], e)));
  }
  return g;
}

/// D^a V: a-fold iterate of D (not the same as D_a).
template <class K>
Module<K> derivative_iter(Module<K> V, int a) {
  for (int i = 0; i < a; ++i) V = derivative(V);
  return V;
}

/// L(V)_0 = 0 and L(V)_{m+1} = Ind V_m, in the coset basis r_q (x) v of
/// induce_rep. The transition sends r_q (x) v to (iota(r_q) o s_m) (x) t_m v,
/// re-decomposed into coset form; this is the standard inclusion acting on
/// the left of kC_+ (x) V.
template <class K>
Module<K> induce_L(const Module<K>& V) {
  const auto& ctx = V.ctx();
  const K& k = V.field();
  typename Module<K>::Data d;
  d.field = k;
  d.ctx = ctx;
  d.window = V.window() + 1;
  d.valid_through = V.valid_through() + 1;
  d.actions.push_back(trivial_rep(ctx, k, 0, 0));
  for (int m = 0; m <= V.window(); ++m) {
    check_dim_cap(ctx.num_cosets(m) * V.dim(m), m + 1, "induce_L");
    d.actions.push_back(induce_rep(ctx, k, V.rep(m)));
  }
  d.trans.push_back(Matrix<K>(k, d.actions[1].dim, 0));
  for (int m = 1; m < d.window; ++m) {
    // L_m = Ind V_{m-1} -> L_{m+1} = Ind V_m
    const std::size_t da = V.dim(m - 1), db = V.dim(m);
    Matrix<K> t(k, d.actions[m + 1].dim, d.actions[m].dim);
    const GnElement s = ctx.generator(m + 1, ctx.s_index(m - 1));
    for (std::size_t q = 0; q < ctx.num_cosets(m - 1); ++q) {
      const GnElement y = ctx.compose(ctx.iota(ctx.coset_rep(m - 1, q)), s);
      auto [q2, h] = ctx.coset_decompose(y);
      paste(t, multiply(rep_matrix(ctx, k, V.rep(m), h), V.trans(m - 1)), q2 * db, q * da);
    }
    d.trans.push_back(std::move(t));
  }
  return Module<K>(std::move(d));
}

template <class K>
ModuleMap<K> induce_L_map(const ModuleMap<K>& f) {
  ModuleMap<K> g{induce_L(f.source), induce_L(f.target), {}};
  const auto& ctx = f.source.ctx();
  const K& k = f.source.field();
  g.mats.push_back(Matrix<K>(k, 0, 0));
  for (int m = 0; m <= f.window(); ++m) {
    Matrix<K> a(k, 0, 0);
    for (std::size_t q = 0; q < ctx.num_cosets(m); ++q) a = block_diag(a, f.mats[m]);
    g.mats.push_back(std::move(a));
  }
  return g;
}

/// R(V)_n = Hom(Sigma M(n), V). Sigma M(n) is free on the generators
/// y_q = r_q^{-1} in G_n (degree n-1, q < n|G|) and the standard inclusion
/// [n] -> [n+1] (degree n), so R(V)_n = V_{n-1}^{n|G|} (+) V_n with the phi_q
/// blocks first. No constraint solving is needed, so the window and
/// valid_through of V carry over unchanged.
template <class K>
class Coinduction {
 public:
  explicit Coinduction(const Module<K>& V) : V_(V), ctx_(V.ctx()), k_(V.field()) {}

  std::size_t num_free(int n) const { return n == 0 ? 0 : ctx_.num_cosets(n - 1); }
  std::size_t block_dim(int n) const { return n == 0 ? 0 : V_.dim(n - 1); }
  std::size_t dim(int n) const { return num_free(n) * block_dim(n) + V_.dim(n); }

  /// For z : [n] -> [a+1] returns (block, alpha) with Phi(z) = V(alpha) phi_block;
  /// block == num_free(n) stands for the degree-n generator.
  std::pair<std::size_t, Morphism> locate(int n, const Morphism& z) const {
    const int a = z.target - 1;
    for (int x = 0; x < n; ++x) {
      if (z.f[x] != a) continue;
      const std::size_t q =
          static_cast<std::size_t>(x) * ctx_.group_order() + ctx_.group().inverse[z.g[x]];
      Morphism w = ctx_.compose(z, ctx_.coset_rep(n - 1, q));
      w.f.pop_back();
      w.g.pop_back();
      w.target = a;
      return {q, w};
    }
    Morphism w = z;
    w.target = a;
    return {num_free(n), w};
  }

  /// The matrix R(V)_n -> R(V)_m of precomposition with beta : [n] -> [m].
  Matrix<K> induced(const Morphism& beta) const {
    const int n = beta.source(), m = beta.target;
    Matrix<K> out(k_, dim(m), dim(n));
    const auto add_block = [&](std::size_t row0, const Morphism& z) {
      auto [blk, alpha] = locate(n, z);
      const std::size_t col0 = blk * block_dim(n);
      paste(out, morphism_matrix(V_, alpha), row0, col0);
    };
    for (std::size_t q = 0; q < num_free(m); ++q) {
      add_block(q * block_dim(m), ctx_.compose(ctx_.inverse(ctx_.coset_rep(m - 1, q)), beta));
    }
    add_block(num_free(m) * block_dim(m), ctx_.compose(ctx_.std_inclusion(m, m + 1), beta));
    return out;
  }

  Module<K> module() const {
    typename Module<K>::Data d;
    d.field = k_;
    d.ctx = ctx_;
    d.window = V_.window();
    d.valid_through = V_.valid_through();
    for (int n = 0; n <= d.window; ++n) {
      check_dim_cap(dim(n), n, "coinduce_R");
      RepMatrices<K> rep{n, dim(n), {}};
      for (int i = 0; i < ctx_.num_gens(n); ++i) rep.mats.push_back(induced(ctx_.generator(n, i)));
      d.actions.push_back(std::move(rep));
    }
    for (int n = 0; n < d.window; ++n) d.trans.push_back(induced(ctx_.std_inclusion(n, n + 1)));
    return Module<K>(std::move(d));
  }

 private:
  Module<K> V_;
  WreathContext ctx_;
  K k_;
};

template <class K>
Module<K> coinduce_R(const Module<K>& V) {
  if (V.window() < 1) throw WindowExhausted("coinduce_R needs window at least 1");
  return Coinduction<K>(V).module();
}

template <class K>
ModuleMap<K> coinduce_R_map(const ModuleMap<K>& f) {
  ModuleMap<K> g{coinduce_R(f.source), coinduce_R(f.target), {}};
  const auto& ctx = f.source.ctx();
  const K& k = f.source.field();
  for (int n = 0; n <= f.window(); ++n) {
    Matrix<K> a(k, 0, 0);
    if (n > 0) {
      for (std::size_t q = 0; q < ctx.num_cosets(n - 1); ++q) a = block_diag(a, f.mats[n - 1]);
    }
    g.mats.push_back(block_diag(a, f.mats[n]));
  }
  return g;
}

}  // namespace figlab
