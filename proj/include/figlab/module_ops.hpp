#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "figlab/module.hpp"

namespace figlab {

template <class K>
struct SubmoduleResult {
  Module<K> module;
  ModuleMap<K> inclusion;
};

template <class K>
struct QuotientResult {
  Module<K> module;
  ModuleMap<K> projection;
};

namespace detail {

template <class K>
Matrix<K> coords_matrix(const Subspace<K>& target, const Matrix<K>& images, const char* what) {
  Matrix<K> out(target.field(), target.dim(), images.cols());
  for (std::size_t j = 0; j < images.cols(); ++j) {
    const Vec<K> col = images.column(j);
    if (!target.contains(col)) throw Error(std::string(what) + ": subspaces are not stable");
    const Vec<K> c = target.coords(col);
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  return out;
}

}  // namespace detail

/// The submodule carried by degreewise subspaces that are stable under the
/// group actions and the transitions; stability is checked.
template <class K>
SubmoduleResult<K> submodule(const Module<K>& V, const std::vector<Subspace<K>>& U, int vt) {
  const K& k = V.field();
  const int D = static_cast<int>(U.size()) - 1;
  typename Module<K>::Data d;
  d.field = k;
  d.ctx = V.ctx();
  d.window = D;
  d.valid_through = std::min(vt, D);
  for (int n = 0; n <= D; ++n) {
    RepMatrices<K> rep{n, U[n].dim(), {}};
    const Matrix<K> inc = U[n].inclusion();
    for (const auto& a : V.rep(n).mats) {
      rep.mats.push_back(detail::coords_matrix(U[n], multiply(a, inc), "submodule action"));
    }
    d.actions.push_back(std::move(rep));
  }
  for (int n = 0; n < D; ++n) {
    d.trans.push_back(detail::coords_matrix(U[n + 1], multiply(V.trans(n), U[n].inclusion()),
                                            "submodule transition"));
  }
  Module<K> sub(std::move(d));
  ModuleMap<K> inc{sub, V, {}};
  for (int n = 0; n <= D; ++n) inc.mats.push_back(U[n].inclusion());
  return {sub, inc};
}

/// V / U for degreewise stable subspaces U.
template <class K>
QuotientResult<K> quotient(const Module<K>& V, const std::vector<Subspace<K>>& U, int vt) {
  const K& k = V.field();
  const int D = static_cast<int>(U.size()) - 1;
  std::vector<Matrix<K>> q, e;
  for (int n = 0; n <= D; ++n) {
    q.push_back(quotient_map(V.dim(n), U[n]));
    e.push_back(quotient_section(U[n]));
  }
  typename Module<K>::Data d;
  d.field = k;
  d.ctx = V.ctx();
  d.window = D;
  d.valid_through = std::min(vt, D);
  for (int n = 0; n <= D; ++n) {
    RepMatrices<K> rep{n, U[n].codim(), {}};
    for (const auto& a : V.rep(n).mats) rep.mats.push_back(multiply(q[n], multiply(a, e[n])));
    d.actions.push_back(std::move(rep));
  }
  for (int n = 0; n < D; ++n) d.trans.push_back(multiply(q[n + 1], multiply(V.trans(n), e[n])));
  Module<K> quo(std::move(d));
  ModuleMap<K> proj{V, quo, std::move(q)};
  return {quo, proj};
}

template <class K>
SubmoduleResult<K> kernel(const ModuleMap<K>& f) {
  std::vector<Subspace<K>> U;
  for (const auto& m : f.mats) U.push_back(kernel_basis(m));
  return submodule(f.source, U, std::min(f.source.valid_through(), f.target.valid_through()));
}

template <class K>
SubmoduleResult<K> image(const ModuleMap<K>& f) {
  std::vector<Subspace<K>> U;
  for (const auto& m : f.mats) U.push_back(image_basis(m));
  return submodule(f.target, U, std::min(f.source.valid_through(), f.target.valid_through()));
}

template <class K>
QuotientResult<K> cokernel(const ModuleMap<K>& f) {
  std::vector<Subspace<K>> U;
  for (const auto& m : f.mats) U.push_back(image_basis(m));
  return quotient(f.target, U, std::min(f.source.valid_through(), f.target.valid_through()));
}

/// Restriction to degrees 0..D.
template <class K>
Module<K> truncate(const Module<K>& V, int D) {
  if (D > V.window()) throw WindowExhausted("truncate: window " + std::to_string(D) + " beyond " + std::to_string(V.window()));
  typename Module<K>::Data d = V.data();
  d.window = D;
  d.valid_through = std::min(d.valid_through, D);
  d.actions.resize(D + 1);
  d.trans.resize(D);
  return Module<K>(std::move(d));
}

template <class K>
ModuleMap<K> truncate(const ModuleMap<K>& f, int D) {
  ModuleMap<K> g{truncate(f.source, D), truncate(f.target, D), f.mats};
  g.mats.resize(D + 1);
  return g;
}

template <class K>
Module<K> direct_sum(const std::vector<Module<K>>& parts, const K& k, const WreathContext& ctx, int D) {
  typename Module<K>::Data d;
  d.field = k;
  d.ctx = ctx;
  d.window = D;
  d.valid_through = D;
  for (const auto& p : parts) {
    if (p.window() < D) throw WindowExhausted("direct_sum: summand window too small");
    d.valid_through = std::min(d.valid_through, p.valid_through());
  }
  for (int n = 0; n <= D; ++n) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.dim(n);
    check_dim_cap(total, n, "direct_sum");
    RepMatrices<K> rep{n, 0, {}};
    for (int i = 0; i < ctx.num_gens(n); ++i) rep.mats.push_back(Matrix<K>(k, 0, 0));
    for (const auto& p : parts) {
      rep.dim += p.dim(n);
      for (int i = 0; i < ctx.num_gens(n); ++i) rep.mats[i] = block_diag(rep.mats[i], p.action(n, i));
    }
    d.actions.push_back(std::move(rep));
  }
  for (int n = 0; n < D; ++n) {
    Matrix<K> t(k, 0, 0);
    for (const auto& p : parts) t = block_diag(t, p.trans(n));
    d.trans.push_back(std::move(t));
  }
  return Module<K>(std::move(d));
}

template <class K>
Module<K> direct_sum(const Module<K>& a, const Module<K>& b) {
  return direct_sum<K>({a, b}, a.field(), a.ctx(), std::min(a.window(), b.window()));
}

template <class K>
ModuleMap<K> compose(const ModuleMap<K>& g, const ModuleMap<K>& f) {
  ModuleMap<K> h{f.source, g.target, {}};
  const int D = std::min(g.window(), f.window());
  for (int n = 0; n <= D; ++n) h.mats.push_back(multiply(g.mats[n], f.mats[n]));
  return h;
}

template <class K>
ModuleMap<K> identity_map(const Module<K>& V) {
  ModuleMap<K> f{V, V, {}};
  for (int n = 0; n <= V.window(); ++n) f.mats.push_back(Matrix<K>::identity(V.field(), V.dim(n)));
  return f;
}

template <class K>
bool is_zero_map(const ModuleMap<K>& f) {
  for (const auto& m : f.mats) {
    if (!m.is_zero()) return false;
  }
  return true;
}

/// Dimension of the space of module maps V -> W on the common window: the
/// solution space of the equivariance and transition-commutation equations.
template <class K>
std::size_t hom_dim(const Module<K>& V, const Module<K>& W, int D = -1) {
  if (D < 0) D = std::min(V.window(), W.window());
  const K& k = V.field();
  const auto& ctx = V.ctx();
  std::vector<std::size_t> off(D + 2, 0);
  for (int n = 0; n <= D; ++n) off[n + 1] = off[n] + W.dim(n) * V.dim(n);
  const std::size_t unknowns = off[D + 1];
  if (unknowns == 0) return 0;
  // X_n(r, c) lives at off[n] + r * dim V_n + c.
  IncrementalBasis<K> rows(k, unknowns);
  Vec<K> eq(unknowns, k.zero());
  const auto flush = [&] {
    rows.add(eq);
    std::fill(eq.begin(), eq.end(), k.zero());
  };
  for (int n = 0; n <= D; ++n) {
    const std::size_t dv = V.dim(n), dw = W.dim(n);
    for (int i = 0; i < ctx.num_gens(n); ++i) {
      const auto& a = V.action(n, i);
      const auto& b = W.action(n, i);
      // (b X - X a)(r, c) = 0
      for (std::size_t r = 0; r < dw; ++r) {
        for (std::size_t c = 0; c < dv; ++c) {
          for (std::size_t l = 0; l < dw; ++l) {
            if (!k.is_zero(b(r, l))) eq[off[n] + l * dv + c] = k.add(eq[off[n] + l * dv + c], b(r, l));
          }
          for (std::size_t l = 0; l < dv; ++l) {
            if (!k.is_zero(a(l, c))) eq[off[n] + r * dv + l] = k.sub(eq[off[n] + r * dv + l], a(l, c));
          }
          flush();
        }
      }
    }
    if (n < D) {
      const auto& t = V.trans(n);
      const auto& u = W.trans(n);
      const std::size_t dv1 = V.dim(n + 1);
      // (X_{n+1} t - u X_n)(r, c) = 0
      for (std::size_t r = 0; r < W.dim(n + 1); ++r) {
        for (std::size_t c = 0; c < dv; ++c) {
          for (std::size_t l = 0; l < dv1; ++l) {
            if (!k.is_zero(t(l, c))) eq[off[n + 1] + r * dv1 + l] = k.add(eq[off[n + 1] + r * dv1 + l], t(l, c));
          }
          for (std::size_t l = 0; l < dw; ++l) {
            if (!k.is_zero(u(r, l))) eq[off[n] + l * dv + c] = k.sub(eq[off[n] + l * dv + c], u(r, l));
          }
          flush();
        }
      }
    }
  }
  return unknowns - rows.dim();
}

}  // namespace figlab
