#pragma once

#include <cstddef>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "figlab/wreath.hpp"

namespace figlab {

/// A windowed FI_G-module: degrees 0..window with one G_n-representation per
/// degree and transition maps t_n : V_n -> V_{n+1} for n < window. Data is
/// exact for the intended module through valid_through. Immutable, cheap to copy.
template <class K>
class Module {
 public:
  struct Data {
    K field{};
    WreathContext ctx;
    int window = 0;
    int valid_through = 0;
    std::vector<RepMatrices<K>> actions;
    std::vector<Matrix<K>> trans;
  };

  Module() : d_(std::make_shared<const Data>()) {}
  explicit Module(Data d) {
    if (d.window < 0) throw WindowExhausted("module window would be negative");
    if (static_cast<int>(d.actions.size()) != d.window + 1 || static_cast<int>(d.trans.size()) != d.window) {
      throw DimensionMismatch("module data does not match window " + std::to_string(d.window));
    }
    if (d.valid_through > d.window) d.valid_through = d.window;
    for (int n = 0; n <= d.window; ++n) check_dim_cap(d.actions[n].dim, n, "module");
    d_ = std::make_shared<const Data>(std::move(d));
  }

  const K& field() const { return d_->field; }
  const WreathContext& ctx() const { return d_->ctx; }
  int window() const { return d_->window; }
  int valid_through() const { return d_->valid_through; }
  std::size_t dim(int n) const { return d_->actions.at(n).dim; }
  const RepMatrices<K>& rep(int n) const { return d_->actions.at(n); }
  const Matrix<K>& action(int n, int gen) const { return d_->actions.at(n).mats.at(gen); }
  const Matrix<K>& trans(int n) const { return d_->trans.at(n); }
  const Data& data() const { return *d_; }

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (int n = 0; n <= window(); ++n) out.push_back(dim(n));
    return out;
  }

  bool is_zero() const {
    for (int n = 0; n <= window(); ++n) {
      if (dim(n) != 0) return false;
    }
    return true;
  }

  Module with_valid_through(int vt) const {
    Data d = *d_;
    d.valid_through = std::min(vt, d.window);
    return Module(std::move(d));
  }

 private:
  std::shared_ptr<const Data> d_;
};

/// Degreewise linear maps source_n -> target_n for n <= window.
template <class K>
struct ModuleMap {
  Module<K> source;
  Module<K> target;
  std::vector<Matrix<K>> mats;

  int window() const { return static_cast<int>(mats.size()) - 1; }
};

template <class K>
Module<K> zero_module(const K& k, const WreathContext& ctx, int window) {
  typename Module<K>::Data d;
  d.field = k;
  d.ctx = ctx;
  d.window = window;
  d.valid_through = window;
  for (int n = 0; n <= window; ++n) d.actions.push_back(trivial_rep(ctx, k, n, 0));
  for (int n = 0; n < window; ++n) d.trans.push_back(Matrix<K>(k, 0, 0));
  return Module<K>(std::move(d));
}

/// Composite t_{m-1} o ... o t_n as a matrix V_n -> V_m.
template <class K>
Matrix<K> trans_composite(const Module<K>& v, int n, int m) {
  if (m > v.window()) {
    throw WindowExhausted("transition composite to degree " + std::to_string(m) + " beyond window " +
                          std::to_string(v.window()));
  }
  Matrix<K> c = Matrix<K>::identity(v.field(), v.dim(n));
  for (int d = n; d < m; ++d) c = multiply(v.trans(d), c);
  return c;
}

/// The induced map of (f, g) applied to v: rho_m(sigma_S) t_{m-1}..t_n rho_n(h) v.
template <class K>
Vec<K> evaluate_action(const Module<K>& V, const Morphism& e, const Vec<K>& v) {
  const int n = e.source(), m = e.target;
  if (m > V.window()) {
    throw WindowExhausted("evaluate_action: target degree " + std::to_string(m) + " beyond window " +
                          std::to_string(V.window()));
  }
  const auto& ctx = V.ctx();
  const MorphismNF nf = ctx.normal_form(e);
  Vec<K> w = apply_element(ctx, V.rep(n), nf.h, v);
  for (int d = n; d < m; ++d) w = mul_vec(V.trans(d), w);
  return apply_word(V.rep(m), ctx.coset_perm_word(nf.subset, m).letters, w);
}

/// Matrix of the induced map of e : [n] -> [m].
template <class K>
Matrix<K> morphism_matrix(const Module<K>& V, const Morphism& e) {
  std::vector<Vec<K>> cols;
  for (std::size_t j = 0; j < V.dim(e.source()); ++j) {
    cols.push_back(evaluate_action(V, e, unit_vec(V.field(), V.dim(e.source()), j)));
  }
  return Matrix<K>::from_columns(V.field(), V.dim(e.target), cols);
}

/// Checks equivariance, the exchange relation and slot triviality, plus the
/// relations of every degree's representation.
template <class K>
void validate_module(const Module<K>& V) {
  const auto& ctx = V.ctx();
  const K& k = V.field();
  const auto fail = [](int n, const std::string& rel, const std::string& witness) {
    throw ValidationError("degree " + std::to_string(n) + ", " + rel + ": " + witness);
  };
  for (int n = 0; n <= V.window(); ++n) {
    validate_rep(ctx, k, V.rep(n), "action");
    if (V.rep(n).n != n) fail(n, "action", "representation is for the wrong degree");
  }
  for (int n = 0; n < V.window(); ++n) {
    const auto& t = V.trans(n);
    if (t.rows() != V.dim(n + 1) || t.cols() != V.dim(n)) {
      fail(n, "transition shape", "t has shape " + t.shape() + ", expected " +
                                      std::to_string(V.dim(n + 1)) + "x" + std::to_string(V.dim(n)));
    }
  }
  const auto first_bad_column = [&](const Matrix<K>& a, const Matrix<K>& b) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.column(j) != b.column(j)) return std::to_string(j);
    }
    return std::string("?");
  };
  for (int n = 0; n < V.window(); ++n) {
    const auto& t = V.trans(n);
    // iota keeps every generator index except the slot-1 copies, which shift by one.
    for (int i = 0; i < ctx.num_gens(n); ++i) {
      const int j = ctx.is_transposition(n, i) ? i : i + 1;
      const auto lhs = multiply(t, V.action(n, i));
      const auto rhs = multiply(V.action(n + 1, j), t);
      if (!(lhs == rhs)) {
        fail(n, "equivariance of t_" + std::to_string(n) + " with generator " + std::to_string(i),
             "basis vector " + first_bad_column(lhs, rhs));
      }
    }
    for (int a = 0; a < ctx.group().num_generators(); ++a) {
      const auto letters = ctx.slot_letters(n + 1, n, ctx.group().generators[a]);
      const auto lhs = multiply(word_matrix(k, V.rep(n + 1), letters), t);
      if (!(lhs == t)) {
        fail(n, "slot triviality of t_" + std::to_string(n) + " for group generator " + std::to_string(a),
             "basis vector " + first_bad_column(lhs, t));
      }
    }
    if (n + 1 < V.window()) {
      const auto tt = multiply(V.trans(n + 1), t);
      const auto lhs = multiply(V.action(n + 2, ctx.s_index(n)), tt);
      if (!(lhs == tt)) {
        fail(n, "exchange relation s_" + std::to_string(n + 2) + " t_" + std::to_string(n + 1) + " t_" +
                    std::to_string(n) + " = t_" + std::to_string(n + 1) + " t_" + std::to_string(n),
             "basis vector " + first_bad_column(lhs, tt));
      }
    }
  }
}

/// Checks that f is G_n-equivariant and commutes with transitions on the common window.
template <class K>
void validate_map(const ModuleMap<K>& f) {
  const auto& s = f.source;
  const auto& t = f.target;
  for (int n = 0; n <= f.window(); ++n) {
    if (f.mats[n].rows() != t.dim(n) || f.mats[n].cols() != s.dim(n)) {
      throw ValidationError("module map: degree " + std::to_string(n) + " has shape " +
                            f.mats[n].shape());
    }
    for (int i = 0; i < s.ctx().num_gens(n); ++i) {
      if (!(multiply(f.mats[n], s.action(n, i)) == multiply(t.action(n, i), f.mats[n]))) {
        throw ValidationError("module map: degree " + std::to_string(n) + " not equivariant for generator " +
                              std::to_string(i));
      }
    }
    if (n < f.window()) {
      if (!(multiply(f.mats[n + 1], s.trans(n)) == multiply(t.trans(n), f.mats[n]))) {
        throw ValidationError("module map: does not commute with t_" + std::to_string(n));
      }
    }
  }
}

/// The basic filtered module M(W) on window D, basis (S, w) with S in colex order.
template <class K>
Module<K> build_M(const WreathContext& ctx, const K& k, const RepMatrices<K>& W, int D) {
  const int n = W.n;
  if (D < n) throw PreconditionError("build_M: window " + std::to_string(D) + " below degree " + std::to_string(n));
  const std::size_t dw = W.dim;
  typename Module<K>::Data d;
  d.field = k;
  d.ctx = ctx;
  d.window = D;
  d.valid_through = D;
  for (int m = 0; m <= D; ++m) {
    const std::size_t dm = m < n ? 0 : binom(m, n) * dw;
    check_dim_cap(dm, m, "build_M");
    RepMatrices<K> rep{m, dm, {}};
    if (m >= n) {
      const auto& subsets = subsets_colex(m, n);
      for (int i = 0; i < ctx.num_gens(m); ++i) {
        const GnElement x = ctx.generator(m, i);
        Matrix<K> a(k, dm, dm);
        for (std::size_t si = 0; si < subsets.size(); ++si) {
          const MorphismNF nf = ctx.normal_form(ctx.compose(x, ctx.subset_inclusion(subsets[si], m)));
          const std::size_t sj = colex_rank(nf.subset);
          if (nf.h == ctx.identity(n)) {
            for (std::size_t b = 0; b < dw; ++b) a(sj * dw + b, si * dw + b) = k.one();
          } else {
            paste(a, rep_matrix(ctx, k, W, nf.h), sj * dw, si * dw);
          }
        }
        rep.mats.push_back(std::move(a));
      }
    } else {
      for (int i = 0; i < ctx.num_gens(m); ++i) rep.mats.push_back(Matrix<K>(k, 0, 0));
    }
    d.actions.push_back(std::move(rep));
  }
  for (int m = 0; m < D; ++m) {
    Matrix<K> t(k, d.actions[m + 1].dim, d.actions[m].dim);
    for (std::size_t i = 0; i < d.actions[m].dim; ++i) t(i, i) = k.one();
    d.trans.push_back(std::move(t));
  }
  return Module<K>(std::move(d));
}

template <class K>
bool is_equivariant(const RepMatrices<K>& W, const RepMatrices<K>& V, const Matrix<K>& phi) {
  for (std::size_t i = 0; i < W.mats.size(); ++i) {
    if (!(multiply(phi, W.mats[i]) == multiply(V.mats[i], phi))) return false;
  }
  return true;
}

/// Degree-m component of the map M(W) -> V determined by phi : W -> V_n.
template <class K>
Matrix<K> yoneda_component(const Module<K>& V, const RepMatrices<K>& W, const Matrix<K>& phi, int m) {
  const int n = W.n;
  const K& k = V.field();
  if (m < n) return Matrix<K>(k, V.dim(m), 0);
  const auto& ctx = V.ctx();
  const Matrix<K> lifted = multiply(trans_composite(V, n, m), phi);
  const auto& subsets = subsets_colex(m, n);
  Matrix<K> out(k, V.dim(m), subsets.size() * W.dim);
  for (std::size_t si = 0; si < subsets.size(); ++si) {
    const auto letters = ctx.coset_perm_word(subsets[si], m).letters;
    for (std::size_t b = 0; b < W.dim; ++b) {
      const Vec<K> col = apply_word(V.rep(m), letters, lifted.column(b));
      for (std::size_t r = 0; r < col.size(); ++r) out(r, si * W.dim + b) = col[r];
    }
  }
  return out;
}

/// The unique map M(W) -> V restricting to phi in degree n.
template <class K>
ModuleMap<K> yoneda_map(const Module<K>& M, const RepMatrices<K>& W, const Module<K>& V, const Matrix<K>& phi) {
  if (phi.rows() != V.dim(W.n) || phi.cols() != W.dim) {
    throw DimensionMismatch("yoneda_map: phi has shape " + phi.shape());
  }
  if (!is_equivariant(W, V.rep(W.n), phi)) throw ValidationError("yoneda_map: phi is not G_n-equivariant");
  ModuleMap<K> f{M, V, {}};
  const int D = std::min(M.window(), V.window());
  for (int m = 0; m <= D; ++m) f.mats.push_back(yoneda_component(V, W, phi, m));
  return f;
}

}  // namespace figlab
