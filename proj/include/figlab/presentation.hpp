#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "figlab/module_ops.hpp"

namespace figlab {

template <class K>
struct RelationSlot {
  RepMatrices<K> rep;
  /// Equivariant map U -> (sum_i M(W_i))_a in the canonical basis; a = rep.n.
  Matrix<K> map;
};

/// Generators sum_i M(W_i) modulo the images of the relation slots.
template <class K>
struct Presentation {
  K field{};
  WreathContext ctx;
  std::vector<RepMatrices<K>> generators;
  std::vector<RelationSlot<K>> relations;

  int max_degree() const {
    int d = 0;
    for (const auto& g : generators) d = std::max(d, g.n);
    for (const auto& r : relations) d = std::max(d, r.rep.n);
    return d;
  }
};

/// sum_i M(W_i) on window D together with the block offsets of each summand
/// in every degree.
template <class K>
struct FreeSum {
  Module<K> module;
  std::vector<RepMatrices<K>> slots;
  std::vector<std::vector<std::size_t>> offsets;  // offsets[m][i]
};

template <class K>
FreeSum<K> basic_sum(const WreathContext& ctx, const K& k, const std::vector<RepMatrices<K>>& slots, int D) {
  FreeSum<K> out;
  out.slots = slots;
  std::vector<Module<K>> parts;
  for (const auto& w : slots) {
    if (w.n > D) throw WindowExhausted("basic_sum: slot degree " + std::to_string(w.n) + " beyond window");
    parts.push_back(build_M(ctx, k, w, D));
  }
  out.module = direct_sum(parts, k, ctx, D);
  for (int m = 0; m <= D; ++m) {
    std::vector<std::size_t> off;
    std::size_t acc = 0;
    for (const auto& p : parts) {
      off.push_back(acc);
      acc += p.dim(m);
    }
    off.push_back(acc);
    out.offsets.push_back(std::move(off));
  }
  return out;
}

/// The map sum_j M(U_j) -> V given by equivariant phi_j : U_j -> V_{a_j}.
template <class K>
ModuleMap<K> yoneda_sum(const FreeSum<K>& src, const Module<K>& V, const std::vector<Matrix<K>>& phis) {
  const K& k = V.field();
  const int D = std::min(src.module.window(), V.window());
  ModuleMap<K> f{src.module, V, {}};
  for (int m = 0; m <= D; ++m) f.mats.push_back(Matrix<K>(k, V.dim(m), src.module.dim(m)));
  for (std::size_t j = 0; j < src.slots.size(); ++j) {
    const auto& U = src.slots[j];
    if (!is_equivariant(U, V.rep(U.n), phis[j])) {
      throw ValidationError("relation " + std::to_string(j) + ": map is not G_" + std::to_string(U.n) +
                            "-equivariant");
    }
    for (int m = U.n; m <= D; ++m) paste(f.mats[m], yoneda_component(V, U, phis[j], m), 0, src.offsets[m][j]);
  }
  return f;
}

template <class K>
struct Materialized {
  Module<K> module;
  FreeSum<K> gens;
  ModuleMap<K> projection;  // gens.module -> module
};

template <class K>
Materialized<K> materialize_full(const Presentation<K>& p, int D) {
  if (D < p.max_degree()) {
    throw PreconditionError("materialize: window " + std::to_string(D) + " below presentation degree " +
                            std::to_string(p.max_degree()));
  }
  FreeSum<K> gens = basic_sum(p.ctx, p.field, p.generators, D);
  std::vector<RepMatrices<K>> rel_reps;
  std::vector<Matrix<K>> phis;
  for (const auto& r : p.relations) {
    rel_reps.push_back(r.rep);
    phis.push_back(r.map);
  }
  FreeSum<K> rels = basic_sum(p.ctx, p.field, rel_reps, D);
  ModuleMap<K> f = yoneda_sum(rels, gens.module, phis);
  auto cok = cokernel(f);
  return {cok.module, gens, cok.projection};
}

template <class K>
Module<K> materialize(const Presentation<K>& p, int D) {
  return materialize_full(p, D).module;
}

/// phi(e_y) = rho(y) v on the regular representation of G_a: the relation
/// slot generated by one vector v of F_a.
template <class K>
Matrix<K> regular_relation(const Module<K>& F, int a, const Vec<K>& v) {
  const auto& ctx = F.ctx();
  std::vector<Vec<K>> cols;
  for (std::size_t y = 0; y < ctx.order(a); ++y) cols.push_back(apply_element(ctx, F.rep(a), ctx.element_at(a, y), v));
  return Matrix<K>::from_columns(F.field(), F.dim(a), cols);
}

// Curated presentations.

/// M(W) itself: one generator slot, no relations.
template <class K>
Presentation<K> basic_presentation(const WreathContext& ctx, const K& k, const RepMatrices<K>& W) {
  return {k, ctx, {W}, {}};
}

/// kG_s: the regular representation of G_s concentrated in degree s.
template <class K>
Presentation<K> kG_presentation(const WreathContext& ctx, const K& k, int s) {
  Presentation<K> p{k, ctx, {regular_rep(ctx, k, s)}, {}};
  auto F = build_M(ctx, k, p.generators[0], s + 1);
  // (S = {0..s-1}, w = identity of G_s) is basis index 0 in degree s+1.
  Vec<K> v = unit_vec(k, F.dim(s + 1), 0);
  p.relations.push_back({regular_rep(ctx, k, s + 1), regular_relation(F, s + 1, v)});
  return p;
}

/// J_0 = ker(M(0) -> kG_0): generated by the trivial rep in degree 1 with the
/// sign relation e_{0} - e_{1} in degree 2.
template <class K>
Presentation<K> J0_presentation(const WreathContext& ctx, const K& k) {
  Presentation<K> p{k, ctx, {trivial_rep(ctx, k, 1)}, {}};
  Matrix<K> m(k, 2, 1);
  m(0, 0) = k.one();
  m(1, 0) = k.neg(k.one());
  p.relations.push_back({sign_rep(ctx, k, 2), m});
  return p;
}

}  // namespace figlab
