#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "figlab/invariants.hpp"

namespace figlab {

/// The maximal torsion submodule: in degree n the kernel of the transition
/// composite into the top valid degree. Exact once the window clears td(V).
template <class K>
SubmoduleResult<K> torsion_submodule(const Module<K>& V) {
  const int top = V.valid_through();
  std::vector<Subspace<K>> U;
  for (int n = 0; n <= V.window(); ++n) {
    U.push_back(n < top ? kernel_basis(trans_composite(V, n, top)) : Subspace<K>(V.field(), V.dim(n)));
  }
  return submodule(V, U, top);
}

/// V / H^0_m(V).
template <class K>
QuotientResult<K> torsion_free_part(const Module<K>& V) {
  const auto T = torsion_submodule(V);
  std::vector<Subspace<K>> U;
  for (int n = 0; n <= V.window(); ++n) U.push_back(image_basis(T.inclusion.mats[n]));
  return quotient(V, U, V.valid_through());
}

/// Hom(M(r)/m^n, V) in degree r: the kernel of the length-n transition
/// composite out of degree r. Lives on the window vt - n.
template <class K>
Module<K> fi_hom_power(const Module<K>& V, int n) {
  if (n < 1) throw PreconditionError("fi_hom_power: n must be at least 1");
  const int D = V.valid_through() - n;
  if (D < 0) throw WindowExhausted("fi_hom_power: valid_through below " + std::to_string(n));
  std::vector<Subspace<K>> U;
  for (int r = 0; r <= D; ++r) U.push_back(kernel_basis(trans_composite(V, r, r + n)));
  return submodule(truncate(V, D), U, D).module;
}

/// M(0)/m^n: k in degrees below n with identity transitions.
template <class K>
Module<K> truncated_unit(const WreathContext& ctx, const K& k, int n, int D) {
  const auto M = build_M(ctx, k, trivial_rep(ctx, k, 0), D);
  std::vector<Subspace<K>> U;
  for (int m = 0; m <= D; ++m) U.push_back(m < n ? Subspace<K>(k, M.dim(m)) : Subspace<K>::full(k, M.dim(m)));
  return quotient(M, U, D).module;
}

/// dim Ext^i(M(r)/m^n, V) for every r with enough window. M(r)/m^n is
/// L^r(M(0)/m^n), so Eckmann-Shapiro reduces this to Ext^i(M(0)/m^n, Sigma^r V),
/// whose resolution needs degrees up to n + i.
template <class K>
std::vector<std::size_t> fi_ext_power(const Module<K>& V, int n, int i) {
  if (i < 0 || n < 1) throw PreconditionError("fi_ext_power: need i >= 0 and n >= 1");
  const int rmax = std::min(V.window(), V.valid_through()) - n - i;
  if (rmax < 0) throw WindowExhausted("fi_ext_power: window too small for n = " + std::to_string(n));
  // M(0)/m^n has td n - 1, so its F_j is generated in degrees <= n - 1 + j
  const auto P = resolve(truncated_unit(V.ctx(), V.field(), n, n + i), i + 1, CoverPolicy::projective);
  std::vector<std::size_t> out;
  for (int r = 0; r <= rmax; ++r) out.push_back(ext_dims(P, truncate(shift_b(V, r), n + i), i).back());
  return out;
}

/// 0 -> V -> F^0 -> F^1 -> ... with F^{i+1} = Sigma_{b_i} Q^{(i)} and
/// Q^{(i)} = coker(tau_{b_i} on Q^{(i-1)}), Q^{(-1)} = V, b_i minimal.
/// A sharp filtered input is normalized to 0 -> V -> V -> 0.
template <class K>
struct NagpalComplex {
  Module<K> V;
  std::vector<int> b;             // b_{-1}, b_0, ...
  std::vector<Module<K>> F;       // F^0, F^1, ...
  std::vector<Module<K>> Q;       // Q^{(0)}, Q^{(1)}, ...
  ModuleMap<K> coaugmentation;    // V -> F^0
  std::vector<ModuleMap<K>> diff;  // diff[i] : F^i -> F^{i+1}
  bool normalized = false;

  int consumption() const {
    int s = 0;
    for (int x : b) s += x;
    return s;
  }
};

template <class K>
NagpalComplex<K> nagpal_complex(const Module<K>& V) {
  NagpalComplex<K> C{V, {}, {}, {}, identity_map(V), {}, false};
  const int b0 = nagpal_number(V).value.value();
  if (b0 == 0) {
    C.b.push_back(0);
    C.F.push_back(V);
    C.normalized = true;
    return C;
  }
  Module<K> X = V;
  std::optional<ModuleMap<K>> prev_proj;
  for (int b = b0;; b = nagpal_number(X).value.value()) {
    const ModuleMap<K> tau = tau_b(X, b);
    const auto cok = cokernel(tau);
    C.b.push_back(b);
    C.F.push_back(tau.target);
    C.Q.push_back(cok.module);
    if (!prev_proj) {
      C.coaugmentation = tau;
    } else {
      // F^{i-1} -> Q^{(i-1)} -> Sigma_b Q^{(i-1)} = F^i
      ModuleMap<K> d{prev_proj->source, tau.target, {}};
      for (int n = 0; n <= tau.window(); ++n) d.mats.push_back(multiply(tau.mats[n], prev_proj->mats[n]));
      C.diff.push_back(std::move(d));
    }
    if (cok.module.is_zero()) break;
    prev_proj = cok.projection;
    X = cok.module;
  }
  return C;
}

template <class K>
struct LocalCohomologyProfile {
  NagpalComplex<K> complex;
  std::vector<Module<K>> H;  // H^i_m(V), i = 0..
  std::vector<Degree> td;    // td(H^i_m(V))
  Degree depth = Degree::pos_inf();
  Degree cd = Degree::neg_inf();

  /// max_i td(H^i_m) + i, -inf when every H^i_m vanishes.
  Degree regularity_rhs() const {
    Degree r = Degree::neg_inf();
    for (std::size_t i = 0; i < td.size(); ++i) r = max(r, td[i] + static_cast<int>(i));
    return r;
  }

  /// max_i td(H^i_m) + 1, or 0 when every H^i_m vanishes.
  Degree nagpal_formula() const {
    Degree r = Degree::neg_inf();
    for (const auto& t : td) r = max(r, t);
    return r.finite() ? r + 1 : Degree(0);
  }
};

/// H^0_m(V) = torsion(V) and H^i_m(V) = torsion(Q^{(i-1)}) for i >= 1.
template <class K>
LocalCohomologyProfile<K> local_cohomology_profile(const Module<K>& V) {
  LocalCohomologyProfile<K> P{nagpal_complex(V), {}, {}};
  P.H.push_back(torsion_submodule(V).module);
  if (!P.complex.normalized) {
    for (const auto& Q : P.complex.Q) P.H.push_back(torsion_submodule(Q).module);
  }
  for (std::size_t i = 0; i < P.H.size(); ++i) {
    P.td.push_back(top_degree(P.H[i]));
    if (!P.H[i].is_zero()) {
      if (P.depth.is_pos_inf()) P.depth = static_cast<int>(i);
      P.cd = static_cast<int>(i);
    }
  }
  return P;
}

template <class K>
Module<K> local_cohomology(const Module<K>& V, int i) {
  if (i < 0) throw PreconditionError("local_cohomology: negative index");
  if (i == 0) return torsion_submodule(V).module;
  const auto C = nagpal_complex(V);
  if (C.normalized || i - 1 >= static_cast<int>(C.Q.size())) return zero_module(V.field(), V.ctx(), V.window());
  return torsion_submodule(C.Q[i - 1]).module;
}

template <class K>
CertifiedValue lc_depth(const Module<K>& V) {
  return {local_cohomology_profile(V).depth, Status::window_exact, V.window()};
}

template <class K>
CertifiedValue cohomological_dimension(const Module<K>& V) {
  return {local_cohomology_profile(V).cd, Status::window_exact, V.window()};
}

template <class K>
CertifiedValue depth(const Module<K>& V) {
  return lc_depth(V);
}

}  // namespace figlab
