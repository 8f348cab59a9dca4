#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "figlab/homology.hpp"

namespace figlab {

struct CertifiedBool {
  bool value = false;
  Status status = Status::window_exact;
  int window = 0;
};

/// max{2 gd - 1, td}: the a-priori bound on reg.
inline Degree crude_regularity_bound(Degree gd, Degree td) {
  return max(gd.finite() ? Degree(2 * gd.value() - 1) : gd, td);
}

/// max{td, 2 gd - 2} + 1: the a-priori bound on N.
inline Degree crude_nagpal_bound(Degree gd, Degree td) {
  const Degree b = max(td, gd.finite() ? Degree(2 * gd.value() - 2) : gd);
  return b.finite() ? Degree(std::max(b.value() + 1, 0)) : Degree(0);
}

/// H_1(V) = 0 on the window.
template <class K>
CertifiedBool is_sharp_filtered(const Module<K>& V) {
  if (V.window() < 1) return {true, Status::window_exact, V.window()};
  return {h_i(V, 1).is_zero(), Status::window_exact, V.window()};
}

/// Projective modules are the sharp filtered ones whose H_0 cofactors are
/// projective kG_n-modules. That is decided only in semisimple degrees; a
/// cofactor in a modular degree leaves the answer undetermined (nullopt).
template <class K>
std::optional<bool> is_projective(const Module<K>& V) {
  if (!is_sharp_filtered(V).value) return false;
  const auto H = h0(V);
  for (int n = 0; n <= H.window(); ++n) {
    if (H.dim(n) != 0 && !semisimple_degree(V.ctx(), V.field(), n)) return std::nullopt;
  }
  return true;
}

struct RegularityScan {
  CertifiedValue reg;
  std::vector<Degree> hd;  // hd[i] for i = 1..scanned, hd[0] unused (-inf)
  Degree bound;            // the stopping bound that was used
  bool reached_bound = false;
};

/// reg = max_{i >= 1} hd_i - i. Scans i upward on one resolution and stops as
/// soon as the running maximum reaches `stop` (default: the a-priori bound),
/// or when hd_i can no longer be seen on the window.
template <class K>
RegularityScan regularity_scan(const Module<K>& V, std::optional<Degree> stop = std::nullopt, int imax = 6) {
  RegularityScan out;
  const Degree gd = generating_degree_raw(V), td = torsion_degree_raw(V);
  out.bound = stop ? *stop : crude_regularity_bound(gd, td);
  out.hd.push_back(Degree::neg_inf());
  const int visible = out.bound.finite() ? V.window() - out.bound.value() : V.window();
  const int last = std::clamp(visible, 1, imax);
  const Resolution<K> R = resolve(V, last + 1, CoverPolicy::filtered);
  Degree running = Degree::neg_inf();
  for (int i = 1; i <= last; ++i) {
    const Degree h = top_degree(h_i_from(R, i));
    out.hd.push_back(h);
    if (i == 1 && h.is_neg_inf()) break;  // sharp filtered: all higher homology vanishes
    running = max(running, h - i);
    if (running >= out.bound) {
      out.reached_bound = true;
      break;
    }
  }
  out.reg = {running, Status::window_exact, V.window()};
  return out;
}

template <class K>
CertifiedValue regularity(const Module<K>& V) {
  return regularity_scan(V).reg;
}

/// Smallest b with Sigma_b V sharp filtered, searched up to the a-priori bound.
template <class K>
CertifiedValue nagpal_number(const Module<K>& V) {
  const Degree bound = crude_nagpal_bound(generating_degree_raw(V), torsion_degree_raw(V));
  const int top = std::min(bound.value(), V.valid_through() - 1);
  for (int b = 0; b <= top; ++b) {
    if (is_sharp_filtered(shift_b(V, b)).value) return {b, Status::window_exact, V.window()};
  }
  if (top == bound.value()) {
    throw Error("nagpal_number: no shift up to the bound " + bound.to_string() + " is sharp filtered");
  }
  throw WindowExhausted("nagpal_number: window " + std::to_string(V.window()) + " too small to reach the bound " +
                        bound.to_string());
}

/// inf{i : Ext^i(kG_s, V) != 0 for some s < N(V)}; +inf when sharp filtered.
/// Depth never exceeds gd, so i runs over 0..gd.
template <class K>
CertifiedValue classical_depth(const Module<K>& V) {
  const CertifiedValue N = nagpal_number(V);
  if (N.value == Degree(0)) return {Degree::pos_inf(), Status::window_exact, V.window()};
  const Degree gd = generating_degree_raw(V);
  Degree best = Degree::pos_inf();
  bool complete = true;
  for (int s = 0; s < N.value.value(); ++s) {
    int imax = std::min(gd.value(), V.window() - s - 1);
    if (best.finite()) imax = std::min(imax, best.value() - 1);
    if (imax < gd.value() && !(best.finite() && imax == best.value() - 1)) complete = false;
    if (imax < 0) continue;
    const int D = s + imax + 1;
    const auto T = materialize(kG_presentation(V.ctx(), V.field(), s), D);
    const auto e = ext_dims(T, truncate(V, D), imax);
    for (int i = 0; i <= imax; ++i) {
      if (e[i] != 0) {
        best = min(best, Degree(i));
        break;
      }
    }
  }
  if (best.is_pos_inf() && !complete) {
    throw WindowExhausted("classical_depth: window " + std::to_string(V.window()) + " too small for the Ext scan");
  }
  return {best, Status::window_exact, V.window()};
}

/// inf{a : H_1 of D^{a+1} applied to a filtered resolution is nonzero};
/// +inf if none up to a_max (default gd, which bounds depth).
template <class K>
CertifiedValue derivative_depth(const Module<K>& V, std::optional<int> a_max = std::nullopt) {
  const Degree gd = generating_degree_raw(V);
  const int amax = a_max ? *a_max : std::max(0, gd.finite() ? gd.value() : 0);
  const Resolution<K> R = resolve(V, 2, CoverPolicy::filtered);
  ModuleMap<K> d1 = R.differential(1);
  ModuleMap<K> d2 = R.differential(2);
  for (int a = 0; a <= amax; ++a) {
    if (d1.window() < 1) {
      throw WindowExhausted("derivative_depth: window exhausted at a = " + std::to_string(a));
    }
    d1 = derivative_map(d1);
    d2 = derivative_map(d2);
    for (int n = 0; n <= std::min(d1.window(), d2.window()); ++n) {
      const std::size_t z = d1.mats[n].cols() - rank(d1.mats[n]);
      if (z > rank(d2.mats[n])) return {a, Status::window_exact, V.window()};
    }
  }
  return {Degree::pos_inf(), Status::window_exact, V.window()};
}

/// A finitely generated torsion module vanishes in high degree.
template <class K>
bool is_torsion(const Module<K>& T) {
  return T.dim(T.window()) == 0 && T.valid_through() == T.window();
}

struct OrthogonalityReport {
  std::vector<std::size_t> ext;  // dim Ext^i(T, F), i = 0..imax
  bool ok = true;
  std::string counterexample;
};

/// Ext^i(T, F) = 0 for i <= imax with T torsion and F sharp filtered.
template <class K>
OrthogonalityReport check_orthogonality(const Module<K>& T, const Module<K>& F, int imax) {
  if (!is_torsion(T)) throw PreconditionError("check_orthogonality: first argument is not torsion");
  if (!is_sharp_filtered(F).value) throw PreconditionError("check_orthogonality: second argument is not sharp filtered");
  const Degree td = top_degree(T);
  const int need = td.finite() ? td.value() + imax + 1 : imax + 1;
  if (std::min(T.window(), F.window()) < need) {
    throw WindowExhausted("check_orthogonality: need window " + std::to_string(need));
  }
  OrthogonalityReport r;
  r.ext = ext_dims(T, F, imax);
  for (int i = 0; i <= imax; ++i) {
    if (r.ext[i] != 0 && r.ok) {
      r.ok = false;
      r.counterexample = "Ext^" + std::to_string(i) + " has dimension " + std::to_string(r.ext[i]);
    }
  }
  return r;
}

}  // namespace figlab
