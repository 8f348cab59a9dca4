#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "figlab/local_cohomology.hpp"

namespace figlab {

/// One row of the invariant table; all degrees keep their +-inf values.
struct InvariantReport {
  std::string module_id;
  std::string field;
  std::string group;
  Degree gd;
  Degree td;
  Degree reg;
  Status reg_status = Status::window_exact;
  Degree N_direct;
  Degree N_formula;
  Degree depth_lc;
  Degree depth_classical;
  Degree depth_derivative;
  Degree cd;
  std::vector<Degree> lc_td;
  Degree conjecture_rhs;
  std::optional<int> gap;  // empty when the conjecture does not apply
  bool certified = false;
  int window_used = 0;
  // the a-priori bounds max{td, 2gd-2}+1 and max{2gd-1, td}
  Degree N_bound;
  Degree reg_bound;
};

struct RunConfig {
  std::optional<int> window;
  int retries = 3;
  int imax = 2;
};

/// Window the report needs to be exact: the torsion and generation range plus
/// what the Nagpal complex and the Nagpal-number search consume.
inline int required_window(Degree gd, Degree td, int shift_total, int N) {
  const Degree base = max(td, gd.finite() ? Degree(2 * gd.value() - 1) : gd);
  return std::max(base.finite() ? base.value() : 0, 0) + std::max(shift_total, N) + 1;
}

namespace detail {

inline std::string group_label(const WreathContext& ctx) {
  const auto& g = ctx.group();
  if (g.is_trivial()) return "1";
  if (g == FiniteGroup::cyclic(g.order)) return "C" + std::to_string(g.order);
  return "G" + std::to_string(g.order);
}

template <class K>
std::string field_label(const K& k) {
  return k.characteristic() == 0 ? "Q" : "F" + std::to_string(k.characteristic());
}

}  // namespace detail

/// All invariants of V on its own window; certified iff the window clears
/// required_window.
template <class K>
InvariantReport analyze(const Module<K>& V, const std::string& id) {
  InvariantReport r;
  r.module_id = id;
  r.field = detail::field_label(V.field());
  r.group = detail::group_label(V.ctx());
  r.window_used = V.window();
  r.gd = generating_degree_raw(V);
  r.td = torsion_degree_raw(V);
  r.N_bound = crude_nagpal_bound(r.gd, r.td);
  r.reg_bound = crude_regularity_bound(r.gd, r.td);

  const auto P = local_cohomology_profile(V);
  const bool sharp = P.complex.normalized;
  r.N_direct = P.complex.b.front();
  r.N_formula = P.nagpal_formula();
  r.lc_td = P.td;
  r.depth_lc = P.depth;
  r.cd = P.cd;
  r.conjecture_rhs = P.regularity_rhs();

  bool reg_exact = sharp;
  if (sharp) {
    r.reg = Degree::neg_inf();
  } else {
    const auto scan = regularity_scan(V, r.conjecture_rhs);
    r.reg = scan.reg.value;
    reg_exact = scan.reached_bound;
    if (r.reg.finite() && r.conjecture_rhs.finite()) r.gap = r.conjecture_rhs.value() - r.reg.value();
  }
  r.depth_classical = classical_depth(V).value;
  r.depth_derivative = derivative_depth(V).value;

  const int need = required_window(r.gd, r.td, P.complex.consumption(), r.N_direct.value());
  r.certified = V.window() >= need && V.valid_through() == V.window();
  r.reg_status = r.certified && reg_exact ? Status::certified : Status::window_exact;
  return r;
}

/// Materializes P at the default window 2 max_degree + 2 (or the override),
/// doubling up to `retries` times until the report certifies. Throws
/// WindowExhausted if it never does; `last` then holds the final attempt.
template <class K>
InvariantReport certify(const Presentation<K>& P, const std::string& id, const RunConfig& cfg,
                        std::optional<InvariantReport>* last = nullptr) {
  int D = cfg.window ? *cfg.window : 2 * P.max_degree() + 2;
  if (D < P.max_degree()) throw PreconditionError("window override below the presentation degree");
  std::string why;
  for (int attempt = 0; attempt <= cfg.retries; ++attempt, D *= 2) {
    try {
      auto r = analyze(materialize(P, D), id);
      if (last) *last = r;
      if (r.certified) return r;
      why = "window " + std::to_string(D) + " below the required window";
    } catch (const WindowExhausted& e) {
      why = e.what();
    }
  }
  throw WindowExhausted(id + ": not certified after " + std::to_string(cfg.retries) + " retries (" + why + ")");
}

/// The conjecture reg = max{td(H^i_m) + i} and its two corollaries, as data.
struct ConjectureRow {
  std::string module_id;
  Degree reg;
  Degree rhs;
  std::optional<int> gap;
  bool applicable = false;      // V not sharp filtered
  std::string torsion_check;    // reg = td for torsion V: "ok", "fail" or "n/a"
  std::string shift_check;      // reg(Sigma V) = reg(V) - 1: "ok", "fail" or "n/a"
  bool certified = false;
  std::string error;
};

template <class K>
ConjectureRow conjecture_row(const Module<K>& V, const InvariantReport& r) {
  ConjectureRow row{r.module_id, r.reg, r.conjecture_rhs, r.gap, r.gap.has_value(), "n/a", "n/a", r.certified, {}};
  if (is_torsion(V) && !V.is_zero()) row.torsion_check = r.reg == r.td ? "ok" : "fail";
  if (row.applicable) {
    const Module<K> S = shift(V);
    if (!is_sharp_filtered(S).value) {
      const Degree rhs = local_cohomology_profile(S).regularity_rhs();
      row.shift_check = regularity_scan(S, rhs).reg.value == r.reg - 1 ? "ok" : "fail";
    }
  }
  return row;
}

template <class K>
InvariantReport invariant_report(const Module<K>& V, const std::string& id = {}) {
  return analyze(V, id);
}

/// One row per presentation; a failing row records its error and the scan goes on.
template <class K>
std::vector<ConjectureRow> conjecture_scan(const std::vector<std::pair<std::string, Presentation<K>>>& suite,
                                           const RunConfig& cfg = {}) {
  std::vector<ConjectureRow> rows;
  for (const auto& [id, P] : suite) {
    try {
      const auto r = certify(P, id, cfg);
      rows.push_back(conjecture_row(materialize(P, r.window_used), r));
    } catch (const Error& e) {
      ConjectureRow row;
      row.module_id = id;
      row.torsion_check = row.shift_check = "n/a";
      row.error = e.what();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace figlab
