/// Acceptance run: one PASS/FAIL line per criterion over the suite S of
/// curated modules (data/) and 20 seeded random presentations.

#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "figlab/figlab.hpp"

using namespace figlab;

namespace {

const RationalField QQ;
const WreathContext FI;
const WreathContext C2(FiniteGroup::cyclic(2));
constexpr double kBudgetSeconds = 60.0;

template <class K>
struct Member {
  std::string id;
  Presentation<K> P;
  InvariantReport r;
  Module<K> V;  // materialized at the certified window
};

struct Suite {
  std::vector<Member<RationalField>> curated;
  std::vector<Member<PrimeField>> random;
};

/// Collects failures of one criterion; the first few are echoed.
struct Check {
  int failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (++failures <= 5) notes.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string str(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

std::vector<std::size_t> head(std::vector<std::size_t> v, std::size_t n) {
  v.resize(std::min(v.size(), n));
  return v;
}

template <class K>
Member<K> make_member(const std::string& id, const Presentation<K>& P) {
  auto r = certify(P, id, RunConfig{});
  auto V = materialize(P, r.window_used);
  return {id, P, std::move(r), std::move(V)};
}

Suite build_suite() {
  Suite S;
  for (const char* name : {"kG0", "kG1", "J0", "M0", "M1", "MC2_trivial", "MC2_regular"}) {
    const auto src = read_module_file(std::string(FIGLAB_DATA_DIR) + "/" + name + ".json");
    S.curated.push_back(make_member(src.id, *parse_module(src, QQ).presentation));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenerateParams gp;
    gp.p = seed % 2 ? 3 : 2;
    S.random.push_back(make_member("random-" + std::to_string(seed), random_presentation(seed, gp)));
  }
  return S;
}

/// Runs fn over every suite member, whatever its field.
template <class Fn>
void each(const Suite& S, Fn&& fn) {
  for (const auto& m : S.curated) fn(m);
  for (const auto& m : S.random) fn(m);
}

template <class K>
bool nonzero_torsion(const Module<K>& V) {
  return is_torsion(V) && !V.is_zero();
}

// 1. dim M(W)_m = C(m, n) dim W.
void dimension_law(const Suite&, Check& c) {
  const PrimeField F3(3);
  const auto run = [&](const auto& k, const WreathContext& ctx, int n, const auto& W, const std::string& label) {
    const auto M = build_M(ctx, k, W, 6);
    for (int m = 0; m <= 6; ++m) {
      const std::size_t want = m < n ? 0 : binom(m, n) * W.dim;
      c.expect(M.dim(m) == want, label + " n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  };
  for (const auto* ctx : {&FI, &C2}) {
    const std::string g = ctx->group().is_trivial() ? "FI" : "C2";
    for (int n = 0; n <= 3; ++n) {
      run(QQ, *ctx, n, trivial_rep(*ctx, QQ, n), g + " Q trivial");
      run(QQ, *ctx, n, sign_rep(*ctx, QQ, n), g + " Q sign");
      run(F3, *ctx, n, regular_rep(*ctx, F3, n), g + " F3 regular");
    }
  }
}

// 2. Sigma M(W) = M(W) + M(Res W), L M(W) = M(Ind W), R M(W) = M(W) + M(Ind W).
void closed_forms(const Suite& S, Check& c) {
  constexpr int D = 5;
  const auto same = [&](const Module<RationalField>& X, const Module<RationalField>& Y, const std::string& what) {
    const int w = std::min(X.window(), Y.window());
    c.expect(truncate(X, w).dims() == truncate(Y, w).dims(), what + " dims");
    c.expect(h0(truncate(X, w)).dims() == h0(truncate(Y, w)).dims(), what + " H_0");
    c.expect(h_i(truncate(X, w), 1).is_zero(), what + " H_1");
  };
  for (const auto& m : S.curated) {
    if (!is_sharp_filtered(m.V).value) continue;
    const auto& W = m.P.generators.front();
    const auto& ctx = m.P.ctx;
    const auto MW = build_M(ctx, QQ, W, D);
    const auto expect_shift =
        W.n == 0 ? MW : direct_sum(MW, build_M(ctx, QQ, restrict_rep(ctx, W), D));
    same(shift(build_M(ctx, QQ, W, D + 1)), expect_shift, "Sigma " + m.id);
    const auto MInd = build_M(ctx, QQ, induce_rep(ctx, QQ, W), D + 1);
    same(induce_L(MW), MInd, "L " + m.id);
    same(coinduce_R(MW), direct_sum(MW, truncate(MInd, D)), "R " + m.id);
  }
}

// 3. local cohomology equals the stabilized fi-Ext colimit, i <= 2.
void ext_power_oracle(const Suite& S, Check& c) {
  each(S, [&](const auto& m) {
    if (!m.r.certified) return;
    Degree tdmax = Degree::neg_inf();
    for (const auto& t : m.r.lc_td) tdmax = max(tdmax, t);
    // m^n kills every torsion class once n > td; n + 1 checks the colimit is stable
    const int n = tdmax.finite() ? tdmax.value() + 1 : 1;
    const auto V = materialize(m.P, std::max(m.r.window_used, 2 * n + 4));
    const auto P = local_cohomology_profile(V);
    for (int i = 0; i <= 2; ++i) {
      const auto e = fi_ext_power(V, n, i);
      const auto e1 = fi_ext_power(V, n + 1, i);
      c.expect(head(e, e1.size()) == e1, m.id + " not stable at n=" + std::to_string(n));
      const auto H = i < static_cast<int>(P.H.size()) ? P.H[i].dims() : std::vector<std::size_t>(e.size(), 0);
      c.expect(e == head(H, e.size()), m.id + " i=" + std::to_string(i) + ": ext " + str(e) + " vs H " + str(H));
    }
  });
}

// 4. depth three ways.
void depth_agreement(const Suite& S, Check& c) {
  each(S, [&](const auto& m) {
    c.expect(m.r.depth_lc == m.r.depth_classical && m.r.depth_lc == m.r.depth_derivative,
             m.id + ": " + m.r.depth_lc.to_string() + "/" + m.r.depth_classical.to_string() + "/" +
                 m.r.depth_derivative.to_string());
  });
}

// 5. N(V) by shift search equals the formula and obeys the a-priori bound.
void nagpal_number_formula(const Suite& S, Check& c) {
  each(S, [&](const auto& m) {
    c.expect(m.r.N_direct == m.r.N_formula,
             m.id + ": N " + m.r.N_direct.to_string() + " vs formula " + m.r.N_formula.to_string());
    if (!is_sharp_filtered(m.V).value) {
      c.expect(m.r.N_direct <= m.r.N_bound, m.id + ": N above max{td, 2gd-2}+1");
    }
  });
}

// 6. reg <= max{td(H^i_m)+i} <= max{2gd-1, td}; gap 0 on the curated torsion rows.
void regularity_bounds(const Suite& S, Check& c) {
  std::string gaps;
  each(S, [&](const auto& m) {
    if (!m.r.certified || !m.r.gap) return;
    c.expect(m.r.reg <= m.r.conjecture_rhs, m.id + ": reg above the local cohomology bound");
    c.expect(m.r.conjecture_rhs <= m.r.reg_bound, m.id + ": local cohomology bound above max{2gd-1, td}");
    if (m.id == "kG0" || m.id == "kG1" || m.id == "J0") c.expect(*m.r.gap == 0, m.id + ": nonzero gap");
    gaps += (gaps.empty() ? "" : " ") + m.id + ":" + std::to_string(*m.r.gap);
  });
  c.note("gaps " + gaps);
}

// 7. filtered members are acyclic; torsion members have H^0 = V only.
void acyclicity(const Suite& S, Check& c) {
  int filtered = 0, torsion = 0;
  each(S, [&](const auto& m) {
    const auto P = local_cohomology_profile(m.V);
    if (is_sharp_filtered(m.V).value) {
      ++filtered;
      for (std::size_t i = 0; i < P.H.size(); ++i) {
        c.expect(P.H[i].is_zero(), m.id + ": H^" + std::to_string(i) + " nonzero on a filtered module");
      }
    }
    if (nonzero_torsion(m.V)) {
      ++torsion;
      c.expect(P.H[0].dims() == m.V.dims(), m.id + ": H^0 differs from V");
      for (std::size_t i = 1; i < P.H.size(); ++i) {
        c.expect(P.H[i].is_zero(), m.id + ": H^" + std::to_string(i) + " nonzero on a torsion module");
      }
    }
  });
  c.note(std::to_string(filtered) + " filtered, " + std::to_string(torsion) + " torsion");
}

Json read_golden(const std::string& name) {
  std::ifstream in(std::string(FIGLAB_DATA_DIR) + "/golden/" + name);
  return Json::parse(in);
}

const Json* golden_row(const Json& rows, const std::string& key, const std::string& id, int i = -1) {
  for (const auto& r : rows) {
    if (r.at(key) == id && (i < 0 || r.at("i") == i)) return &r;
  }
  return nullptr;
}

// 8. the hand-computed values, recomputed and read back from the golden files.
void micro_benchmarks(const Suite&, Check& c) {
  const auto kG0 = materialize(kG_presentation(FI, QQ, 0), 6);
  const auto J0 = materialize(J0_presentation(FI, QQ), 6);
  c.expect(top_degree(h_i(kG0, 1)) == Degree(1), "hd_1(kG0)");
  c.expect(top_degree(h_i(kG0, 2)) == Degree(2), "hd_2(kG0)");
  c.expect(regularity(kG0).value == Degree(0), "reg(kG0)");
  const auto H1 = local_cohomology(J0, 1).dims();
  c.expect(H1.front() == 1 && std::accumulate(H1.begin(), H1.end(), std::size_t{0}) == 1, "H^1_m(J0) " + str(H1));
  c.expect(lc_depth(J0).value == Degree(1), "depth(J0)");
  c.expect(ext_torsion(0, J0, 1) == 1, "Ext^1(kG0, J0)");

  const auto hom = read_golden("homology.json");
  for (int i = 1; i <= 2; ++i) {
    const auto* r = golden_row(hom, "module-id", "kG0", i);
    c.expect(r && r->at("hd") == i, "golden hd_" + std::to_string(i) + "(kG0)");
  }
  const auto invariants = read_golden("invariants.json");
  const auto* inv = golden_row(invariants, "module-id", "kG0");
  c.expect(inv && inv->at("reg") == 0 && inv->at("td") == 0 && inv->at("gd") == 0 && inv->at("N_direct") == 1 &&
               inv->at("depth_lc") == 0,
           "golden invariants(kG0)");
  const auto localcoh = read_golden("localcoh.json");
  const auto* lc = golden_row(localcoh, "module-id", "J0", 1);
  c.expect(lc && lc->at("td") == 0 && lc->at("dims").at(0) == 1, "golden H^1_m(J0)");
  const auto depth = read_golden("depth.json");
  const auto* dep = golden_row(depth, "module-id", "J0");
  c.expect(dep && dep->at("depth_lc") == 1, "golden depth(J0)");
  const auto exts = read_golden("ext.json");
  const auto* ext = golden_row(exts, "V", "J0");
  c.expect(ext && ext->at("T") == "kG0" && ext->at("ext").at(1) == 1, "golden Ext^1(kG0, J0)");
}

// 9. Ext^i(T, F) = 0 for torsion T and filtered F of S over the same field and group.
void orthogonality(const Suite& S, Check& c) {
  int pairs = 0;
  const auto run = [&](const auto& members) {
    for (const auto& t : members) {
      if (!nonzero_torsion(t.V)) continue;
      for (const auto& f : members) {
        if (!is_sharp_filtered(f.V).value || f.V.is_zero()) continue;
        if (t.V.field() != f.V.field() || !(t.P.ctx.group() == f.P.ctx.group())) continue;
        const int D = std::max({t.V.window(), f.V.window(), top_degree(t.V).value() + 3});
        const auto rep = check_orthogonality(materialize(t.P, D), materialize(f.P, D), 2);
        c.expect(rep.ok, t.id + " vs " + f.id + ": " + str(rep.ext));
        ++pairs;
      }
    }
  };
  run(S.curated);
  run(S.random);
  c.note(std::to_string(pairs) + " pairs");
}

// 10. Ext^i(L kG0, V) = Ext^i(kG0, Sigma V) and Hom(Sigma V, V') = Hom(V, R V').
void eckmann_shapiro(const Suite& S, Check& c) {
  int pairs = 0;
  const auto run = [&](const auto& members, std::size_t step) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      const auto& m = members[a];
      const auto& k = m.P.field;
      const int D = std::max(m.r.window_used, 6);
      const auto V = materialize(m.P, D);
      const auto L = induce_L(materialize(kG_presentation(m.P.ctx, k, 0), D - 1));
      const auto lhs = ext_dims(L, V, 2);
      const auto rhs = ext_dims(materialize(kG_presentation(m.P.ctx, k, 0), D - 1), shift(V), 2);
      c.expect(lhs == rhs, m.id + ": Ext(L kG0, V) " + str(lhs) + " vs Ext(kG0, Sigma V) " + str(rhs));

      const auto& n = members[(a + step) % members.size()];
      if (!(n.P.ctx.group() == m.P.ctx.group()) || n.P.field != k) continue;
      const auto W = materialize(n.P, D);
      const auto h1 = hom_dim(shift(V), W, D - 1);
      const auto h2 = hom_dim(V, coinduce_R(W), D);
      c.expect(h1 == h2, m.id + ", " + n.id + ": Hom " + std::to_string(h1) + " vs " + std::to_string(h2));
      ++pairs;
    }
  };
  run(S.curated, 1);
  run(S.random, 2);
  c.note(std::to_string(pairs) + " Hom pairs");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  Suite S;
  try {
    S = build_suite();
  } catch (const std::exception& e) {
    std::cout << "FAIL suite: " << e.what() << "\n";
    return 1;
  }
  const double setup = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "suite: " << S.curated.size() << " curated + " << S.random.size() << " random, certified in " << setup
            << " s\n";

  const std::vector<std::pair<std::string, std::function<void(const Suite&, Check&)>>> criteria{
      {"dimension law dim M(W)_m = C(m,n) dim W", dimension_law},
      {"closed forms of Sigma, L, R on M(W)", closed_forms},
      {"local cohomology = stabilized fi-Ext colimit", ext_power_oracle},
      {"depth: local cohomology = classical = derivative", depth_agreement},
      {"Nagpal number: shift search = formula, a-priori bound", nagpal_number_formula},
      {"regularity bounds and conjecture gaps", regularity_bounds},
      {"acyclicity of filtered and torsion members", acyclicity},
      {"worked micro-benchmarks and golden files", micro_benchmarks},
      {"orthogonality Ext(torsion, filtered) = 0", orthogonality},
      {"Eckmann-Shapiro for L and R", eckmann_shapiro}};

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(S, c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < kBudgetSeconds, "over the time budget");
    const bool ok = c.failures == 0;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << i + 1 << ". " << criteria[i].first << " (" << secs << " s)";
    for (const auto& note : c.notes) std::cout << "; " << note;
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
