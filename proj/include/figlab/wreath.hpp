#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "figlab/combinatorics.hpp"
#include "figlab/group.hpp"
#include "figlab/limits.hpp"
#include "figlab/linalg.hpp"

namespace figlab {

/// A morphism (f, g): [n] -> [m] of FI_G with points numbered from 0.
/// Elements of G_n are the morphisms with n == m.
struct Morphism {
  int target = 0;
  std::vector<int> f;
  std::vector<int> g;

  int source() const { return static_cast<int>(f.size()); }
  bool operator==(const Morphism&) const = default;
};

using GnElement = Morphism;

/// A word l1 l2 ... lr in the canonical generators of G_n, read as the
/// composite l1 o l2 o ... o lr.
struct WreathWord {
  int n = 0;
  std::vector<int> letters;
};

/// Normal form (f_S, 1) o h of a morphism.
struct MorphismNF {
  std::vector<int> subset;
  GnElement h;
};

/// Canonical generator machinery for the groups G_n = G wr S_n. In G_n the
/// generator indices are 0..n-2 for the adjacent transpositions s_1..s_{n-1}
/// and n-1.. for the slot-1 copies of the generators of G (present when n >= 1).
class WreathContext {
 public:
  WreathContext() : group_(std::make_shared<const FiniteGroup>(FiniteGroup::trivial())) {}
  explicit WreathContext(FiniteGroup g) : group_(std::make_shared<const FiniteGroup>(std::move(g))) {}

  const FiniteGroup& group() const { return *group_; }
  int group_order() const { return group_->order; }
  bool operator==(const WreathContext& o) const { return *group_ == *o.group_; }

  int num_gens(int n) const { return n == 0 ? 0 : (n - 1) + group_->num_generators(); }
  int s_index(int i) const { return i; }
  int a_index(int n, int k) const { return n - 1 + k; }
  bool is_transposition(int n, int idx) const { return idx < n - 1; }

  std::size_t order(int n) const {
    return ipow(static_cast<std::size_t>(group_->order), n) * factorial(n);
  }

  GnElement identity(int n) const {
    GnElement e;
    e.target = n;
    e.f.resize(n);
    for (int i = 0; i < n; ++i) e.f[i] = i;
    e.g.assign(n, 0);
    return e;
  }

  Morphism std_inclusion(int n, int m) const {
    Morphism e = identity(n);
    e.target = m;
    return e;
  }

  Morphism subset_inclusion(const std::vector<int>& s, int m) const {
    Morphism e;
    e.target = m;
    e.f = s;
    e.g.assign(s.size(), 0);
    return e;
  }

  GnElement generator(int n, int idx) const {
    GnElement e = identity(n);
    if (idx < 0 || idx >= num_gens(n)) {
      throw ValidationError("generator index " + std::to_string(idx) + " out of range for G_" +
                            std::to_string(n));
    }
    if (is_transposition(n, idx)) {
      std::swap(e.f[idx], e.f[idx + 1]);
    } else {
      e.g[0] = group_->generators[idx - (n - 1)];
    }
    return e;
  }

  /// (a o b) with the decoration rule h(x) = b.g(x) * a.g(b.f(x)).
  Morphism compose(const Morphism& a, const Morphism& b) const {
    if (b.target != a.source()) {
      throw DimensionMismatch("compose: [" + std::to_string(b.source()) + "] -> [" +
                              std::to_string(b.target) + "] then [" + std::to_string(a.source()) +
                              "] -> [" + std::to_string(a.target) + "]");
    }
    Morphism c;
    c.target = a.target;
    const int n = b.source();
    c.f.resize(n);
    c.g.resize(n);
    for (int x = 0; x < n; ++x) {
      c.f[x] = a.f[b.f[x]];
      c.g[x] = group_->times(b.g[x], a.g[b.f[x]]);
    }
    return c;
  }

  GnElement inverse(const GnElement& e) const {
    const int n = e.source();
    GnElement r;
    r.target = n;
    r.f.resize(n);
    r.g.resize(n);
    for (int x = 0; x < n; ++x) r.f[e.f[x]] = x;
    for (int x = 0; x < n; ++x) r.g[x] = group_->inverse[e.g[r.f[x]]];
    return r;
  }

  /// The self-embedding: a new point appended at the end, trivially decorated.
  Morphism iota(const Morphism& e) const {
    Morphism r = e;
    r.f.push_back(e.target);
    r.g.push_back(0);
    r.target = e.target + 1;
    return r;
  }

  GnElement evaluate(const WreathWord& w) const {
    GnElement e = identity(w.n);
    for (int l : w.letters) e = compose(e, generator(w.n, l));
    return e;
  }

  /// Letters realizing the slot-1 decoration c. The slot-1 embedding reverses
  /// products, so the word of c is read backwards.
  std::vector<int> slot1_letters(int n, int c) const {
    std::vector<int> out;
    const auto& w = group_->elem_words[c];
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(a_index(n, *it));
    return out;
  }

  /// Letters realizing decoration c in slot j: conjugate of the slot-1 copy by
  /// s_{j-1} o ... o s_1, which moves point 0 to point j.
  std::vector<int> slot_letters(int n, int j, int c) const {
    std::vector<int> out;
    for (int i = j - 1; i >= 0; --i) out.push_back(s_index(i));
    auto mid = slot1_letters(n, c);
    out.insert(out.end(), mid.begin(), mid.end());
    for (int i = 0; i < j; ++i) out.push_back(s_index(i));
    return out;
  }

  /// Bubble sort: while some sigma(i) > sigma(i+1), replace sigma by sigma o s_i.
  std::vector<int> perm_letters(std::vector<int> sigma) const {
    std::vector<int> rec;
    const int n = static_cast<int>(sigma.size());
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i + 1 < n; ++i) {
        if (sigma[i] > sigma[i + 1]) {
          std::swap(sigma[i], sigma[i + 1]);
          rec.push_back(i);
          changed = true;
        }
      }
    }
    std::reverse(rec.begin(), rec.end());
    return rec;
  }

  /// (sigma, d) = (sigma, 1) o (id, d), and (id, d) is a product of commuting slot copies.
  WreathWord factor(const GnElement& e) const {
    WreathWord w;
    w.n = e.source();
    w.letters = perm_letters(e.f);
    for (int j = 0; j < w.n; ++j) {
      if (e.g[j] == 0) continue;
      auto part = slot_letters(w.n, j, e.g[j]);
      w.letters.insert(w.letters.end(), part.begin(), part.end());
    }
    return w;
  }

  /// sigma_S: i -> (i-th smallest element of S) for i < |S|, order preserving on the rest.
  std::vector<int> coset_perm(const std::vector<int>& s, int m) const {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> perm = sorted;
    std::vector<bool> in(m, false);
    for (int x : sorted) in[x] = true;
    for (int x = 0; x < m; ++x) {
      if (!in[x]) perm.push_back(x);
    }
    return perm;
  }

  WreathWord coset_perm_word(const std::vector<int>& s, int m) const {
    return {m, perm_letters(coset_perm(s, m))};
  }

  MorphismNF normal_form(const Morphism& e) const {
    const int n = e.source();
    MorphismNF nf;
    nf.subset = e.f;
    std::sort(nf.subset.begin(), nf.subset.end());
    for (int i = 0; i + 1 < n; ++i) {
      if (nf.subset[i] == nf.subset[i + 1]) {
        throw ValidationError("normal_form: map is not injective, value " +
                              std::to_string(nf.subset[i]) + " repeats");
      }
    }
    nf.h.target = n;
    nf.h.f.resize(n);
    nf.h.g = e.g;
    for (int x = 0; x < n; ++x) {
      nf.h.f[x] = static_cast<int>(std::lower_bound(nf.subset.begin(), nf.subset.end(), e.f[x]) -
                                   nf.subset.begin());
    }
    return nf;
  }

  /// Index of e in the enumeration of G_n: permutation rank, then decorations base |G|.
  std::size_t element_index(const GnElement& e) const {
    const std::size_t q = group_->order;
    std::size_t d = 0;
    for (int x = e.source(); x-- > 0;) d = d * q + e.g[x];
    return perm_rank(e.f) * ipow(q, e.source()) + d;
  }

  GnElement element_at(int n, std::size_t idx) const {
    const std::size_t q = group_->order;
    const std::size_t qn = ipow(q, n);
    GnElement e;
    e.target = n;
    e.f = perm_unrank(idx / qn, n);
    e.g.resize(n);
    std::size_t d = idx % qn;
    for (int x = 0; x < n; ++x) {
      e.g[x] = static_cast<int>(d % q);
      d /= q;
    }
    return e;
  }

  /// Left coset representatives of iota(G_n) in G_{n+1}: r_(j,c) sends point n
  /// to j with decoration c there. Index q = j * |G| + c.
  GnElement coset_rep(int n, std::size_t q) const {
    const int j = static_cast<int>(q / group_->order);
    const int c = static_cast<int>(q % group_->order);
    GnElement r;
    r.target = n + 1;
    r.f.resize(n + 1);
    r.g.assign(n + 1, 0);
    for (int x = 0; x < n; ++x) r.f[x] = x < j ? x : x + 1;
    r.f[n] = j;
    r.g[n] = c;
    return r;
  }

  std::size_t coset_of(const GnElement& x) const {
    const int n = x.source() - 1;
    return static_cast<std::size_t>(x.f[n]) * group_->order + x.g[n];
  }

  std::size_t num_cosets(int n) const { return static_cast<std::size_t>(n + 1) * group_->order; }

  /// Writes x in G_{n+1} as r_q o iota(h); returns (q, h).
  std::pair<std::size_t, GnElement> coset_decompose(const GnElement& x) const {
    const int n = x.source() - 1;
    const std::size_t q = coset_of(x);
    GnElement h = compose(inverse(coset_rep(n, q)), x);
    h.f.pop_back();
    h.g.pop_back();
    h.target = n;
    return {q, std::move(h)};
  }

 private:
  std::shared_ptr<const FiniteGroup> group_;
};

/// A representation of G_n: one invertible matrix per canonical generator.
template <class K>
struct RepMatrices {
  int n = 0;
  std::size_t dim = 0;
  std::vector<Matrix<K>> mats;
};

template <class K>
RepMatrices<K> trivial_rep(const WreathContext& ctx, const K& k, int n, std::size_t dim = 1) {
  RepMatrices<K> r{n, dim, {}};
  for (int i = 0; i < ctx.num_gens(n); ++i) r.mats.push_back(Matrix<K>::identity(k, dim));
  return r;
}

/// Sign of the permutation, trivial on decorations.
template <class K>
RepMatrices<K> sign_rep(const WreathContext& ctx, const K& k, int n) {
  RepMatrices<K> r{n, 1, {}};
  for (int i = 0; i < ctx.num_gens(n); ++i) {
    Matrix<K> m(k, 1, 1);
    m(0, 0) = ctx.is_transposition(n, i) ? k.neg(k.one()) : k.one();
    r.mats.push_back(m);
  }
  return r;
}

/// k[G_n] with x acting by e_y -> e_{x o y}; basis in element_index order.
template <class K>
RepMatrices<K> regular_rep(const WreathContext& ctx, const K& k, int n) {
  const std::size_t d = ctx.order(n);
  check_dim_cap(d, n, "regular_rep");
  RepMatrices<K> r{n, d, {}};
  for (int i = 0; i < ctx.num_gens(n); ++i) {
    const GnElement x = ctx.generator(n, i);
    Matrix<K> m(k, d, d);
    for (std::size_t y = 0; y < d; ++y) {
      m(ctx.element_index(ctx.compose(x, ctx.element_at(n, y))), y) = k.one();
    }
    r.mats.push_back(std::move(m));
  }
  return r;
}

template <class K>
Vec<K> apply_word(const RepMatrices<K>& rep, const std::vector<int>& letters, Vec<K> v) {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = mul_vec(rep.mats[*it], v);
  return v;
}

template <class K>
Matrix<K> word_matrix(const K& k, const RepMatrices<K>& rep, const std::vector<int>& letters) {
  Matrix<K> m = Matrix<K>::identity(k, rep.dim);
  for (int l : letters) m = multiply(m, rep.mats[l]);
  return m;
}

template <class K>
Vec<K> apply_element(const WreathContext& ctx, const RepMatrices<K>& rep, const GnElement& e,
                     const Vec<K>& v) {
  if (e == ctx.identity(rep.n)) return v;
  return apply_word(rep, ctx.factor(e).letters, v);
}

template <class K>
Matrix<K> rep_matrix(const WreathContext& ctx, const K& k, const RepMatrices<K>& rep,
                     const GnElement& e) {
  return word_matrix(k, rep, ctx.factor(e).letters);
}

/// Checks the defining relations of G_n on the generator matrices; throws
/// ValidationError naming the failing relation.
template <class K>
void validate_rep(const WreathContext& ctx, const K& k, const RepMatrices<K>& rep,
                  const std::string& where = "rep") {
  const int n = rep.n;
  const auto fail = [&](const std::string& what) {
    throw ValidationError(where + " (degree " + std::to_string(n) + "): " + what);
  };
  if (static_cast<int>(rep.mats.size()) != ctx.num_gens(n)) {
    fail("expected " + std::to_string(ctx.num_gens(n)) + " generator matrices, got " +
         std::to_string(rep.mats.size()));
  }
  for (std::size_t i = 0; i < rep.mats.size(); ++i) {
    if (rep.mats[i].rows() != rep.dim || rep.mats[i].cols() != rep.dim) {
      fail("generator " + std::to_string(i) + " has shape " + rep.mats[i].shape());
    }
  }
  if (n == 0) return;
  const auto& S = rep.mats;
  for (int i = 0; i + 1 < n; ++i) {
    if (!multiply(S[i], S[i]).is_identity()) fail("s_" + std::to_string(i + 1) + "^2 != 1");
  }
  for (int i = 0; i + 2 < n; ++i) {
    if (!(multiply(S[i], multiply(S[i + 1], S[i])) == multiply(S[i + 1], multiply(S[i], S[i + 1])))) {
      fail("braid relation fails for s_" + std::to_string(i + 1) + ", s_" + std::to_string(i + 2));
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 2; j + 1 < n; ++j) {
      if (!(multiply(S[i], S[j]) == multiply(S[j], S[i]))) {
        fail("s_" + std::to_string(i + 1) + " and s_" + std::to_string(j + 1) + " do not commute");
      }
    }
  }
  const FiniteGroup& G = ctx.group();
  const int ng = G.num_generators();
  // x -> product along the reversed word is an anti-homomorphism on G.
  std::vector<Matrix<K>> slot1(G.order);
  for (int x = 0; x < G.order; ++x) slot1[x] = word_matrix(k, rep, ctx.slot1_letters(n, x));
  for (int x = 0; x < G.order; ++x) {
    for (int a = 0; a < ng; ++a) {
      const int y = G.times(x, G.generators[a]);
      if (!(slot1[y] == multiply(S[ctx.a_index(n, a)], slot1[x]))) {
        fail("slot-1 decorations violate the group table at element " + std::to_string(x) +
             " times generator " + std::to_string(a));
      }
    }
  }
  for (int a = 0; a < ng; ++a) {
    const auto& A = S[ctx.a_index(n, a)];
    for (int j = 1; j + 1 < n; ++j) {
      if (!(multiply(A, S[j]) == multiply(S[j], A))) {
        fail("a_" + std::to_string(a + 1) + " does not commute with s_" + std::to_string(j + 1));
      }
    }
    if (n >= 2) {
      for (int b = 0; b < ng; ++b) {
        const auto B2 = multiply(S[0], multiply(S[ctx.a_index(n, b)], S[0]));
        if (!(multiply(A, B2) == multiply(B2, A))) {
          fail("slot-1 copy of a_" + std::to_string(a + 1) + " does not commute with slot-2 copy of a_" +
               std::to_string(b + 1));
        }
      }
    }
  }
}

/// Restriction along iota: G_{n-1} -> G_n.
template <class K>
RepMatrices<K> restrict_rep(const WreathContext& ctx, const RepMatrices<K>& r) {
  if (r.n == 0) throw PreconditionError("restrict_rep: nothing below degree 0");
  const int n = r.n - 1;
  RepMatrices<K> out{n, r.dim, {}};
  for (int i = 0; i < ctx.num_gens(n); ++i) {
    if (ctx.is_transposition(n, i)) {
      out.mats.push_back(r.mats[ctx.s_index(i)]);
    } else {
      out.mats.push_back(r.mats[ctx.a_index(r.n, i - (n - 1))]);
    }
  }
  return out;
}

/// Ind from G_n to G_{n+1}; basis r_q (x) w_b at index q * dim W + b.
template <class K>
RepMatrices<K> induce_rep(const WreathContext& ctx, const K& k, const RepMatrices<K>& w) {
  const int n = w.n;
  const std::size_t nc = ctx.num_cosets(n);
  RepMatrices<K> out{n + 1, nc * w.dim, {}};
  for (int i = 0; i < ctx.num_gens(n + 1); ++i) {
    const GnElement x = ctx.generator(n + 1, i);
    Matrix<K> m(k, out.dim, out.dim);
    for (std::size_t q = 0; q < nc; ++q) {
      auto [q2, h] = ctx.coset_decompose(ctx.compose(x, ctx.coset_rep(n, q)));
      const Matrix<K> block = rep_matrix(ctx, k, w, h);
      paste(m, block, q2 * w.dim, q * w.dim);
    }
    out.mats.push_back(std::move(m));
  }
  return out;
}

/// The action on an invariant subspace, in its RREF coordinates.
template <class K>
RepMatrices<K> subrep(const RepMatrices<K>& r, const Subspace<K>& s) {
  RepMatrices<K> out{r.n, s.dim(), {}};
  const Matrix<K> inc = s.inclusion();
  for (const auto& m : r.mats) {
    const Matrix<K> img = multiply(m, inc);
    Matrix<K> a(s.field(), s.dim(), s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const auto c = s.coords(img.column(j));
      for (std::size_t i = 0; i < s.dim(); ++i) a(i, j) = c[i];
    }
    out.mats.push_back(std::move(a));
  }
  return out;
}

/// The action on V / s in the coordinates of quotient_map.
template <class K>
RepMatrices<K> quotient_rep(const RepMatrices<K>& r, const Subspace<K>& s) {
  RepMatrices<K> out{r.n, s.codim(), {}};
  const Matrix<K> q = quotient_map(r.dim, s);
  const Matrix<K> e = quotient_section(s);
  for (const auto& m : r.mats) out.mats.push_back(multiply(q, multiply(m, e)));
  return out;
}

template <class K>
RepMatrices<K> direct_sum_rep(const RepMatrices<K>& a, const RepMatrices<K>& b) {
  if (a.n != b.n) throw DimensionMismatch("direct_sum_rep: degrees differ");
  RepMatrices<K> out{a.n, a.dim + b.dim, {}};
  for (std::size_t i = 0; i < a.mats.size(); ++i) out.mats.push_back(block_diag(a.mats[i], b.mats[i]));
  return out;
}

/// G_n-saturation of the span of the given vectors.
template <class K>
Subspace<K> saturate(const RepMatrices<K>& r, IncrementalBasis<K> basis,
                     const std::vector<Vec<K>>& seeds) {
  std::vector<Vec<K>> queue;
  for (const auto& v : seeds) {
    if (basis.add(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vec<K> v = std::move(queue.back());
    queue.pop_back();
    for (const auto& m : r.mats) {
      Vec<K> w = mul_vec(m, v);
      if (basis.add(w)) queue.push_back(std::move(w));
    }
  }
  return basis.subspace();
}

inline WreathWord factor_element(const WreathContext& ctx, const GnElement& e) { return ctx.factor(e); }

}  // namespace figlab
