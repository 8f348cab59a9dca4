#include <gtest/gtest.h>

#include <random>

#include "figlab/wreath.hpp"

using namespace figlab;

namespace {

const RationalField QQ;

GnElement random_element(const WreathContext& ctx, int n, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> d(0, ctx.order(n) - 1);
  return ctx.element_at(n, d(rng));
}

FiniteGroup s3_group() {
  // S_3 as permutations of {0,1,2}, enumerated by std::next_permutation.
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      mul[a][b] = index(c);
    }
  }
  return FiniteGroup::make(mul, {index({1, 0, 2}), index({1, 2, 0})});
}

}  // namespace

TEST(Group, TrivialAndCyclic) {
  EXPECT_EQ(FiniteGroup::trivial().order, 1);
  auto c2 = FiniteGroup::make({{0, 1}, {1, 0}}, {1});
  EXPECT_EQ(c2.elem_words[1], std::vector<int>{0});
  EXPECT_EQ(FiniteGroup::cyclic(5).inverse[2], 3);
}

TEST(Group, RejectsBadIdentity) {
  try {
    FiniteGroup::make({{1, 0}, {0, 1}}, {1});
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("identity"), std::string::npos);
  }
}

TEST(Group, RejectsNonGenerating) {
  EXPECT_THROW(FiniteGroup::make({{0, 1}, {1, 0}}, {}), ValidationError);
  EXPECT_THROW(FiniteGroup::make({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}, {1}), ValidationError);
}

TEST(Group, ElemWordsMultiplyOut) {
  auto s3 = s3_group();
  for (int x = 0; x < s3.order; ++x) {
    int y = 0;
    for (int k : s3.elem_words[x]) y = s3.times(y, s3.generators[k]);
    EXPECT_EQ(y, x);
  }
}

TEST(Wreath, FactorIdentityAndTransposition) {
  WreathContext fi;
  EXPECT_TRUE(fi.factor(fi.identity(3)).letters.empty());
  GnElement t = fi.identity(2);
  std::swap(t.f[0], t.f[1]);
  EXPECT_EQ(fi.factor(t).letters, std::vector<int>{0});
}

TEST(Wreath, FactorRoundTripC2) {
  WreathContext ctx(FiniteGroup::cyclic(2));
  std::mt19937 rng(2024);
  for (int it = 0; it < 200; ++it) {
    auto e = random_element(ctx, 4, rng);
    EXPECT_EQ(ctx.evaluate(ctx.factor(e)), e);
  }
}

TEST(Wreath, FactorRoundTripNonabelian) {
  // The slot-1 embedding reverses products; a nonabelian G catches a wrong order.
  WreathContext ctx(s3_group());
  std::mt19937 rng(9);
  for (int it = 0; it < 100; ++it) {
    auto e = random_element(ctx, 3, rng);
    EXPECT_EQ(ctx.evaluate(ctx.factor(e)), e);
  }
}

TEST(Wreath, CompositionIsAssociative) {
  WreathContext ctx(s3_group());
  std::mt19937 rng(4);
  for (int it = 0; it < 100; ++it) {
    auto a = random_element(ctx, 3, rng), b = random_element(ctx, 3, rng), c = random_element(ctx, 3, rng);
    EXPECT_EQ(ctx.compose(ctx.compose(a, b), c), ctx.compose(a, ctx.compose(b, c)));
    EXPECT_EQ(ctx.compose(a, ctx.inverse(a)), ctx.identity(3));
  }
}

TEST(Wreath, CosetPermWord) {
  WreathContext fi;
  EXPECT_TRUE(fi.coset_perm_word({0, 1}, 4).letters.empty());
  EXPECT_EQ(fi.coset_perm_word({1}, 2).letters, std::vector<int>{0});
  auto e = fi.evaluate(fi.coset_perm_word({1, 3}, 4));
  EXPECT_EQ(e.f, (std::vector<int>{1, 3, 0, 2}));
}

TEST(Wreath, NormalFormRoundTripExhaustive) {
  for (int group = 0; group < 2; ++group) {
    WreathContext ctx(group == 0 ? FiniteGroup::trivial() : FiniteGroup::cyclic(2));
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= std::min(2, m); ++n) {
        // all decorated injections [n] -> [m]
        std::size_t seen = 0;
        for (const auto& s : subsets_colex(m, n)) {
          for (std::size_t h = 0; h < ctx.order(n); ++h) {
            Morphism e = ctx.compose(ctx.subset_inclusion(s, m), ctx.element_at(n, h));
            auto nf = ctx.normal_form(e);
            EXPECT_EQ(nf.subset, s);
            EXPECT_EQ(ctx.element_index(nf.h), h);
            ++seen;
          }
        }
        EXPECT_EQ(seen, binom(m, n) * ctx.order(n));
      }
    }
  }
}

TEST(Wreath, NormalFormExamples) {
  WreathContext fi;
  auto nf = fi.normal_form(fi.std_inclusion(2, 3));
  EXPECT_EQ(nf.subset, (std::vector<int>{0, 1}));
  EXPECT_EQ(nf.h, fi.identity(2));
  Morphism swap{2, {1, 0}, {0, 0}};
  EXPECT_EQ(fi.factor(fi.normal_form(swap).h).letters, std::vector<int>{0});
  EXPECT_THROW(fi.normal_form(Morphism{3, {1, 1}, {0, 0}}), ValidationError);
}

TEST(Wreath, CosetDecomposition) {
  WreathContext ctx(FiniteGroup::cyclic(2));
  std::mt19937 rng(8);
  for (int it = 0; it < 50; ++it) {
    auto x = random_element(ctx, 3, rng);
    auto [q, h] = ctx.coset_decompose(x);
    EXPECT_EQ(ctx.compose(ctx.coset_rep(2, q), ctx.iota(h)), x);
  }
}

TEST(Reps, RegularAndSignValidate) {
  WreathContext c2(FiniteGroup::cyclic(2));
  for (int n = 0; n <= 3; ++n) {
    EXPECT_NO_THROW(validate_rep(c2, QQ, regular_rep(c2, QQ, n)));
    EXPECT_NO_THROW(validate_rep(c2, QQ, sign_rep(c2, QQ, n)));
  }
  WreathContext s3(s3_group());
  EXPECT_NO_THROW(validate_rep(s3, QQ, regular_rep(s3, QQ, 2)));
}

TEST(Reps, DetectsBrokenRelations) {
  WreathContext c2(FiniteGroup::cyclic(2));
  auto r = regular_rep(c2, QQ, 2);
  // Replace the slot-1 decoration by the identity on one coordinate pair: still
  // an involution commuting with nothing in particular, but breaks s a s a' = a' s a s.
  r.mats[1] = multiply(r.mats[1], r.mats[0]);
  EXPECT_THROW(validate_rep(c2, QQ, r), ValidationError);

  // Slot-1 and slot-2 decorations must commute: a rep of C2 x S_2 acting by a
  // non-commuting pair fails even though the other listed relations hold.
  RepMatrices<RationalField> bad{2, 2, {}};
  Matrix<RationalField> s(QQ, 2, 2), a(QQ, 2, 2);
  s(0, 1) = s(1, 0) = QQ.one();
  a(0, 0) = QQ.one();
  a(1, 0) = QQ.one();
  a(1, 1) = QQ.from_int(-1);
  bad.mats = {s, a};
  EXPECT_THROW(validate_rep(c2, QQ, bad), ValidationError);
}

TEST(Reps, ElementMatricesAreHomomorphic) {
  WreathContext ctx(s3_group());
  auto r = regular_rep(ctx, QQ, 2);
  std::mt19937 rng(6);
  for (int it = 0; it < 20; ++it) {
    auto a = random_element(ctx, 2, rng), b = random_element(ctx, 2, rng);
    EXPECT_EQ(rep_matrix(ctx, QQ, r, ctx.compose(a, b)),
              multiply(rep_matrix(ctx, QQ, r, a), rep_matrix(ctx, QQ, r, b)));
  }
}

TEST(Reps, Restrict) {
  WreathContext c2(FiniteGroup::cyclic(2));
  auto r = restrict_rep(c2, regular_rep(c2, QQ, 1));
  EXPECT_EQ(r.n, 0);
  EXPECT_EQ(r.dim, 2u);
  EXPECT_TRUE(r.mats.empty());

  auto reg3 = regular_rep(c2, QQ, 3);
  auto twice = restrict_rep(c2, restrict_rep(c2, reg3));
  EXPECT_NO_THROW(validate_rep(c2, QQ, twice));
  // character oracle: trace of the restricted generator equals trace on the embedded element
  std::mt19937 rng(1);
  auto res = restrict_rep(c2, reg3);
  for (int it = 0; it < 10; ++it) {
    auto h = random_element(c2, 2, rng);
    auto a = rep_matrix(c2, QQ, res, h);
    auto b = rep_matrix(c2, QQ, reg3, c2.iota(h));
    EXPECT_EQ(a, b);
  }
}

TEST(Reps, InduceDimensions) {
  WreathContext c2(FiniteGroup::cyclic(2));
  auto ind = induce_rep(c2, QQ, trivial_rep(c2, QQ, 0));
  EXPECT_EQ(ind.dim, 2u);
  EXPECT_NO_THROW(validate_rep(c2, QQ, ind));
  WreathContext fi;
  EXPECT_EQ(induce_rep(fi, QQ, trivial_rep(fi, QQ, 1)).dim, 2u);
  for (int n = 0; n <= 2; ++n) {
    auto w = sign_rep(c2, QQ, n);
    auto i = induce_rep(c2, QQ, w);
    EXPECT_EQ(i.dim, static_cast<std::size_t>((n + 1) * 2) * w.dim);
    EXPECT_NO_THROW(validate_rep(c2, QQ, i));
    EXPECT_GE(restrict_rep(c2, i).dim, w.dim);
  }
  // Ind of the regular rep is the regular rep, up to dimension.
  EXPECT_EQ(induce_rep(c2, QQ, regular_rep(c2, QQ, 1)).dim, c2.order(2));
}
