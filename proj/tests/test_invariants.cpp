#include <gtest/gtest.h>

#include "figlab/invariants.hpp"

using namespace figlab;

namespace {

const RationalField QQ;
const PrimeField F2(2);
const PrimeField F3(3);
const WreathContext FI;
const WreathContext C2(FiniteGroup::cyclic(2));

}  // namespace

TEST(Regularity, Examples) {
  for (const auto* ctx : {&FI, &C2}) {
    EXPECT_EQ(regularity(materialize(kG_presentation(*ctx, QQ, 0), 5)).value, Degree(0));
    EXPECT_EQ(regularity(materialize(J0_presentation(*ctx, QQ), 5)).value, Degree(1));
    EXPECT_TRUE(regularity(build_M(*ctx, QQ, trivial_rep(*ctx, QQ, 1), 4)).value.is_neg_inf());
  }
}

TEST(Regularity, TorsionBoundedByTorsionDegree) {
  const auto run = [](const auto& k) {
    for (int s = 0; s <= 2; ++s) {
      auto T = materialize(kG_presentation(FI, k, s), 6);
      EXPECT_LE(regularity(T).value, torsion_degree_raw(T)) << "s = " << s;
    }
  };
  run(QQ);
  run(F2);
}

TEST(SharpFiltered, BasicModulesAndTorsion) {
  EXPECT_TRUE(is_sharp_filtered(build_M(C2, F3, regular_rep(C2, F3, 1), 4)).value);
  EXPECT_FALSE(is_sharp_filtered(materialize(kG_presentation(C2, F3, 0), 4)).value);
}

TEST(NagpalNumber, Examples) {
  for (const auto* ctx : {&FI, &C2}) {
    EXPECT_EQ(nagpal_number(materialize(kG_presentation(*ctx, QQ, 0), 5)).value, Degree(1));
    EXPECT_EQ(nagpal_number(materialize(J0_presentation(*ctx, QQ), 5)).value, Degree(1));
    EXPECT_EQ(nagpal_number(build_M(*ctx, QQ, regular_rep(*ctx, QQ, 1), 4)).value, Degree(0));
    EXPECT_EQ(nagpal_number(materialize(kG_presentation(*ctx, F2, 2), 6)).value, Degree(3));
  }
}

TEST(Depth, ClassicalExamples) {
  for (const auto* ctx : {&FI, &C2}) {
    EXPECT_EQ(classical_depth(materialize(kG_presentation(*ctx, QQ, 0), 5)).value, Degree(0));
    EXPECT_EQ(classical_depth(materialize(J0_presentation(*ctx, QQ), 5)).value, Degree(1));
    EXPECT_TRUE(classical_depth(build_M(*ctx, QQ, trivial_rep(*ctx, QQ, 1), 4)).value.is_pos_inf());
  }
}

TEST(Depth, DerivativeAgreesWithClassical) {
  const auto run = [](const auto& k) {
    for (const auto* ctx : {&FI, &C2}) {
      using Mod = Module<std::decay_t<decltype(k)>>;
      std::vector<Mod> suite{materialize(kG_presentation(*ctx, k, 0), 5), materialize(kG_presentation(*ctx, k, 1), 5),
                             materialize(J0_presentation(*ctx, k), 5), build_M(*ctx, k, trivial_rep(*ctx, k, 1), 4)};
      for (std::size_t i = 0; i < suite.size(); ++i) {
        EXPECT_EQ(derivative_depth(suite[i]).value, classical_depth(suite[i]).value) << "module " << i;
      }
    }
  };
  run(QQ);
  run(F2);
}

TEST(Orthogonality, TorsionAgainstFiltered) {
  auto r = check_orthogonality(materialize(kG_presentation(FI, QQ, 0), 5),
                               build_M(FI, QQ, regular_rep(FI, QQ, 1), 5), 2);
  EXPECT_TRUE(r.ok) << r.counterexample;
  auto F = direct_sum(build_M(C2, F2, regular_rep(C2, F2, 0), 5), build_M(C2, F2, regular_rep(C2, F2, 2), 5));
  r = check_orthogonality(materialize(kG_presentation(C2, F2, 1), 5), F, 2);
  EXPECT_TRUE(r.ok) << r.counterexample;
  auto J0 = materialize(J0_presentation(FI, QQ), 5);
  EXPECT_THROW(check_orthogonality(J0, J0, 1), PreconditionError);
  auto kG0 = materialize(kG_presentation(FI, QQ, 0), 5);
  EXPECT_THROW(check_orthogonality(kG0, kG0, 1), PreconditionError);
}

TEST(EckmannShapiro, InductionAgainstShift) {
  // Ext^i(L T, V) = Ext^i(T, Sigma V)
  for (const auto* ctx : {&FI, &C2}) {
    auto kG0 = materialize(kG_presentation(*ctx, QQ, 0), 5);
    auto LT = induce_L(kG0);
    for (const auto& V : {materialize(J0_presentation(*ctx, QQ), 6), materialize(kG_presentation(*ctx, QQ, 1), 6)}) {
      EXPECT_EQ(ext_dims(truncate(LT, 5), truncate(V, 5), 2), ext_dims(kG0, shift(V), 2));
    }
  }
}

TEST(Derivative, LowersGeneratingDegree) {
  for (const auto* ctx : {&FI, &C2}) {
    for (const auto& V : {materialize(J0_presentation(*ctx, F3), 5), build_M(*ctx, F3, regular_rep(*ctx, F3, 2), 5),
                          materialize(kG_presentation(*ctx, F3, 1), 5)}) {
      EXPECT_LT(generating_degree_raw(derivative(V)), generating_degree_raw(V));
    }
  }
}

TEST(Projective, ShiftsBecomeProjective) {
  auto J0 = materialize(J0_presentation(FI, QQ), 6);
  EXPECT_EQ(is_projective(J0), std::optional<bool>(false));
  EXPECT_EQ(is_projective(shift_b(J0, nagpal_number(J0).value.value())), std::optional<bool>(true));
  EXPECT_EQ(is_projective(build_M(FI, F2, trivial_rep(FI, F2, 1), 4)), std::optional<bool>(true));
  EXPECT_EQ(is_projective(build_M(FI, F2, trivial_rep(FI, F2, 2), 4)), std::nullopt);
  EXPECT_EQ(is_projective(materialize(kG_presentation(FI, F2, 1), 4)), std::optional<bool>(false));
}
