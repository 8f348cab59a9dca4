#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "figlab/presentation.hpp"

namespace figlab {

struct GenerateParams {
  std::uint32_t p = 2;
  int group_order = 1;      // cyclic group of this order
  int max_degree = 2;       // generator degrees lie in 0..max_degree
  int max_generators = 3;
  int max_relations = 4;
};

/// A random presentation over F_p. Generators are trivial or sign slots;
/// each relation is the regular slot of one random vector, so it is
/// equivariant by construction and always validates. Uses the raw engine
/// output so files are identical across standard libraries.
inline Presentation<PrimeField> random_presentation(std::uint64_t seed, const GenerateParams& gp = {}) {
  std::mt19937_64 rng(seed);
  const auto pick = [&](std::uint64_t n) { return static_cast<int>(rng() % n); };
  const PrimeField k(gp.p);
  const WreathContext ctx(gp.group_order == 1 ? FiniteGroup::trivial() : FiniteGroup::cyclic(gp.group_order));
  Presentation<PrimeField> P{k, ctx, {}, {}};
  const int ngen = 1 + pick(gp.max_generators);
  int top = 0;
  for (int i = 0; i < ngen; ++i) {
    const int d = pick(gp.max_degree + 1);
    top = std::max(top, d);
    P.generators.push_back(d >= 2 && pick(2) == 1 ? sign_rep(ctx, k, d) : trivial_rep(ctx, k, d));
  }
  const int nrel = pick(gp.max_relations + 1);
  const int relmax = std::min(top + 1, 3);
  for (int j = 0; j < nrel; ++j) {
    const int a = 1 + pick(relmax);
    const auto F = basic_sum(ctx, k, P.generators, std::max(a, top));
    const std::size_t dim = F.module.dim(a);
    if (dim == 0) continue;
    Vec<PrimeField> v(dim, k.zero());
    for (auto& x : v) {
      if (pick(2) == 1) x = k.from_int(1 + pick(gp.p - 1));
    }
    if (v == Vec<PrimeField>(dim, k.zero())) v[pick(dim)] = k.one();
    P.relations.push_back({regular_rep(ctx, k, a), regular_relation(F.module, a, v)});
  }
  return P;
}

}  // namespace figlab
