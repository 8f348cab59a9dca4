#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "figlab/errors.hpp"

namespace figlab {

/// A finite group by Cayley table. Element 0 is the identity; mul[a][b] = a*b.
/// Construct through FiniteGroup::make, which validates and fills elem_words.
struct FiniteGroup {
  int order = 1;
  std::vector<std::vector<int>> mul{{0}};
  std::vector<int> generators;
  /// elem_words[x] lists generator positions k1..kr with x = g_k1 * ... * g_kr.
  std::vector<std::vector<int>> elem_words{{}};
  std::vector<int> inverse{0};

  int times(int a, int b) const { return mul[a][b]; }
  int num_generators() const { return static_cast<int>(generators.size()); }
  bool is_trivial() const { return order == 1; }

  bool operator==(const FiniteGroup& o) const {
    return order == o.order && mul == o.mul && generators == o.generators;
  }

  static FiniteGroup make(std::vector<std::vector<int>> table, std::vector<int> gens);
  static FiniteGroup trivial() { return make({{0}}, {}); }
  static FiniteGroup cyclic(int n);
};

/// Checks the group axioms and generation; throws ValidationError with a witness.
inline void validate_group_table(const std::vector<std::vector<int>>& mul,
                                 const std::vector<int>& gens) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw ValidationError("group: empty Cayley table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n) {
      throw ValidationError("group: row " + std::to_string(a) + " has length " +
                            std::to_string(mul[a].size()) + ", expected " + std::to_string(n));
    }
    for (int b = 0; b < n; ++b) {
      if (mul[a][b] < 0 || mul[a][b] >= n) {
        throw ValidationError("group: mul[" + std::to_string(a) + "][" + std::to_string(b) +
                              "] out of range");
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (mul[0][a] != a || mul[a][0] != a) {
      throw ValidationError("group: element 0 is not a two-sided identity; witness a = " +
                            std::to_string(a));
    }
  }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = mul[a][b] == 0 && mul[b][a] == 0;
    if (!found) throw ValidationError("group: element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
          throw ValidationError("group: associativity fails for (a, b, c) = (" + std::to_string(a) +
                                ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  for (int g : gens) {
    if (g < 0 || g >= n) throw ValidationError("group: generator " + std::to_string(g) + " out of range");
  }
}

inline FiniteGroup FiniteGroup::make(std::vector<std::vector<int>> table, std::vector<int> gens) {
  validate_group_table(table, gens);
  FiniteGroup g;
  g.order = static_cast<int>(table.size());
  g.mul = std::move(table);
  g.generators = std::move(gens);
  g.inverse.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      if (g.mul[a][b] == 0) g.inverse[a] = b;
    }
  }
  // BFS over the right Cayley graph: word(x * g_k) = word(x) + [k].
  g.elem_words.assign(g.order, {});
  std::vector<bool> seen(g.order, false);
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int k = 0; k < g.num_generators(); ++k) {
      int y = g.mul[x][g.generators[k]];
      if (seen[y]) continue;
      seen[y] = true;
      g.elem_words[y] = g.elem_words[x];
      g.elem_words[y].push_back(k);
      queue.push_back(y);
    }
  }
  for (int x = 0; x < g.order; ++x) {
    if (!seen[x]) {
      throw ValidationError("group: generators do not generate; element " + std::to_string(x) +
                            " is unreachable");
    }
  }
  return g;
}

inline FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return make(std::move(t), n > 1 ? std::vector<int>{1} : std::vector<int>{});
}

inline void validate_group(const FiniteGroup& g) { validate_group_table(g.mul, g.generators); }

}  // namespace figlab
