#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace figlab {

inline std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::size_t>(r);
}

inline std::size_t factorial(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Colex rank of a sorted subset of {0, 1, ...}. Subsets of [m] occupy the
/// ranks below C(m, |S|), which makes the inclusion [m] -> [m+1] a prefix.
inline std::size_t colex_rank(const std::vector<int>& s) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r += binom(static_cast<std::size_t>(s[i]), i + 1);
  return r;
}

inline std::vector<int> colex_unrank(std::size_t rank, std::size_t n) {
  std::vector<int> s(n);
  for (std::size_t i = n; i-- > 0;) {
    std::size_t c = i;  // largest c with C(c, i+1) <= rank
    while (binom(c + 1, i + 1) <= rank) ++c;
    s[i] = static_cast<int>(c);
    rank -= binom(c, i + 1);
  }
  return s;
}

/// All n-subsets of [m] in colex order.
inline const std::vector<std::vector<int>>& subsets_colex(std::size_t m, std::size_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({m, n});
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  const std::size_t total = binom(m, n);
  out.reserve(total);
  for (std::size_t r = 0; r < total; ++r) out.push_back(colex_unrank(r, n));
  return cache.emplace(std::make_pair(m, n), std::move(out)).first->second;
}

/// Lexicographic rank of a permutation in one-line notation.
inline std::size_t perm_rank(const std::vector<int>& p) {
  const std::size_t n = p.size();
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    r = r * (n - i) + smaller;
  }
  return r;
}

inline std::vector<int> perm_unrank(std::size_t r, std::size_t n) {
  std::vector<std::size_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = r % (n - i);
    r /= (n - i);
  }
  std::vector<int> avail(n);
  for (std::size_t i = 0; i < n; ++i) avail[i] = static_cast<int>(i);
  std::vector<int> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = avail[digits[i]];
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return p;
}

}  // namespace figlab
