#pragma once

#include <gmpxx.h>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "figlab/errors.hpp"

namespace figlab {

/// Runtime description of the coefficient field.
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;  // only meaningful for Kind::prime

  bool operator==(const FieldSpec&) const = default;

  std::string name() const {
    return kind == Kind::rationals ? std::string("Q") : "F" + std::to_string(p);
  }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// F_p with 2 <= p < 2^31. Elements are canonical representatives in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) {
      throw ValidationError("field characteristic " + std::to_string(p) +
                            " is not a prime below 2^31");
    }
  }

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return {FieldSpec::Kind::prime, p_}; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// a - c * b, the elimination kernel.
  value_type sub_mul(value_type a, value_type c, value_type b) const { return sub(a, mul(c, b)); }
  value_type inv(value_type a) const {
    if (a == 0) throw Error("division by zero in F_" + std::to_string(p_));
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }

  std::string to_string(value_type a) const { return std::to_string(a); }
  value_type parse(std::string_view text) const {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError("bad F_" + std::to_string(p_) + " element '" + std::string(text) + "'");
    }
    if (v < 0 || v >= static_cast<std::int64_t>(p_)) {
      throw ParseError("F_" + std::to_string(p_) + " element '" + std::string(text) +
                       "' is not in [0, p)");
    }
    return static_cast<value_type>(v);
  }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_ = 2;
};

/// Q with GMP rationals, always kept in lowest terms.
class RationalField {
 public:
  using value_type = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return {FieldSpec::Kind::rationals, 0}; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(std::int64_t v) const { return value_type(static_cast<long>(v)); }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type sub_mul(const value_type& a, const value_type& c, const value_type& b) const {
    return a - c * b;
  }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw Error("division by zero in Q");
    return 1 / a;
  }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  value_type parse(std::string_view text) const {
    std::string s(text);
    value_type v;
    bool ok = !s.empty() && s.find_first_not_of("+-0123456789/") == std::string::npos;
    if (ok) ok = v.set_str(s, 10) == 0;
    if (!ok || sgn(v.get_den()) == 0) throw ParseError("bad rational '" + s + "'");
    v.canonicalize();
    return v;
  }

  bool operator==(const RationalField&) const { return true; }
};

template <class K>
concept Field = requires(const K& k, const typename K::value_type& a) {
  typename K::value_type;
  { k.zero() } -> std::convertible_to<typename K::value_type>;
  { k.one() } -> std::convertible_to<typename K::value_type>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
  { k.add(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.mul(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.inv(a) } -> std::convertible_to<typename K::value_type>;
  { k.characteristic() } -> std::convertible_to<std::uint32_t>;
};

}  // namespace figlab
