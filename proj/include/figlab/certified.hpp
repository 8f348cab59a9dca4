#pragma once

#include <algorithm>
#include <compare>
#include <string>

namespace figlab {

/// An integer extended by -inf and +inf. Used for degrees (td of zero is
/// -inf) and for depths (depth of a filtered module is +inf).
class Degree {
 public:
  enum class Kind { neg_inf, finite, pos_inf };

  constexpr Degree() = default;
  constexpr Degree(int v) : kind_(Kind::finite), v_(v) {}  // NOLINT: implicit by design
  static constexpr Degree neg_inf() { return Degree(Kind::neg_inf); }
  static constexpr Degree pos_inf() { return Degree(Kind::pos_inf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool finite() const { return kind_ == Kind::finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  constexpr int value() const { return v_; }

  constexpr std::strong_ordering operator<=>(const Degree& o) const {
    if (kind_ != o.kind_) return static_cast<int>(kind_) <=> static_cast<int>(o.kind_);
    return finite() ? v_ <=> o.v_ : std::strong_ordering::equal;
  }
  constexpr bool operator==(const Degree& o) const { return (*this <=> o) == 0; }

  /// Infinities absorb finite offsets.
  constexpr Degree operator+(int d) const { return finite() ? Degree(v_ + d) : *this; }
  constexpr Degree operator-(int d) const { return finite() ? Degree(v_ - d) : *this; }

  std::string to_string() const {
    if (kind_ == Kind::neg_inf) return "-inf";
    if (kind_ == Kind::pos_inf) return "+inf";
    return std::to_string(v_);
  }

  static Degree parse(const std::string& s) {
    if (s == "-inf") return neg_inf();
    if (s == "+inf" || s == "inf") return pos_inf();
    return Degree(std::stoi(s));
  }

 private:
  constexpr explicit Degree(Kind k) : kind_(k) {}
  Kind kind_ = Kind::neg_inf;
  int v_ = 0;
};

inline Degree max(Degree a, Degree b) { return a < b ? b : a; }
inline Degree min(Degree a, Degree b) { return a < b ? a : b; }

enum class Status { certified, window_exact };

inline const char* to_string(Status s) { return s == Status::certified ? "certified" : "window-exact"; }

/// An invariant computed on a finite window, with the window it used.
struct CertifiedValue {
  Degree value;
  Status status = Status::window_exact;
  int window = 0;

  bool certified() const { return status == Status::certified; }
  bool operator==(const CertifiedValue&) const = default;
};

}  // namespace figlab
