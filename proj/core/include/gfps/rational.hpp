#ifndef GFPS_RATIONAL_HPP
#define GFPS_RATIONAL_HPP

#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gfps {

/// Exact rational number on 64-bit numerator/denominator.
///
/// Always stored normalized: gcd(num, den) == 1, den > 0, and 0 is 0/1.
/// Intermediate products are computed in 128-bit; results that do not fit
/// back into 64 bits after reduction throw std::overflow_error. All
/// comparisons are exact.
class Rational {
public:
  constexpr Rational() noexcept : num_(0), den_(1) {}
  constexpr Rational(long long n) noexcept : num_(n), den_(1) {}

  Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    assign(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  /// Exact conversion of a decimal or integer literal ("2", "-0.25").
  static Rational fromDecimal(std::string_view text);

  long long num() const noexcept { return num_; }
  long long den() const noexcept { return den_; }
  bool isZero() const noexcept { return num_ == 0; }
  bool isNegative() const noexcept { return num_ < 0; }

  /// Canonical rendering: "p/q", or just "p" when q == 1.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  double toDouble() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) noexcept {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) noexcept {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) noexcept {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) noexcept {
    return b < a;
  }
  friend bool operator>=(const Rational& a, const Rational& b) noexcept {
    return !(a < b);
  }

  friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

  friend Rational min(const Rational& a, const Rational& b) {
    return a < b ? a : b;
  }
  friend Rational max(const Rational& a, const Rational& b) {
    return a < b ? b : a;
  }

private:
  using i128 = __int128;

  static Rational make(i128 num, i128 den) {
    Rational r;
    r.assign(num, den);
    return r;
  }

  void assign(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 lo = static_cast<i128>(INT64_MIN);
    constexpr i128 hi = static_cast<i128>(INT64_MAX);
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("Rational: value does not fit in 64 bits");
    num_ = static_cast<long long>(num);
    den_ = static_cast<long long>(den);
    if (num_ == 0) den_ = 1;
  }

  static i128 gcd128(i128 a, i128 b) noexcept {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  long long num_;
  long long den_;
};

inline Rational Rational::fromDecimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view whole = dot == std::string_view::npos ? s : s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty() && frac.empty())
    throw std::invalid_argument("Rational: malformed decimal literal");
  auto digitsOnly = [](std::string_view v) {
    for (char c : v)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (!digitsOnly(whole) || !digitsOnly(frac))
    throw std::invalid_argument("Rational: malformed decimal literal");
  if (frac.size() > 18)
    throw std::overflow_error("Rational: too many decimal places");
  __int128 den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  __int128 num = 0;
  for (char c : whole) {
    num = num * 10 + (c - '0');
    if (num > static_cast<__int128>(INT64_MAX))
      throw std::overflow_error("Rational: decimal literal out of range");
  }
  num *= den;
  for (char c : frac) num = num * 10 + (c - '0');
  if (negative) num = -num;
  Rational r;
  r.assign(num, den);
  return r;
}

/// Decimal approximation for display next to the exact form ("2.5", "0.333333").
inline std::string approxDecimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", r.toDouble());
  return std::string(buf);
}

}  // namespace gfps

#endif
