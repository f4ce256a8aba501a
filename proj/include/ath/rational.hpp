#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ath {

using i64 = std::int64_t;
using i128 = __int128;

// Exact rational over 64-bit integers. Intermediates use 128 bits and every
// narrowing is checked, so overflow throws instead of wrapping.
class Rational {
public:
  Rational() = default;
  Rational(i64 n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(i64 n, i64 d);

  static Rational parse(const std::string& s);

  i64 num() const { return num_; }
  i64 den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }
  Rational inv() const;
  i64 floor() const;
  i64 ceil() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // p-adic valuation; throws on zero.
  int ord(i64 p) const;

  std::string str() const;

private:
  static Rational make(i128 n, i128 d);
  i64 num_ = 0;
  i64 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

i64 narrow(i128 v);

}  // namespace ath

template <>
struct std::hash<ath::Rational> {
  std::size_t operator()(const ath::Rational& r) const noexcept {
    return std::hash<ath::i64>()(r.num()) * 1000003u ^ std::hash<ath::i64>()(r.den());
  }
};
