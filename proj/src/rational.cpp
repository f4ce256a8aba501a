#include "ath/rational.hpp"

#include <limits>
#include <ostream>

namespace ath {

namespace {

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw std::overflow_error("rational overflow");
  return static_cast<i64>(v);
}

Rational Rational::make(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n);
  r.den_ = narrow(d);
  return r;
}

Rational::Rational(i64 n, i64 d) { *this = make(n, d); }

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

Rational Rational::operator-() const { return make(-static_cast<i128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    *this = make(static_cast<i128>(num_) + o.num_, den_);
  } else {
    *this = make(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                 static_cast<i128>(den_) * o.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // cross-cancel first to keep intermediates small
  i128 g1 = gcd128(num_, o.den_);
  i128 g2 = gcd128(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  *this = make((static_cast<i128>(num_) / g1) * (o.num_ / g2),
               (static_cast<i128>(den_) / g2) * (o.den_ / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inv(); }

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

Rational Rational::inv() const {
  if (num_ == 0) throw std::domain_error("inverse of zero");
  return make(den_, num_);
}

i64 Rational::floor() const {
  i64 q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

i64 Rational::ceil() const {
  i64 q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

int Rational::ord(i64 p) const {
  if (num_ == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  i64 n = num_, d = den_;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ath
