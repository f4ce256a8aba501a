#include "ath/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace ath {

i64 gcd(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return narrow(static_cast<i128>(a / gcd(a, b)) * (b < 0 ? -b : b));
}

i64 egcd(i64 a, i64 b, i64& x, i64& y) {
  i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    i64 q = a / b;
    i64 t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 powmod(i64 b, i64 e, i64 m) {
  i128 r = 1 % m, x = mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<i64>(r);
}

i64 isqrt(i64 n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = isqrt(n);
  return r * r == n;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::map<i64, int> factor(i64 n) {
  if (n == 0) throw std::domain_error("factor of zero");
  if (n < 0) n = -n;
  std::map<i64, int> f;
  for (i64 d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  if (n > 1) ++f[n];
  return f;
}

std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> out;
  for (auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> out{1};
  for (auto& [p, e] : factor(n)) {
    std::size_t sz = out.size();
    i64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

int ord(i64 n, i64 p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool squarefree(i64 n) {
  for (auto& [p, e] : factor(n))
    if (e > 1) return false;
  return true;
}

int legendre(i64 a, i64 p) {
  i64 r = mod(a, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    i64 r = mod(a, 8);
    if (r == 3 || r == 5) result = -result;
  }
  if (n == 1) return result;
  for (auto& [p, e] : factor(n)) {
    int l = legendre(a, p);
    for (int i = 0; i < e; ++i) result *= l;
  }
  return result;
}

bool is_fundamental(i64 d) {
  if (d == 0 || d == 1) return false;
  if (mod(d, 4) == 1) return squarefree(d);
  if (mod(d, 4) != 0) return false;
  i64 m = d / 4;
  i64 r = mod(m, 4);
  return (r == 2 || r == 3) && squarefree(m);
}

}  // namespace ath
