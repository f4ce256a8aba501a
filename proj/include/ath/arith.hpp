#pragma once

#include <map>
#include <vector>

#include "ath/rational.hpp"

namespace ath {

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);
// returns g and sets x, y with a*x + b*y = g, g >= 0
i64 egcd(i64 a, i64 b, i64& x, i64& y);
i64 mod(i64 a, i64 m);  // nonnegative residue
i64 powmod(i64 b, i64 e, i64 m);
i64 isqrt(i64 n);  // floor sqrt, n >= 0
bool is_square(i64 n);
bool is_prime(i64 n);
std::map<i64, int> factor(i64 n);  // |n| > 0
std::vector<i64> prime_divisors(i64 n);
std::vector<i64> divisors(i64 n);  // positive divisors of |n|
int ord(i64 n, i64 p);             // n != 0
bool squarefree(i64 n);

int legendre(i64 a, i64 p);  // odd prime p
int kronecker(i64 a, i64 n);

bool is_fundamental(i64 d);

}  // namespace ath
