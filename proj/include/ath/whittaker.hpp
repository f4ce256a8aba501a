#pragma once

#include <string>
#include <vector>

#include "ath/symcoeff.hpp"

namespace ath {

// Normalized local Whittaker function as a polynomial in X = q^{-s},
// q = p^f. Value at s = 0 is P(1); the s-derivative at 0 is
// -log q * P'(1) = -f P'(1) log p.
struct WhitPoly {
  std::vector<Rational> coef;  // coef[k] multiplies X^k
  i64 p = 2;
  int f = 1;

  static WhitPoly zero(i64 p, int f = 1) { return WhitPoly{{}, p, f}; }
  bool is_zero() const;
  Rational value() const;
  Rational deriv_log_p() const;  // coefficient of log p in the derivative
  SymCoeff derivative() const;
  std::string str() const;
};

// sum_{r=0}^{N} (chi_pi X)^r over residue field of size p^f
WhitPoly whit_unramified(int chi_pi, int N, i64 p, int f = 1);

// Ramified, phi = char(O), N = ord m >= 0, c = ord t >= 0, q = p.
WhitPoly whit_ramified_center(int N, int c, int chi_tm, i64 p, int f = 1);

// Ramified, phi = char(mu + O) with mu not integral; c_m_mu = ord(m - t mu mubar).
WhitPoly whit_ramified_offcenter(int c_m_mu, int c, i64 p);

struct ScaleReduced {
  Rational m;
  int sign;
};
// W_m(0, Phi_1) = (gamma_1/gamma_2) W_{m/a}(0, Phi_2); the |a|^{s} factor is 1
// at s = 0 and only affects derivatives where the value already vanishes.
ScaleReduced scale_reduce(const Rational& m, const Rational& a, int gamma_ratio);

}  // namespace ath
