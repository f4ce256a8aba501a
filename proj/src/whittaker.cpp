#include "ath/whittaker.hpp"

#include <sstream>
#include <stdexcept>

namespace ath {

namespace {

void add_at(std::vector<Rational>& c, std::size_t k, const Rational& v) {
  if (c.size() <= k) c.resize(k + 1, Rational(0));
  c[k] += v;
}

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Rational pow_r(i64 p, int e) {
  Rational r(1);
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= Rational(p);
  return e < 0 ? r.inv() : r;
}

// |t| (1 - X) sum_{n=0}^{top} (qX)^n with |t| = q^{-c}
std::vector<Rational> tail_part(int top, int c, i64 q) {
  std::vector<Rational> out;
  Rational abs_t = pow_r(q, -c);
  for (int n = 0; n <= top; ++n) {
    Rational qn = pow_r(q, n) * abs_t;
    add_at(out, n, qn);
    add_at(out, n + 1, -qn);
  }
  return out;
}

}  // namespace

bool WhitPoly::is_zero() const {
  for (auto& c : coef)
    if (!c.is_zero()) return false;
  return true;
}

Rational WhitPoly::value() const {
  Rational s(0);
  for (auto& c : coef) s += c;
  return s;
}

Rational WhitPoly::deriv_log_p() const {
  Rational s(0);
  for (std::size_t k = 1; k < coef.size(); ++k) s += coef[k] * Rational(static_cast<i64>(k));
  return -Rational(f) * s;
}

SymCoeff WhitPoly::derivative() const { return SymCoeff(SymBasis::log_p(p), deriv_log_p()); }

std::string WhitPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coef.size(); ++k) {
    if (coef[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coef[k];
    if (k > 0) os << "*X^" << k;
  }
  if (first) os << "0";
  return os.str();
}

WhitPoly whit_unramified(int chi_pi, int N, i64 p, int f) {
  if (N < 0) return WhitPoly::zero(p, f);
  WhitPoly w{{}, p, f};
  Rational s(1);
  for (int r = 0; r <= N; ++r) {
    add_at(w.coef, r, s);
    s *= Rational(chi_pi);
  }
  trim(w.coef);
  return w;
}

WhitPoly whit_ramified_center(int N, int c, int chi_tm, i64 p, int f) {
  if (N < 0 || c < 0) throw std::invalid_argument("ramified Whittaker needs N, c >= 0");
  WhitPoly w{{}, p, 1};
  if (N < c) {
    w.coef = tail_part(N, c, p);
  } else {
    w.coef = tail_part(c - 1, c, p);
    add_at(w.coef, c, Rational(1));
    add_at(w.coef, f + N, Rational(chi_tm));
  }
  trim(w.coef);
  return w;
}

WhitPoly whit_ramified_offcenter(int c_m_mu, int c, i64 p) {
  if (p == 2) throw std::invalid_argument("off-center ramified case needs p odd");
  if (c_m_mu < 0 || c < 0) throw std::invalid_argument("negative valuation");
  WhitPoly w{{}, p, 1};
  if (c_m_mu < c) {
    w.coef = tail_part(c_m_mu, c, p);
  } else {
    w.coef = tail_part(c - 1, c, p);
    add_at(w.coef, c, Rational(1));
  }
  trim(w.coef);
  return w;
}

ScaleReduced scale_reduce(const Rational& m, const Rational& a, int gamma_ratio) {
  if (a.is_zero()) throw std::invalid_argument("scale must be nonzero");
  return {m / a, gamma_ratio};
}

}  // namespace ath
