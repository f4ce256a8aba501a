#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "ath/parallel.hpp"
#include "ath/rational.hpp"

namespace ath {

enum class Sym { UNIT, LOG_P, LOG_V, LAMBDA_PRIME, BETA1 };

struct SymBasis {
  Sym tag = Sym::UNIT;
  i64 p = 0;     // LOG_P only
  Rational x{};  // BETA1 only, > 0

  static SymBasis unit() { return {}; }
  static SymBasis log_p(i64 p);
  static SymBasis log_v() { return {Sym::LOG_V, 0, {}}; }
  static SymBasis lambda_prime() { return {Sym::LAMBDA_PRIME, 0, {}}; }
  static SymBasis beta1(const Rational& x);

  friend bool operator==(const SymBasis& a, const SymBasis& b) {
    return a.tag == b.tag && a.p == b.p && a.x == b.x;
  }
  friend bool operator<(const SymBasis& a, const SymBasis& b);
  std::string str() const;
};

class SymCoeff {
public:
  SymCoeff() = default;
  explicit SymCoeff(const Rational& unit);
  SymCoeff(const SymBasis& s, const Rational& v);

  const std::map<SymBasis, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational get(const SymBasis& s) const;
  void add(const SymBasis& s, const Rational& v);

  SymCoeff& operator+=(const SymCoeff& o);
  SymCoeff& operator-=(const SymCoeff& o);
  SymCoeff& operator*=(const Rational& r);
  friend SymCoeff operator+(SymCoeff a, const SymCoeff& b) { return a += b; }
  friend SymCoeff operator-(SymCoeff a, const SymCoeff& b) { return a -= b; }
  friend SymCoeff operator*(SymCoeff a, const Rational& r) { return a *= r; }
  friend SymCoeff operator*(const Rational& r, SymCoeff a) { return a *= r; }
  friend bool operator==(const SymCoeff& a, const SymCoeff& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SymCoeff& a, const SymCoeff& b) { return !(a == b); }

  // Integer value if this is an integer multiple of UNIT.
  std::optional<i64> as_integer() const;
  // Drop BETA1(x) for x > cut.
  SymCoeff beta_truncated(const Rational& cut) const;

  std::string str() const;

private:
  std::map<SymBasis, Rational> terms_;
};

SymCoeff sym_add(const SymCoeff& a, const SymCoeff& b);

struct NumericContext {
  std::optional<double> lambda_prime;
};

double numeric_eval(const SymCoeff& c, double v, const NumericContext& ctx);

// Truncated q-expansion. Coefficients are exact for exponents <= precision,
// except that when beta_cut is set, BETA1(x) contributions with x > beta_cut
// are not represented (and exponents below -beta_cut carry only such terms,
// so they are absent).
class QSeries {
public:
  QSeries() = default;
  QSeries(i64 grid, const Rational& precision, std::optional<Rational> beta_cut = std::nullopt);

  i64 grid() const { return grid_; }
  const Rational& precision() const { return precision_; }
  const std::optional<Rational>& beta_cut() const { return beta_cut_; }
  const std::map<Rational, SymCoeff>& coeffs() const { return coeffs_; }

  SymCoeff at(const Rational& e) const;
  void add_term(const Rational& e, const SymCoeff& c);

  std::optional<Rational> min_exponent() const;
  QSeries& operator+=(const QSeries& o);
  friend bool operator==(const QSeries& a, const QSeries& b);

private:
  i64 grid_ = 1;
  Rational precision_{0};
  std::optional<Rational> beta_cut_;
  std::map<Rational, SymCoeff> coeffs_;
};

// Product with a series of integer UNIT coefficients. Truncation rule, with
// s_theta, s_phi the lowest stored exponents:
//   phi exact:          T_out = min(T_theta + s_phi, T_phi + s_theta)
//   phi with cut B:     T_out = min(T_theta - B,     T_phi + s_theta)
// In the second case every missing phi term sits at an exponent < -B, so the
// theta coefficients it would meet lie above e + B; requiring e + B <= T_theta
// keeps the result exact modulo BETA1(x > B). The cut carries over.
QSeries series_mul_by_integral(const QSeries& theta, const QSeries& phi, Exec exec = Exec::Parallel);
// Double-loop reference used as the test oracle.
QSeries series_mul_reference(const QSeries& theta, const QSeries& phi);

// tau -> D tau: exponents, precision and cut scale by D; BETA1(x) becomes
// BETA1(D x) and LOG_V becomes LOG_V + log D expanded into LOG_P symbols.
QSeries series_rescale(const QSeries& phi, i64 D);

nlohmann::json to_json(const SymCoeff& c);
SymCoeff symcoeff_from_json(const nlohmann::json& j);
nlohmann::json to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);

}  // namespace ath
