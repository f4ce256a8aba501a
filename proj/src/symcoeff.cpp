#include "ath/symcoeff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ath/arith.hpp"
#include "ath/special.hpp"

namespace ath {

SymBasis SymBasis::log_p(i64 p) {
  if (!is_prime(p)) throw std::invalid_argument("LOG_P needs a prime");
  return {Sym::LOG_P, p, {}};
}

SymBasis SymBasis::beta1(const Rational& x) {
  if (x.sign() <= 0) throw std::invalid_argument("BETA1 needs a positive argument");
  return {Sym::BETA1, 0, x};
}

bool operator<(const SymBasis& a, const SymBasis& b) {
  return std::tie(a.tag, a.p, a.x) < std::tie(b.tag, b.p, b.x);
}

std::string SymBasis::str() const {
  switch (tag) {
    case Sym::UNIT: return "1";
    case Sym::LOG_P: return "log(" + std::to_string(p) + ")";
    case Sym::LOG_V: return "log(v)";
    case Sym::LAMBDA_PRIME: return "L'";
    case Sym::BETA1: return "b1(" + x.str() + ")";
  }
  return "?";
}

SymCoeff::SymCoeff(const Rational& unit) { add(SymBasis::unit(), unit); }
SymCoeff::SymCoeff(const SymBasis& s, const Rational& v) { add(s, v); }

Rational SymCoeff::get(const SymBasis& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymCoeff::add(const SymBasis& s, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = terms_.emplace(s, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymCoeff& SymCoeff::operator+=(const SymCoeff& o) {
  for (auto& [s, v] : o.terms_) add(s, v);
  return *this;
}

SymCoeff& SymCoeff::operator-=(const SymCoeff& o) {
  for (auto& [s, v] : o.terms_) add(s, -v);
  return *this;
}

SymCoeff& SymCoeff::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= r;
  return *this;
}

std::optional<i64> SymCoeff::as_integer() const {
  if (terms_.empty()) return 0;
  if (terms_.size() != 1) return std::nullopt;
  auto& [s, v] = *terms_.begin();
  if (s.tag != Sym::UNIT || !v.is_integer()) return std::nullopt;
  return v.num();
}

SymCoeff SymCoeff::beta_truncated(const Rational& cut) const {
  SymCoeff out;
  for (auto& [s, v] : terms_)
    if (s.tag != Sym::BETA1 || s.x <= cut) out.terms_.emplace(s, v);
  return out;
}

std::string SymCoeff::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [s, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (s.tag == Sym::UNIT)
      os << v;
    else
      os << v << "*" << s.str();
  }
  return os.str();
}

SymCoeff sym_add(const SymCoeff& a, const SymCoeff& b) { return a + b; }

double numeric_eval(const SymCoeff& c, double v, const NumericContext& ctx) {
  double sum = 0.0;
  for (auto& [s, r] : c.terms()) {
    double val = 0.0;
    switch (s.tag) {
      case Sym::UNIT: val = 1.0; break;
      case Sym::LOG_P: val = std::log(static_cast<double>(s.p)); break;
      case Sym::LOG_V: val = std::log(v); break;
      case Sym::LAMBDA_PRIME:
        if (!ctx.lambda_prime) throw std::invalid_argument("numeric context lacks Lambda'(1)");
        val = *ctx.lambda_prime;
        break;
      case Sym::BETA1: val = beta1(4.0 * std::numbers::pi * s.x.to_double() * v); break;
    }
    sum += r.to_double() * val;
  }
  return sum;
}

QSeries::QSeries(i64 grid, const Rational& precision, std::optional<Rational> beta_cut)
    : grid_(grid), precision_(precision), beta_cut_(beta_cut) {
  if (grid <= 0) throw std::invalid_argument("grid must be positive");
}

SymCoeff QSeries::at(const Rational& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? SymCoeff{} : it->second;
}

void QSeries::add_term(const Rational& e, const SymCoeff& c) {
  if (!(e * Rational(grid_)).is_integer()) throw std::invalid_argument("exponent off grid: " + e.str());
  if (e > precision_) throw std::invalid_argument("exponent beyond precision: " + e.str());
  if (c.is_zero()) return;
  auto& slot = coeffs_[e];
  slot += c;
  if (slot.is_zero()) coeffs_.erase(e);
}

std::optional<Rational> QSeries::min_exponent() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  QSeries out(lcm(grid_, o.grid_), std::min(precision_, o.precision_));
  if (beta_cut_ && o.beta_cut_)
    out.beta_cut_ = std::min(*beta_cut_, *o.beta_cut_);
  else if (beta_cut_)
    out.beta_cut_ = beta_cut_;
  else
    out.beta_cut_ = o.beta_cut_;
  for (const QSeries* s : {static_cast<const QSeries*>(this), &o})
    for (auto& [e, c] : s->coeffs_)
      if (e <= out.precision_) out.add_term(e, out.beta_cut_ ? c.beta_truncated(*out.beta_cut_) : c);
  *this = std::move(out);
  return *this;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.grid_ == b.grid_ && a.precision_ == b.precision_ && a.beta_cut_ == b.beta_cut_ &&
         a.coeffs_ == b.coeffs_;
}

namespace {

struct ProductPlan {
  i64 grid;
  Rational precision;
  std::vector<std::pair<Rational, i64>> theta;  // exponent, integer coefficient
};

ProductPlan plan_product(const QSeries& theta, const QSeries& phi) {
  ProductPlan plan;
  for (auto& [e, c] : theta.coeffs()) {
    auto n = c.as_integer();
    if (!n) throw std::invalid_argument("theta factor must have integer UNIT coefficients");
    plan.theta.emplace_back(e, *n);
  }
  // an empty series is zero up to its precision, so its first possible term
  // sits no lower than the precision itself
  Rational s_theta = theta.min_exponent().value_or(theta.precision());
  Rational s_phi = phi.min_exponent().value_or(phi.precision());
  Rational t2 = phi.precision() + s_theta;
  Rational t1 = phi.beta_cut() ? theta.precision() - *phi.beta_cut() : theta.precision() + s_phi;
  plan.precision = std::min(t1, t2);
  plan.grid = lcm(theta.grid(), phi.grid());
  return plan;
}

}  // namespace

QSeries series_mul_by_integral(const QSeries& theta, const QSeries& phi, Exec exec) {
  ProductPlan plan = plan_product(theta, phi);
  QSeries out(plan.grid, plan.precision, phi.beta_cut());
  std::vector<Rational> exps;
  for (auto& [e1, n] : plan.theta)
    for (auto& [e2, c] : phi.coeffs()) {
      Rational e = e1 + e2;
      if (e <= plan.precision) exps.push_back(e);
    }
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  auto vals = parallel_map<SymCoeff>(
      exps.size(),
      [&](std::size_t i) {
        SymCoeff acc;
        for (auto& [e1, n] : plan.theta) {
          auto it = phi.coeffs().find(exps[i] - e1);
          if (it != phi.coeffs().end()) acc += it->second * Rational(n);
        }
        return acc;
      },
      exec);
  for (std::size_t i = 0; i < exps.size(); ++i) out.add_term(exps[i], vals[i]);
  return out;
}

QSeries series_mul_reference(const QSeries& theta, const QSeries& phi) {
  ProductPlan plan = plan_product(theta, phi);
  QSeries out(plan.grid, plan.precision, phi.beta_cut());
  for (auto& [e1, n] : plan.theta)
    for (auto& [e2, c] : phi.coeffs())
      if (e1 + e2 <= plan.precision) out.add_term(e1 + e2, c * Rational(n));
  return out;
}

QSeries series_rescale(const QSeries& phi, i64 D) {
  if (D <= 0) throw std::invalid_argument("rescale factor must be positive");
  std::optional<Rational> cut;
  if (phi.beta_cut()) cut = *phi.beta_cut() * Rational(D);
  QSeries out(phi.grid() / gcd(phi.grid(), D), phi.precision() * Rational(D), cut);
  auto logD = factor(D);
  for (auto& [e, c] : phi.coeffs()) {
    SymCoeff nc;
    for (auto& [s, v] : c.terms()) {
      if (s.tag == Sym::BETA1) {
        nc.add(SymBasis::beta1(s.x * Rational(D)), v);
      } else {
        nc.add(s, v);
        if (s.tag == Sym::LOG_V)
          for (auto& [p, k] : logD) nc.add(SymBasis::log_p(p), v * Rational(k));
      }
    }
    out.add_term(e * Rational(D), nc);
  }
  return out;
}

namespace {
// interchange form: always "num/den"
std::string frac(const Rational& r) { return std::to_string(r.num()) + "/" + std::to_string(r.den()); }
}  // namespace

nlohmann::json to_json(const SymCoeff& c) {
  auto arr = nlohmann::json::array();
  for (auto& [s, v] : c.terms()) {
    nlohmann::json t;
    switch (s.tag) {
      case Sym::UNIT: t["sym"] = "UNIT"; break;
      case Sym::LOG_P:
        t["sym"] = "LOG_P";
        t["p"] = s.p;
        break;
      case Sym::LOG_V: t["sym"] = "LOG_V"; break;
      case Sym::LAMBDA_PRIME: t["sym"] = "LAMBDA_PRIME"; break;
      case Sym::BETA1:
        t["sym"] = "BETA1";
        t["x"] = frac(s.x);
        break;
    }
    t["val"] = frac(v);
    arr.push_back(t);
  }
  return arr;
}

SymCoeff symcoeff_from_json(const nlohmann::json& j) {
  SymCoeff c;
  for (auto& t : j) {
    std::string tag = t.at("sym");
    Rational v = Rational::parse(t.at("val").get<std::string>());
    if (tag == "UNIT")
      c.add(SymBasis::unit(), v);
    else if (tag == "LOG_P")
      c.add(SymBasis::log_p(t.at("p").get<i64>()), v);
    else if (tag == "LOG_V")
      c.add(SymBasis::log_v(), v);
    else if (tag == "LAMBDA_PRIME")
      c.add(SymBasis::lambda_prime(), v);
    else if (tag == "BETA1")
      c.add(SymBasis::beta1(Rational::parse(t.at("x").get<std::string>())), v);
    else
      throw std::invalid_argument("unknown symbol " + tag);
  }
  return c;
}

nlohmann::json to_json(const QSeries& s) {
  nlohmann::json j;
  j["grid"] = s.grid();
  j["precision"] = frac(s.precision());
  if (s.beta_cut()) j["beta_cut"] = frac(*s.beta_cut());
  auto terms = nlohmann::json::array();
  for (auto& [e, c] : s.coeffs()) terms.push_back({{"exp", frac(e)}, {"coeff", to_json(c)}});
  j["terms"] = terms;
  return j;
}

QSeries qseries_from_json(const nlohmann::json& j) {
  std::optional<Rational> cut;
  if (j.contains("beta_cut")) cut = Rational::parse(j.at("beta_cut").get<std::string>());
  QSeries s(j.at("grid").get<i64>(), Rational::parse(j.at("precision").get<std::string>()), cut);
  for (auto& t : j.at("terms"))
    s.add_term(Rational::parse(t.at("exp").get<std::string>()), symcoeff_from_json(t.at("coeff")));
  return s;
}

}  // namespace ath
