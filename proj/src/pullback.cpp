#include "ath/pullback.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/digamma.hpp>

#include "ath/arith.hpp"
#include "ath/genfun.hpp"
#include "ath/special.hpp"

namespace ath {

namespace {

SymCoeff with_log_D(const SymCoeff& c, i64 D) {
  SymCoeff out = c;
  Rational v = c.get(SymBasis::log_v());
  if (!v.is_zero())
    for (auto& [p, k] : factor(D)) out.add(SymBasis::log_p(p), v * Rational(k));
  return out;
}

SymCoeff strip_beta(const SymCoeff& c) {
  SymCoeff out;
  for (auto& [s, v] : c.terms())
    if (s.tag != Sym::BETA1) out.add(s, v);
  return out;
}

NumericContext numeric_context(const Field& F) {
  NumericContext ctx;
  ctx.lambda_prime = F.l_values().LambdaPrime1;
  return ctx;
}

}  // namespace

CycleData PullbackSetup::cycle_data(i64 a) const {
  Elt r = Rational(a) * field.inv(field.sqrt_disc());
  return make_cycle_data(field, abar, lambda_prime, r);
}

PullbackSetup make_pullback(const Field& F, const OrderData& od, i64 T, const PullbackOptions& opt) {
  if (F.disc() % 2 == 0) throw std::invalid_argument("non-fundamental or even discriminant out of scope");
  if (od.quat.definite || od.quat.kappa.sign() <= 0) throw std::invalid_argument("pullback needs an indefinite algebra");
  i64 D = od.quat.D;
  if (D == 1) throw std::invalid_argument("split algebra");
  if (gcd(D, F.disc()) != 1) throw std::invalid_argument("pullback needs gcd(disc, D) = 1");
  if (T < 0) throw std::invalid_argument("precision must be nonnegative");
  i64 N = -F.disc();
  i64 M = std::max<i64>(1, (T * N + D - 1) / D);
  Lattice abar = F.conj(od.a);
  Elt lp = opt.lambda_prime_override ? *opt.lambda_prime_override : lambda_prime(F, od);
  CycleData cd0 = make_cycle_data(F, abar, lp, Elt{});
  return PullbackSetup{F, od, abar, lp, D, M, T, context_for_window(F, cd0, M)};
}

SymCoeff pullback_constant(const Field& F, i64 D) {
  SymCoeff c;
  c.add(SymBasis::lambda_prime(), Rational(-1));
  c.add(SymBasis::log_v(), Rational(-F.h(), F.w()));
  return with_log_D(c, D);
}

QSeries rhs_series(const PullbackSetup& S, const PullbackOptions& opt, Exec exec) {
  i64 N = -S.field.disc();
  i64 Dr = opt.rhs_D_override ? opt.rhs_D_override : S.D;
  // theta must reach T + D M / N so that the phi terms below -T are all met
  Rational t_theta = Rational(S.T) + Rational(Dr * S.M, N);
  auto parts = parallel_map<QSeries>(
      static_cast<std::size_t>(N),
      [&](std::size_t i) {
        i64 a = static_cast<i64>(i);
        QSeries phi = phi_hat(S.ctx, S.cycle_data(a), S.M, {}, Exec::Serial);
        return series_mul_by_integral(theta_r(S.field, a, t_theta), series_rescale(phi, Dr), Exec::Serial);
      },
      exec);
  QSeries out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += parts[i];
  return out;
}

SymCoeff lhs_coeff(const PullbackSetup& S, i64 t, const Rational& beta_cut) {
  const Field& F = S.field;
  i64 N = -F.disc();
  SymCoeff out;
  i64 amax = isqrt((Rational(N) * (Rational(t) + beta_cut)).floor());
  for (i64 a = -amax; a <= amax; ++a) {
    i64 num = N * t - a * a;
    if (num == 0) {
      // alpha = +-sqrt(t) (or alpha = 0 at t = 0): the constant term at D v
      out += pullback_constant(F, S.D);
      continue;
    }
    if (num % S.D != 0) continue;
    i64 m = num / S.D;
    CycleData cd = S.cycle_data(a);
    if (m > 0) {
      out += deg_Z(S.ctx, m, cd);
    } else {
      Rational x = Rational(a * a, N) - Rational(t);
      if (x > beta_cut) continue;
      i64 n = count_top(S.ctx, m, cd);
      if (n) out.add(SymBasis::beta1(x), Rational(n, F.w()));
    }
  }
  return out;
}

std::string TheoremBReport::summary() const {
  std::ostringstream os;
  os << rows.size() << " coefficients, " << mismatches << " mismatches; non-integral audit " << nonintegral_checked
     << " checked, " << nonintegral_nonzero << " nonzero; constant " << (constant_ok ? "ok" : "MISMATCH")
     << "; numeric max diff " << max_numeric_diff;
  return os.str();
}

TheoremBReport verify_theorem_B(const Field& F, const OrderData& od, i64 T, const PullbackOptions& opt, Exec exec) {
  PullbackSetup S = make_pullback(F, od, T, opt);
  QSeries rhs = rhs_series(S, opt, exec);
  TheoremBReport rep;
  rep.precision = rhs.precision();
  rep.beta_cut = rhs.beta_cut().value_or(Rational(0));
  if (rep.precision < Rational(T)) throw std::logic_error("right side precision below target");
  auto lhs = parallel_map<SymCoeff>(
      static_cast<std::size_t>(T + 1), [&](std::size_t t) { return lhs_coeff(S, static_cast<i64>(t), rep.beta_cut); },
      exec);
  NumericContext nctx = numeric_context(F);
  for (i64 t = 0; t <= T; ++t) {
    TheoremBRow row{t, rhs.at(Rational(t)), lhs[static_cast<std::size_t>(t)], false};
    row.equal = row.rhs == row.lhs;
    if (!row.equal) ++rep.mismatches;
    for (double v : {0.5, 1.0, 3.0}) {
      double d = std::fabs(numeric_eval(row.rhs, v, nctx) - numeric_eval(row.lhs, v, nctx));
      rep.max_numeric_diff = std::max(rep.max_numeric_diff, d);
    }
    rep.rows.push_back(std::move(row));
  }
  for (i64 j = rhs.min_exponent() ? (rhs.min_exponent()->floor() * rhs.grid()) : 0; j <= T * rhs.grid(); ++j) {
    Rational e(j, rhs.grid());
    if (e.is_integer()) continue;
    ++rep.nonintegral_checked;
    if (!rhs.at(e).is_zero()) ++rep.nonintegral_nonzero;
  }
  rep.constant_ok = strip_beta(rhs.at(Rational(0))) == pullback_constant(F, S.D);
  return rep;
}

std::pair<double, double> l_and_deriv_at_one(const Field& F) {
  const i64 N = -F.disc();
  const i64 K = 200000 / N + 1;
  long double L = 0, dL = 0;
  for (i64 a = 1; a <= N; ++a) {
    int c = F.chi(a);
    if (c == 0) continue;
    long double s = 0, ds = 0;
    for (i64 k = 0; k < K; ++k) {
      long double x = static_cast<long double>(a + k * N);
      s += 1.0L / x;
      ds -= std::log(x) / x;
    }
    // Euler-Maclaurin tail of sum_{k >= K} g(a + k N); the divergent parts of
    // the integrals cancel in the character sum
    long double x = static_cast<long double>(a + K * N), n = static_cast<long double>(N);
    long double lx = std::log(x);
    s += -lx / n + 0.5L / x + (n / 12.0L) / (x * x) - (n * n * n / 720.0L) * 6.0L / (x * x * x * x);
    ds -= -0.5L * lx * lx / n + 0.5L * lx / x - (n / 12.0L) * (1.0L - lx) / (x * x) +
          (n * n * n / 720.0L) * (11.0L - 6.0L * lx) / (x * x * x * x);
    L += c * s;
    dL += c * ds;
  }
  return {static_cast<double>(L), static_cast<double>(dL)};
}

ChowlaSelbergReport verify_chowla_selberg(const Field& F) {
  const double pi = std::numbers::pi;
  const i64 N = -F.disc();
  ChowlaSelbergReport rep;
  rep.disc = F.disc();
  auto [L1, dL1] = l_and_deriv_at_one(F);
  rep.direct = 0.5 * std::log(static_cast<double>(N)) + dL1 / L1 - 0.5 * std::log(pi) - 0.5 * euler_gamma_series();
  // L(s) = N^{-s} sum chi(a) zeta(s, a/N): L(0) = -(1/N) sum a chi(a) and
  // L'(0) = -log N L(0) + sum chi(a) log Gamma(a/N)
  double L0 = 0.0, dL0 = 0.0;
  for (i64 a = 1; a < N; ++a) {
    int c = F.chi(a);
    L0 -= c * static_cast<double>(a) / static_cast<double>(N);
    dL0 += c * std::lgamma(static_cast<double>(a) / static_cast<double>(N));
  }
  dL0 -= std::log(static_cast<double>(N)) * L0;
  // Lambda(s) = N^{s/2} pi^{-(s+1)/2} Gamma((s+1)/2) L(s) = Lambda(1 - s)
  double at0 = 0.5 * std::log(static_cast<double>(N)) - 0.5 * std::log(pi) + 0.5 * boost::math::digamma(0.5) + dL0 / L0;
  rep.completed = -at0;
  rep.theta_route = F.l_values().log_deriv;
  rep.diff = std::max(std::fabs(rep.direct - rep.completed), std::fabs(rep.theta_route - rep.completed));
  return rep;
}

}  // namespace ath
