#include "ath/cycles.hpp"

#include <stdexcept>

#include "ath/arith.hpp"
#include "ath/localdata.hpp"

namespace ath {

namespace {

Lattice prime_above(const Field& F, i64 l) { return F.ideal({Elt{Rational(l), 0}, F.sqrt_disc()}); }

bool kappa_admissible(const Field& F, i64 p, const Rational& kappa) {
  std::vector<i64> places{2, p};
  for (i64 l : F.ramified()) places.push_back(l);
  for (i64 l : prime_divisors(kappa.num())) places.push_back(l);
  for (i64 l : places)
    if (chi_p(F, kappa, l) != (l == p ? -1 : 1)) return false;
  return true;
}

}  // namespace

SupersingularModel make_model(const Field& F, i64 p, const ModelOptions& opt) {
  if (!is_prime(p) || F.chi(p) == 1) throw std::invalid_argument("supersingular model needs a non-split prime");
  bool ramified = F.disc() % p == 0;
  SupersingularModel M;
  M.p = p;
  int skip = opt.p0_skip;
  for (i64 q = 3;; q += 2) {
    if (!is_prime(q) || F.chi(q) != 1) continue;
    Rational kappa = ramified ? Rational(-q) : Rational(-q * p);
    if (!kappa_admissible(F, p, kappa)) continue;
    if (skip-- > 0) continue;
    M.p0 = q;
    M.kappa = kappa;
    break;
  }
  // prime above p0: (p0, b + omega) with p0 | N(b + omega)
  for (i64 b = 0; b < M.p0; ++b) {
    Lattice J(Rational(M.p0), Rational(b), Rational(1));
    if (F.is_ideal(J)) {
      M.P0 = opt.conj_P0 ? F.conj(J) : J;
      break;
    }
  }
  QuatData q = quat_data(F, M.kappa);
  if (q.ram != std::vector<i64>{p}) throw std::logic_error("definite algebra must ramify exactly at p");
  Lattice a = M.P0;
  for (i64 l : F.ramified())
    if (l != p) a = F.mul(a, prime_above(F, l));
  auto ls = lambda_set(F, q, a);
  if (ls.empty()) throw std::logic_error("no admissible lambda for the supersingular model");
  M.order = make_order(F, q, a, ls.front());
  if (ramified) {
    // mu mubar - kappa in p^{-1} disc Z_p; p^{-1} disc is a p-unit, so the
    // condition only asks mu to be p-integral
    for (i64 t = opt.mu_offset;; ++t) {
      Elt mu{Rational(t), 0};
      Rational d = (F.norm(mu) - M.kappa) * Rational(p) / Rational(F.disc());
      if (d.den() % p != 0) {
        M.mu_p = mu;
        break;
      }
    }
  }
  return M;
}

CycleContext::CycleContext(const Field& F, i64 max_prime) : F_(F), reps_(F.class_reps()) {
  for (i64 p = 2; p <= max_prime; ++p)
    if (is_prime(p) && F.chi(p) != 1) models_.emplace(p, make_model(F, p));
  for (i64 l : F.ramified())
    if (!models_.count(l)) models_.emplace(l, make_model(F, l));
}

CycleContext::CycleContext(const Field& F, std::vector<Lattice> class_reps,
                           std::map<i64, SupersingularModel> models)
    : F_(F), reps_(std::move(class_reps)), models_(std::move(models)) {}

const SupersingularModel& CycleContext::model(i64 p) const {
  auto it = models_.find(p);
  if (it == models_.end()) throw std::out_of_range("no supersingular model for p=" + std::to_string(p));
  return it->second;
}

i64 count_finite(const CycleContext& ctx, i64 m, i64 p, const CycleData& cd, CountRoute route) {
  const Field& F = ctx.field();
  if (m <= 0) throw std::invalid_argument("count_finite needs m > 0");
  if (F.chi(p) == 1) throw std::invalid_argument("count_finite needs a non-split prime");
  if (!cd.r_supported()) return 0;
  const SupersingularModel& M = ctx.model(p);
  const OrderData& od = M.order;
  bool ramified = F.disc() % p == 0;
  Rational Na = F.norm(cd.a);
  Rational target = Rational(m) / (Na * (-M.kappa));
  Elt lam_bar = F.conj(cd.lambda);
  Lattice base = F.mul(F.inv(M.P0), F.inv(F.conj(cd.a)));
  i64 total = 0;
  for (const Lattice& b : ctx.class_reps()) {
    Lattice Y = F.mul(F.mul(b, F.inv(F.conj(b))), base);
    std::optional<OrderData> ob;
    if (route == CountRoute::Global) ob = conjugation_action(F, od, F.conj(b));
    for (const Elt& y : F.vectors_of_norm(Y, target)) {
      Elt beta = F.mul(y, lam_bar);
      if (route == CountRoute::Global) {
        if (order_membership(F, *ob, cd.r, beta)) ++total;
        continue;
      }
      if (ramified && (!F.in_local_ring(cd.r, p) || !F.in_local_ring(beta, p))) continue;
      bool ok = true;
      for (i64 l : od.d2_primes)
        if (!F.in_local_ring(cd.r + F.mul(od.lambda, beta), l)) {
          ok = false;
          break;
        }
      if (ok) ++total;
    }
  }
  return total;
}

i64 count_top(const CycleContext& ctx, i64 m, const CycleData& cd) {
  const Field& F = ctx.field();
  if (m >= 0) throw std::invalid_argument("count_top needs m < 0");
  if (!cd.r_supported()) return 0;
  Rational target = Rational(-m) / F.norm(cd.a);
  Elt lam_bar = F.conj(cd.lambda);
  Lattice base = F.inv(F.conj(cd.a));
  i64 total = 0;
  for (const Lattice& b : ctx.class_reps()) {
    Lattice Y = F.mul(F.mul(b, F.inv(F.conj(b))), base);
    for (const Elt& y : F.vectors_of_norm(Y, target)) {
      Elt z = cd.r + F.mul(y, lam_bar);
      bool ok = true;
      for (i64 l : F.ramified())
        if (!F.in_local_ring(z, l)) {
          ok = false;
          break;
        }
      if (ok) ++total;
    }
  }
  return total;
}

i64 nu_p(const Field& F, i64 m, i64 p, const CycleData& cd) {
  if (m <= 0) throw std::invalid_argument("nu_p needs m > 0");
  if (F.chi(p) == 1) throw std::invalid_argument("nu_p needs a non-split prime");
  if (F.disc() % p != 0) {
    int o = ord(m, p);
    if (o % 2 == 0) throw std::invalid_argument("even order at an inert prime");
    return (o + 1) / 2;
  }
  i64 v = (Rational(m) * Rational(-F.disc()) / Rational(cd.delta_lambda)).ord(p);
  if (v <= 0) throw std::invalid_argument("length is not positive");
  return v;
}

i64 c_p(const Field& F, i64 m, i64 p, const CycleData& cd) {
  if (m <= 0) throw std::invalid_argument("c_p needs m > 0");
  if (F.chi(p) == 1) throw std::invalid_argument("c_p needs a non-split prime");
  if (F.disc() % p != 0) return ord(m, p) + 1;
  i64 v = (Rational(m) * Rational(-F.disc()) / Rational(cd.delta_lambda)).ord(p);
  if (v <= 0) throw std::invalid_argument("multiplier is not positive");
  return v;
}

SymCoeff constant_term(const Field& F, const CycleData& cd) {
  SymCoeff c;
  if (!cd.r_integral()) return c;
  c.add(SymBasis::lambda_prime(), Rational(-1));
  c.add(SymBasis::log_v(), Rational(-F.h(), F.w()));
  return c;
}

SymCoeff deg_Z(const CycleContext& ctx, i64 m, const CycleData& cd, const DegOptions& opt) {
  const Field& F = ctx.field();
  if (m == 0) return constant_term(F, cd);
  if (m < 0) {
    i64 n = count_top(ctx, m, cd);
    return SymCoeff(SymBasis::beta1(Rational(-m, cd.delta_lambda)), Rational(n, F.w()));
  }
  auto diff = diff_set_scaled(F, cd, m);
  if (diff.size() != 1 || diff[0] == kInfinity) return {};
  i64 p = diff[0];
  i64 n = count_finite(ctx, m, p, cd);
  if (n == 0) return {};
  i64 nu = nu_p(F, m, p, cd) + opt.nu_shift;
  // log N(P) summed over the primes above p: residue degree 2 at an inert
  // prime, one prime of degree 1 at a ramified prime
  i64 c = F.disc() % p == 0 ? nu : 2 * nu;
  if (opt.nu_shift == 0 && c != c_p(F, m, p, cd)) throw std::logic_error("length and multiplier disagree");
  return SymCoeff(SymBasis::log_p(p), Rational(n * c, F.w()));
}

}  // namespace ath
