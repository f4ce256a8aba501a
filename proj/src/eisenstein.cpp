#include "ath/eisenstein.hpp"

#include <set>
#include <stdexcept>

#include "ath/arith.hpp"
#include "ath/localdata.hpp"

namespace ath {

namespace {

Rational pow_r(i64 p, int e) {
  Rational r(1);
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= Rational(p);
  return e < 0 ? r.inv() : r;
}

void add_primes(std::set<i64>& out, const Rational& x) {
  if (x.is_zero()) return;
  if (x.num() != 1 && x.num() != -1)
    for (i64 q : prime_divisors(x.num())) out.insert(q);
  if (x.den() != 1)
    for (i64 q : prime_divisors(x.den())) out.insert(q);
}

bool contains(const std::vector<i64>& v, i64 x) {
  for (i64 y : v)
    if (y == x) return true;
  return false;
}

WhitPoly ramified_factor(const EisSetup& s, i64 ell, const Rational& m_bold, bool twist) {
  const Field& F = s.field;
  const CycleData& cd = s.cd;
  bool r_int = !contains(cd.r_primes, ell);
  if (twist && !r_int) return WhitPoly::zero(ell);
  bool in_lambda = contains(cd.lambda_primes, ell);
  if (!in_lambda && !r_int) return WhitPoly::zero(ell);
  // x -> x lambda (or a local generator of a^{-1}) carries the lattice to
  // O_ell or r + O_ell inside (k_ell, t N)
  Rational t = in_lambda ? -s.scale / F.norm(cd.lambda)
                         : -s.scale * F.norm(local_generator(F, F.inv(cd.a)));
  if (twist) t *= Rational(canonical_kappa(F, ell));
  Rational m = m_bold;
  int c = t.ord(ell);
  if (c < 0) {
    Rational u = pow_r(ell, c);
    t /= u;
    m /= u;
    c = 0;
  }
  if (r_int) {
    int N = m.ord(ell);
    if (N < 0) return WhitPoly::zero(ell);
    return whit_ramified_center(N, c, chi_p(F, t * m, ell), ell);
  }
  Rational x = m - t * F.norm(cd.r);
  if (x.is_zero()) return whit_ramified_offcenter(c, c, ell);
  int cx = x.ord(ell);
  if (cx < 0) return WhitPoly::zero(ell);
  return whit_ramified_offcenter(cx, c, ell);
}

}  // namespace

Rational canonical_scale(const Field& F, const CycleData& cd) {
  return F.norm(cd.a) / Rational(cd.delta_lambda);
}

i64 canonical_kappa(const Field& F, i64 p) {
  if (F.chi(p) == 1) throw std::invalid_argument("twist needs a non-split prime");
  if (F.disc() % p != 0) return p;
  for (i64 u = 2;; ++u)
    if (legendre(u, p) == -1) return u;
}

EisSetup EisSetup::canonical(const Field& F, const CycleData& cd, std::optional<i64> p) {
  if (F.disc() % 2 == 0) throw std::invalid_argument("even discriminant out of scope");
  return EisSetup{F, cd, canonical_scale(F, cd), p};
}

EisSetup EisSetup::with_support(i64 p) const {
  EisSetup s = *this;
  s.support_prime = p;
  return s;
}

EisSetup EisSetup::with_scale(const Rational& sc) const {
  if (sc.sign() <= 0) throw std::invalid_argument("scale must be positive");
  EisSetup s = *this;
  s.scale = sc;
  return s;
}

WhitPoly local_factor(const EisSetup& s, i64 ell, const Rational& m_bold, EisVariant v) {
  const Field& F = s.field;
  if (ell == 2 && F.disc() % 2 == 0) throw std::invalid_argument("ell = 2 ramified is out of scope");
  if (m_bold.is_zero()) throw std::invalid_argument("local factor at m = 0");
  bool twist = v == EisVariant::Coherent && s.support_prime && *s.support_prime == ell;
  if (F.disc() % ell == 0) return ramified_factor(s, ell, m_bold, twist);
  int k = s.scale.ord(ell) - F.norm(s.cd.a).ord(ell) + (twist ? 1 : 0);
  return whit_unramified(F.chi(ell), m_bold.ord(ell) - k, ell);
}

std::vector<i64> relevant_primes(const EisSetup& s, const Rational& m_bold) {
  std::set<i64> out;
  add_primes(out, m_bold);
  add_primes(out, s.scale);
  add_primes(out, s.field.norm(s.cd.a));
  for (i64 l : s.field.ramified()) out.insert(l);
  if (s.support_prime) out.insert(*s.support_prime);
  return {out.begin(), out.end()};
}

std::vector<std::pair<i64, WhitPoly>> local_factors(const EisSetup& s, const Rational& m_bold, EisVariant v) {
  std::vector<std::pair<i64, WhitPoly>> out;
  for (i64 l : relevant_primes(s, m_bold)) out.emplace_back(l, local_factor(s, l, m_bold, v));
  return out;
}

Rational coherent_coeff(const EisSetup& s, const Rational& m_bold) {
  if (!s.support_prime) throw std::invalid_argument("coherent coefficient needs a support prime");
  if (m_bold.sign() <= 0) throw std::invalid_argument("coherent coefficient needs m > 0");
  Rational prod(2);
  for (auto& [l, w] : local_factors(s, m_bold, EisVariant::Coherent)) {
    prod *= w.value();
    if (prod.is_zero()) break;
  }
  return prod;
}

Rational coherent_inf_coeff(const EisSetup& s, const Rational& m_bold) {
  if (m_bold.sign() >= 0) throw std::invalid_argument("real-place coefficient needs m < 0");
  EisSetup t = s;
  t.support_prime.reset();
  Rational prod(2);
  for (auto& [l, w] : local_factors(t, m_bold, EisVariant::Incoherent)) {
    prod *= w.value();
    if (prod.is_zero()) break;
  }
  return prod;
}

SymCoeff incoherent_deriv_coeff(const EisSetup& s, const Rational& m_bold) {
  if (m_bold.sign() <= 0) throw std::invalid_argument("incoherent derivative needs m > 0");
  const Field& F = s.field;
  auto diff = diff_set(F, m_bold * s.scale);
  if (diff.size() != 1 || diff[0] == kInfinity) return {};
  i64 p = diff[0];
  EisSetup sp = s.with_support(p);
  Rational rest(1);
  for (i64 l : relevant_primes(sp, m_bold)) {
    if (l == p) continue;
    rest *= local_factor(sp, l, m_bold, EisVariant::Incoherent).value();
    if (rest.is_zero()) return {};
  }
  WhitPoly inc = local_factor(sp, p, m_bold, EisVariant::Incoherent);
  if (!inc.value().is_zero()) throw std::logic_error("local value at the Diff prime is nonzero");
  Rational d = inc.deriv_log_p();
  Rational coh = local_factor(sp, p, m_bold, EisVariant::Coherent).value();
  if (coh.is_zero()) {
    if (!d.is_zero()) throw std::logic_error("derivative without a coherent value");
  } else if (s.scale == canonical_scale(F, s.cd)) {
    Rational m = m_bold * Rational(s.cd.delta_lambda);
    if (m.is_integer() && -d / coh != Rational(-c_p(F, m.num(), p, s.cd), 2))
      throw std::logic_error("local derivative ratio disagrees with -c_p/2");
  }
  // global gamma product is -1 for the incoherent family, 2 from the real place
  return SymCoeff(SymBasis::log_p(p), Rational(-2) * d * rest);
}

SymCoeff deriv_coeff_negative(const EisSetup& s, const Rational& m_bold) {
  if (m_bold.sign() >= 0) throw std::invalid_argument("negative-index derivative needs m < 0");
  auto diff = diff_set(s.field, m_bold * s.scale);
  if (diff.size() != 1) return {};
  Rational coh = coherent_inf_coeff(s, m_bold);
  if (coh.is_zero()) return {};
  return SymCoeff(SymBasis::beta1(-m_bold), Rational(-1, 2) * coh);
}

SymCoeff eis_constant_coeff(const Field& F, const CycleData& cd) { return Rational(-2) * constant_term(F, cd); }

SymCoeff eis_deriv_coeff(const EisSetup& s, const Rational& m_bold) {
  if (m_bold.is_zero()) return eis_constant_coeff(s.field, s.cd);
  return m_bold.sign() > 0 ? incoherent_deriv_coeff(s, m_bold) : deriv_coeff_negative(s, m_bold);
}

}  // namespace ath
