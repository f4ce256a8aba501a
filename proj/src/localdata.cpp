#include "ath/localdata.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ath/arith.hpp"

namespace ath {

PlaceData place_data(const Field& F, i64 p) {
  if (p == kInfinity) return {p, RamType::Real, 0};
  if (F.disc() % p == 0) return {p, RamType::Ramified, ord(F.disc(), p)};
  return {p, F.chi(p) == 1 ? RamType::Split : RamType::Inert, 0};
}

namespace {

// x = p^k * u with u a p-unit rational; returns k and u
std::pair<int, Rational> split_unit(const Rational& x, i64 p) {
  int k = x.ord(p);
  Rational u = x;
  i64 pk = 1;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) pk *= p;
  u = k >= 0 ? u / Rational(pk) : u * Rational(pk);
  return {k, u};
}

// integer representative of a p-unit rational modulo p (odd p) or 8 (p = 2)
i64 unit_residue(const Rational& u, i64 m) {
  i64 x, y;
  egcd(mod(u.den(), m), m, x, y);
  return mod(static_cast<i64>(static_cast<i128>(mod(u.num(), m)) * mod(x, m) % m), m);
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, i64 p) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("Hilbert symbol of zero");
  if (p == kInfinity) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
  auto [alpha, u] = split_unit(a, p);
  auto [beta, v] = split_unit(b, p);
  if (p != 2) {
    int s = 1;
    if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) s = -s;
    i64 ur = unit_residue(u, p), vr = unit_residue(v, p);
    if (beta & 1) s *= legendre(ur, p);
    if (alpha & 1) s *= legendre(vr, p);
    return s;
  }
  i64 ur = unit_residue(u, 8), vr = unit_residue(v, 8);
  auto eps = [](i64 z) { return ((z - 1) / 2) & 1; };
  auto omg = [](i64 z) { return ((z * z - 1) / 8) & 1; };
  i64 e = eps(ur) * eps(vr) + (alpha & 1) * omg(vr) + (beta & 1) * omg(ur);
  return (e & 1) ? -1 : 1;
}

int chi_p(const Field& F, const Rational& x, i64 p) { return hilbert_symbol(Rational(F.disc()), x, p); }

std::vector<i64> diff_set(const Field& F, const Rational& m) {
  if (m.is_zero()) throw std::invalid_argument("diff set of zero");
  std::set<i64> cand{2};
  for (i64 q : prime_divisors(F.disc())) cand.insert(q);
  if (m.num() != 1 && m.num() != -1)
    for (i64 q : prime_divisors(m.num())) cand.insert(q);
  if (m.den() != 1)
    for (i64 q : prime_divisors(m.den())) cand.insert(q);
  std::vector<i64> out;
  for (i64 q : cand)
    if (chi_p(F, -m, q) == -1) out.push_back(q);
  if (m.sign() < 0) out.insert(out.begin(), kInfinity);
  if (out.size() % 2 == 0) throw std::logic_error("diff set has even cardinality");
  return out;
}

std::vector<i64> diff_set_scaled(const Field& F, const CycleData& cd, i64 m) {
  if (m == 0) throw std::invalid_argument("diff set of zero");
  Rational x = Rational(m) * F.norm(cd.a);
  return diff_set(F, x);
}

i64 residue_mod_w(const Field& F, const Elt& z, i64 ell) {
  if (!F.in_local_ring(z, ell)) throw std::invalid_argument("element not w-integral");
  // omega = (disc + sqrt disc)/2 lies in w, so z = x + y omega reduces to x
  // (z integral at w forces x, y integral at ell)
  return unit_residue(z.a, ell) % ell;
}

Elt local_generator(const Field& F, const Lattice& I) {
  for (i64 R = 0; R < 400; ++R)
    for (i64 i = -R; i <= R; ++i)
      for (i64 j : {-R, R}) {
        for (int swap = 0; swap < 2; ++swap) {
          i64 s = swap ? j : i, t = swap ? i : j;
          Elt e = Rational(s) * I.v1() + Rational(t) * I.v2();
          if (e.is_zero()) continue;
          bool ok = true;
          for (i64 l : F.ramified())
            if (F.ord_ram(e, l) != F.ord_ram(I, l)) {
              ok = false;
              break;
            }
          if (ok) return e;
        }
      }
  throw std::runtime_error("no local generator found");
}

std::map<i64, LocalCosets> split_lambda_local(const Field& F, const CycleData& cd) {
  std::map<i64, LocalCosets> out;
  Elt g = local_generator(F, cd.a);
  Elt sd = F.sqrt_disc();
  for (i64 l : F.ramified()) {
    LocalCosets lc{0, 0};
    if (!cd.lambda.is_zero()) lc.lambda_res = residue_mod_w(F, F.div(F.mul(cd.lambda, sd), g), l);
    if (!cd.r.is_zero()) lc.r_res = residue_mod_w(F, F.mul(cd.r, sd), l);
    out[l] = lc;
  }
  return out;
}

}  // namespace ath
