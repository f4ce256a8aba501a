#include "ath/quatorders.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ath/arith.hpp"
#include "ath/localdata.hpp"

namespace ath {

QuatData quat_data(const Field& F, const Rational& kappa) {
  if (kappa.is_zero()) throw std::invalid_argument("kappa must be nonzero");
  QuatData q;
  q.kappa = kappa;
  q.definite = kappa.sign() < 0;
  std::set<i64> cand{2};
  for (i64 p : prime_divisors(F.disc())) cand.insert(p);
  if (kappa.num() != 1 && kappa.num() != -1)
    for (i64 p : prime_divisors(kappa.num())) cand.insert(p);
  if (kappa.den() != 1)
    for (i64 p : prime_divisors(kappa.den())) cand.insert(p);
  for (i64 p : cand)
    if (hilbert_symbol(kappa, Rational(F.disc()), p) == -1) q.ram.push_back(p);
  std::size_t expected_parity = q.definite ? 1 : 0;
  if (q.ram.size() % 2 != expected_parity) throw std::logic_error("ramification set has wrong parity");
  for (i64 p : q.ram) {
    q.D *= p;
    if (F.disc() % p == 0)
      q.D1 *= p;
    else if (F.chi(p) != -1)
      throw std::logic_error("ramified prime of B split in k");
  }
  q.D0 = q.D / q.D1;
  q.delta2_norm = -F.disc() / q.D1;
  return q;
}

QuatData quat_from_kappa(const Field& F, const Rational& kappa) {
  if (kappa.sign() <= 0) throw std::invalid_argument("kappa must be positive (indefinite algebra)");
  QuatData q = quat_data(F, kappa);
  if (q.ram.empty()) throw std::invalid_argument("split algebra");
  return q;
}

namespace {

std::vector<i64> d2_primes_of(const Field& F, const QuatData& q) {
  std::vector<i64> out;
  for (i64 l : F.ramified())
    if (q.D1 % l != 0) out.push_back(l);
  return out;
}

Lattice d2_inverse(const Field& F, const std::vector<i64>& d2) {
  Lattice I = F.ring();
  for (i64 l : d2) I = F.mul(I, F.inv(F.ideal({Elt{Rational(l), 0}, F.sqrt_disc()})));
  return I;
}

// Enumerate nonzero vectors of a lattice in growing boxes until pred accepts.
template <class Pred>
std::optional<Elt> search_lattice(const Lattice& L, i64 max_radius, Pred pred) {
  for (i64 R = 1; R <= max_radius; ++R)
    for (i64 i = -R; i <= R; ++i)
      for (i64 j = -R; j <= R; ++j) {
        if (std::max(i < 0 ? -i : i, j < 0 ? -j : j) != R) continue;
        Elt e = Rational(i) * L.v1() + Rational(j) * L.v2();
        if (pred(e)) return e;
      }
  return std::nullopt;
}

}  // namespace

std::vector<Elt> lambda_set(const Field& F, const QuatData& q, const Lattice& a) {
  Rational want = q.kappa.abs() * Rational(-F.disc()) / Rational(q.D);
  if (F.norm(a) != want) throw std::invalid_argument("ideal norm must be |kappa| |disc| / D");
  auto d2 = d2_primes_of(F, q);
  Lattice big = F.mul(d2_inverse(F, d2), a);
  i64 index = q.delta2_norm;
  // coset representatives of big / a (cyclic of order index)
  std::vector<Elt> reps;
  for (i64 i = 0; i < index && static_cast<i64>(reps.size()) < index; ++i)
    for (i64 j = 0; j < index && static_cast<i64>(reps.size()) < index; ++j) {
      Elt e = Rational(i) * big.v1() + Rational(j) * big.v2();
      bool fresh = true;
      for (auto& r : reps)
        if (a.contains(e - r)) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(e);
    }
  std::vector<Elt> out;
  Rational Na = F.norm(a);
  for (auto& e : reps) {
    bool ok = true;
    for (i64 l : d2) {
      if (e.is_zero() || F.ord_ram(e, l) != F.ord_ram(a, l) - 1) {
        ok = false;
        break;
      }
      Rational diff = (F.norm(e) - q.kappa) / Na;
      if (diff.den() % l == 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(e);
  }
  return out;
}

OrderData make_order(const Field& F, const QuatData& q, const Lattice& a, const Elt& lambda) {
  OrderData od;
  od.quat = q;
  od.a = a;
  od.lambda = lambda;
  od.d2_primes = d2_primes_of(F, q);
  od.d2_inv = d2_inverse(F, od.d2_primes);
  Rational want = q.kappa.abs() * Rational(-F.disc()) / Rational(q.D);
  if (F.norm(a) != want) throw std::invalid_argument("ideal norm must be |kappa| |disc| / D");
  if (!F.mul(od.d2_inv, a).contains(lambda)) throw std::invalid_argument("lambda not in d2^{-1} a");
  return od;
}

OrderData default_order(const Field& F, const QuatData& q) {
  auto d2 = d2_primes_of(F, q);
  Rational cn = q.kappa.abs() * Rational(q.D1) / Rational(q.D);
  if (!cn.is_integer()) throw std::invalid_argument("no integral cofactor ideal");
  i64 n = cn.num();
  std::optional<Lattice> c;
  for (i64 d = 1; d * d <= n && !c; ++d) {
    if (n % (d * d) != 0) continue;
    i64 a0 = n / (d * d);
    if (gcd(a0, F.disc()) != 1) continue;
    for (i64 b = 0; b < a0 && !c; ++b) {
      Lattice J(Rational(a0), Rational(b), Rational(1));
      if (F.is_ideal(J)) c = F.scale(J, Rational(d));
    }
  }
  if (!c) throw std::invalid_argument("no ideal of the required norm");
  Lattice a = F.mul(F.inv(d2_inverse(F, d2)), *c);
  auto ls = lambda_set(F, q, a);
  if (ls.empty()) throw std::logic_error("empty lambda set");
  return make_order(F, q, a, ls.front());
}

QuatElt quat_mul(const Field& F, const Rational& kappa, const QuatElt& x, const QuatElt& y) {
  // (a1 + b1 d)(a2 + b2 d) = a1 a2 + kappa b1 conj(b2) + (a1 b2 + b1 conj(a2)) d
  Elt a = F.mul(x.alpha, y.alpha) + kappa * F.mul(x.beta, F.conj(y.beta));
  Elt b = F.mul(x.alpha, y.beta) + F.mul(x.beta, F.conj(y.alpha));
  return {a, b};
}

Rational reduced_trace(const Field& F, const QuatElt& x) { return F.trace(x.alpha); }

Rational reduced_norm(const Field& F, const Rational& kappa, const QuatElt& x) {
  return F.norm(x.alpha) - kappa * F.norm(x.beta);
}

bool order_membership(const Field& F, const OrderData& od, const Elt& alpha, const Elt& beta) {
  if (!od.d2_inv.contains(alpha)) return false;
  if (!F.inv(od.a).contains(beta)) return false;
  return F.integral(alpha + F.mul(od.lambda, beta));
}

std::vector<QuatElt> order_basis(const Field& F, const OrderData& od) {
  Lattice ainv = F.inv(od.a);
  std::vector<QuatElt> out{{Elt{1, 0}, Elt{}}, {F.omega(), Elt{}}};
  for (Elt b : {ainv.v1(), ainv.v2()}) out.push_back({-F.mul(od.lambda, b), b});
  return out;
}

Rational order_discriminant(const Field& F, const OrderData& od) {
  auto e = order_basis(F, od);
  Rational m[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = reduced_trace(F, quat_mul(F, od.quat.kappa, e[i], e[j]));
  // exact Gaussian elimination
  Rational det(1);
  for (int c = 0; c < 4; ++c) {
    int piv = -1;
    for (int r = c; r < 4; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      for (int k = 0; k < 4; ++k) std::swap(m[c][k], m[piv][k]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det.abs();
}

std::string ClosureReport::str() const {
  std::ostringstream os;
  os << "samples=" << samples << " product_violations=" << product_violations
     << " integrality_violations=" << integrality_violations << " disc=" << discriminant
     << (discriminant_ok ? " (ok)" : " (BAD)");
  return os.str();
}

ClosureReport ring_closure_check(const Field& F, const OrderData& od, int samples, std::uint64_t seed) {
  ClosureReport rep;
  rep.samples = samples;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<i64> coord(-6, 6);
  Lattice ainv = F.inv(od.a);
  auto random_member = [&]() {
    Elt gamma{Rational(coord(rng)), Rational(coord(rng))};
    Elt beta = Rational(coord(rng)) * ainv.v1() + Rational(coord(rng)) * ainv.v2();
    return QuatElt{gamma - F.mul(od.lambda, beta), beta};
  };
  for (int s = 0; s < samples; ++s) {
    QuatElt x = random_member(), y = random_member();
    if (!order_membership(F, od, x.alpha, x.beta) || !order_membership(F, od, y.alpha, y.beta))
      ++rep.product_violations;
    QuatElt z = quat_mul(F, od.quat.kappa, x, y);
    if (!order_membership(F, od, z.alpha, z.beta)) ++rep.product_violations;
    if (!reduced_trace(F, z).is_integer() || !reduced_norm(F, od.quat.kappa, z).is_integer() ||
        !reduced_trace(F, x).is_integer() || !reduced_norm(F, od.quat.kappa, x).is_integer())
      ++rep.integrality_violations;
  }
  if (!order_membership(F, od, Elt{1, 0}, Elt{})) ++rep.product_violations;
  rep.discriminant = order_discriminant(F, od);
  rep.discriminant_ok = rep.discriminant == Rational(od.quat.D) * Rational(od.quat.D);
  return rep;
}

Elt lift_lambda(const Field& F, const Lattice& a, const Elt& lambda, const std::vector<i64>& d2_primes,
                const std::vector<int>& signs, const Lattice& target_a) {
  Lattice big = F.mul(d2_inverse(F, d2_primes), target_a);
  auto ok = [&](const Elt& e) {
    for (std::size_t k = 0; k < d2_primes.size(); ++k) {
      i64 l = d2_primes[k];
      Elt diff = e - Rational(signs[k]) * lambda;
      if (!diff.is_zero() && F.ord_ram(diff, l) < F.ord_ram(a, l)) return false;
    }
    return true;
  };
  if (ok(Elt{})) return Elt{};
  auto e = search_lattice(big, 4096, ok);
  if (!e) throw std::runtime_error("lambda lift not found");
  return *e;
}

OrderData conjugation_action(const Field& F, const OrderData& od, const Lattice& b) {
  Lattice ratio = F.mul(b, F.inv(F.conj(b)));
  Lattice na = F.mul(ratio, od.a);
  std::vector<int> signs;
  for (i64 l : od.d2_primes) signs.push_back(F.ord_ram(b, l) % 2 == 0 ? 1 : -1);
  Elt nl = lift_lambda(F, od.a, od.lambda, od.d2_primes, signs, na);
  return make_order(F, od.quat, na, nl);
}

Elt lambda_prime(const Field& F, const OrderData& od) {
  // abar/a at w is (conj(pi)/pi)^{ord_w a} times a unit that is 1 mod w, and
  // conj(pi) = -pi for a uniformizer pi with pi^2 in Q
  std::vector<int> signs;
  for (i64 l : od.d2_primes) signs.push_back(F.ord_ram(od.a, l) % 2 == 0 ? 1 : -1);
  return lift_lambda(F, od.a, od.lambda, od.d2_primes, signs, F.conj(od.a));
}

}  // namespace ath
