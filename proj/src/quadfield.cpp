#include "ath/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ath/arith.hpp"

namespace ath {

std::string Elt::str() const {
  if (b.is_zero()) return a.str();
  return a.str() + (b.sign() < 0 ? " - " : " + ") + b.abs().str() + "w";
}

namespace {

i64 as_int(const Rational& r) {
  if (!r.is_integer()) throw std::logic_error("expected integer, got " + r.str());
  return r.num();
}

i128 isqrt128(i128 n) {
  if (n < 0) return -1;
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Lattice::Lattice(const Rational& x, const Rational& y, const Rational& z) : x_(x), y_(y), z_(z) {
  if (x.sign() <= 0 || z.sign() <= 0) throw std::invalid_argument("degenerate lattice");
  // reduce y into [0, x)
  Rational q(Rational(y / x).floor());
  y_ = y - q * x;
}

bool Lattice::contains(const Elt& e) const {
  Rational k = e.b / z_;
  if (!k.is_integer()) return false;
  return ((e.a - k * y_) / x_).is_integer();
}

std::string Lattice::str() const {
  return "[" + x_.str() + ", " + y_.str() + " + " + z_.str() + "w]";
}

std::vector<Form> reduced_forms(i64 disc) {
  std::vector<Form> out;
  i64 amax = isqrt(-disc / 3);
  for (i64 a = 1; a <= amax; ++a)
    for (i64 b = -a + 1; b <= a; ++b) {
      if (mod(b - disc, 2) != 0) continue;
      i64 num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      i64 c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (gcd(gcd(a, b), c) != 1) continue;
      out.push_back({a, b, c});
    }
  return out;
}

Field Field::make(i64 disc) {
  if (disc >= 0 || !is_fundamental(disc))
    throw std::invalid_argument("not a negative fundamental discriminant: " + std::to_string(disc));
  Field F;
  F.disc_ = disc;
  F.w_ = disc == -3 ? 6 : disc == -4 ? 4 : 2;
  F.forms_ = reduced_forms(disc);
  F.ramified_ = prime_divisors(disc);
  for (auto& f : F.forms_) F.form_ideals_.push_back(F.ideal_from_form(f));
  return F;
}

int Field::chi(i64 n) const { return kronecker(disc_, n); }

Elt Field::mul(const Elt& x, const Elt& y) const {
  Rational d(disc_);
  Rational c0 = Rational(narrow(static_cast<i128>(disc_) * disc_ - disc_)) / Rational(4);
  Rational bd = x.b * y.b;
  return {x.a * y.a - bd * c0, x.a * y.b + x.b * y.a + bd * d};
}

Elt Field::conj(const Elt& x) const { return {x.a + x.b * Rational(disc_), -x.b}; }

Rational Field::norm(const Elt& x) const {
  Rational c0 = Rational(narrow(static_cast<i128>(disc_) * disc_ - disc_)) / Rational(4);
  return x.a * x.a + x.a * x.b * Rational(disc_) + x.b * x.b * c0;
}

Elt Field::inv(const Elt& x) const {
  Rational n = norm(x);
  if (n.is_zero()) throw std::domain_error("inverse of zero element");
  Elt c = conj(x);
  return {c.a / n, c.b / n};
}

Lattice Field::lattice(const std::vector<Elt>& gens) const {
  i64 L = 1;
  for (auto& g : gens) L = lcm(lcm(L, g.a.den()), g.b.den());
  // integer Hermite form, rows (A, 0) and (B, C)
  i64 A = 0, B = 0, C = 0;
  for (auto& g : gens) {
    i64 u = as_int(g.a * Rational(L)), v = as_int(g.b * Rational(L));
    if (v == 0) {
      A = gcd(A, u);
      continue;
    }
    i64 s, t;
    i64 gg = egcd(C, v, s, t);
    i64 nB = narrow(static_cast<i128>(s) * B + static_cast<i128>(t) * u);
    i64 k = narrow(static_cast<i128>(v / gg) * B - static_cast<i128>(C / gg) * u);
    A = gcd(A, k);
    B = nB;
    C = gg;
    if (A != 0) B = mod(B, A);
  }
  if (A == 0 || C == 0) throw std::invalid_argument("generators do not span a rank-2 lattice");
  return Lattice(Rational(A, L), Rational(B, L), Rational(C, L));
}

Lattice Field::ideal(const std::vector<Elt>& gens) const {
  std::vector<Elt> all;
  for (auto& g : gens) {
    all.push_back(g);
    all.push_back(mul(g, omega()));
  }
  return lattice(all);
}

Lattice Field::ideal_from_form(const Form& f) const {
  // basis a, (-b + sqrt(disc)) / 2 = -(disc + b)/2 + omega
  return Lattice(Rational(f.a), Rational(-(disc_ + f.b), 2), Rational(1));
}

Lattice Field::mul(const Lattice& I, const Lattice& J) const {
  return lattice({mul(I.v1(), J.v1()), mul(I.v1(), J.v2()), mul(I.v2(), J.v1()), mul(I.v2(), J.v2())});
}

Lattice Field::conj(const Lattice& I) const { return lattice({conj(I.v1()), conj(I.v2())}); }

Lattice Field::inv(const Lattice& I) const {
  Rational n = norm(I);
  return scale(conj(I), Elt{n.inv(), 0});
}

Lattice Field::scale(const Lattice& I, const Elt& a) const {
  return lattice({mul(I.v1(), a), mul(I.v2(), a)});
}

bool Field::is_ideal(const Lattice& I) const {
  return I.contains(mul(I.v1(), omega())) && I.contains(mul(I.v2(), omega()));
}

int Field::ord_ram(const Elt& x, i64 ell) const {
  if (disc_ % ell != 0) throw std::invalid_argument("ord_ram needs a ramified prime");
  return norm(x).ord(ell);
}

int Field::ord_ram(const Lattice& I, i64 ell) const {
  if (disc_ % ell != 0) throw std::invalid_argument("ord_ram needs a ramified prime");
  return norm(I).ord(ell);
}

bool Field::in_local_ring(const Elt& x, i64 ell) const {
  return x.is_zero() || ord_ram(x, ell) >= 0;
}

std::vector<Elt> Field::vectors_of_norm(const Lattice& L, const Rational& target) const {
  std::vector<Elt> out;
  if (target.sign() <= 0) throw std::invalid_argument("target norm must be positive");
  // N(i v1 + j v2) = A i^2 + B i j + C j^2
  Elt v1 = L.v1(), v2 = L.v2();
  Rational A = norm(v1);
  Rational B = norm(v1 + v2) - norm(v1) - norm(v2);
  Rational C = norm(v2);
  i64 den = lcm(lcm(A.den(), B.den()), lcm(C.den(), target.den()));
  Rational Rd(den);
  i128 a = as_int(A * Rd), b = as_int(B * Rd), c = as_int(C * Rd), t = as_int(target * Rd);
  i128 disc4 = 4 * a * c - b * b;  // > 0
  // j^2 <= 4 a t / disc4
  i128 jmax = isqrt128(4 * a * t / disc4) + 1;
  for (i128 j = -jmax; j <= jmax; ++j) {
    i128 D = b * b * j * j - 4 * a * (c * j * j - t);
    if (D < 0) continue;
    i128 s = isqrt128(D);
    if (s * s != D) continue;
    for (int sign : {1, -1}) {
      if (sign == -1 && s == 0) break;
      i128 num = -b * j + sign * s;
      if (num % (2 * a) != 0) continue;
      i128 i = num / (2 * a);
      Elt e = Rational(static_cast<i64>(i)) * v1 + Rational(static_cast<i64>(j)) * v2;
      out.push_back(e);
    }
  }
  return out;
}

i64 Field::count_by_norm(const Lattice& L, const Rational& target, const Filter& keep) const {
  if (target.sign() <= 0) throw std::invalid_argument("target norm must be positive");
  i64 n = 0;
  for (auto& e : vectors_of_norm(L, target))
    if (!keep || keep(e)) ++n;
  return n;
}

std::optional<Elt> Field::principal_generator(const Lattice& I) const {
  auto v = vectors_of_norm(I, norm(I));
  if (v.empty()) return std::nullopt;
  return v.front();
}

bool Field::same_class(const Lattice& I, const Lattice& J) const {
  return is_principal(mul(I, inv(J)));
}

int Field::class_index(const Lattice& I) const {
  for (std::size_t k = 0; k < form_ideals_.size(); ++k)
    if (same_class(I, form_ideals_[k])) return static_cast<int>(k);
  throw std::logic_error("ideal matches no class");
}

namespace {

bool coprime_to_all(i64 n, i64 disc, const std::vector<i64>& avoid) {
  if (gcd(n, disc) != 1) return false;
  for (i64 q : avoid)
    if (q != 0 && gcd(n, q) != 1) return false;
  return true;
}

}  // namespace

std::vector<Lattice> Field::ideals_in_class(const Lattice& I, i64 max_norm,
                                            const std::vector<i64>& avoid) const {
  std::vector<Lattice> out;
  Rational c0 = Rational(narrow(static_cast<i128>(disc_) * disc_ - disc_)) / Rational(4);
  for (i64 a = 1; a <= max_norm; ++a) {
    if (!coprime_to_all(a, disc_, avoid)) continue;
    for (i64 b = 0; b < a; ++b) {
      // primitive ideal (a, b + omega) needs a | N(b + omega)
      Rational nb = Rational(b) * Rational(b) + Rational(b) * Rational(disc_) + c0;
      if (!(nb / Rational(a)).is_integer()) continue;
      Lattice J(Rational(a), Rational(b), Rational(1));
      if (same_class(J, I)) out.push_back(J);
    }
  }
  return out;
}

std::vector<Lattice> Field::class_reps(const std::vector<i64>& avoid) const {
  std::vector<Lattice> reps;
  for (auto& f : form_ideals_) {
    std::optional<Lattice> found;
    for (i64 bound = 8; !found; bound *= 2) {
      auto c = ideals_in_class(f, bound, avoid);
      if (!c.empty()) found = c.front();
      if (bound > (1 << 20)) throw std::runtime_error("no class representative found");
    }
    reps.push_back(*found);
  }
  return reps;
}

i64 Field::rho(i64 n) const {
  if (n <= 0) throw std::invalid_argument("rho needs n > 0");
  // integral ideal = d * (primitive ideal); primitive ideals of norm a are
  // the residues b mod a with a | N(b + omega)
  Rational c0 = Rational(narrow(static_cast<i128>(disc_) * disc_ - disc_)) / Rational(4);
  i64 total = 0;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % (d * d) != 0) continue;
    i64 a = n / (d * d);
    for (i64 b = 0; b < a; ++b) {
      Rational nb = Rational(b) * Rational(b) + Rational(b) * Rational(disc_) + c0;
      if ((nb / Rational(a)).is_integer()) ++total;
    }
  }
  return total;
}

int Field::ambiguous_forms() const {
  int n = 0;
  for (auto& f : forms_)
    if (f.b == 0 || f.b == f.a || f.a == f.c) ++n;
  return n;
}

bool CycleData::r_supported() const {
  for (i64 l : r_primes)
    if (std::find(lambda_primes.begin(), lambda_primes.end(), l) == lambda_primes.end()) return false;
  return true;
}

CycleData make_cycle_data(const Field& F, const Lattice& a, const Elt& lambda, const Elt& r) {
  if (!F.is_ideal(a)) throw std::invalid_argument("a is not a fractional ideal");
  if (F.disc() % 2 == 0) throw std::invalid_argument("even discriminant out of scope");
  Lattice dinv_a = F.mul(F.different_inv(), a);
  if (!dinv_a.contains(lambda)) throw std::invalid_argument("lambda not in d^{-1} a");
  if (!F.different_inv().contains(r)) throw std::invalid_argument("r not in d^{-1}");
  CycleData cd;
  cd.a = a;
  cd.lambda = lambda;
  cd.r = r;
  std::vector<Elt> dl_gens{{1, 0}}, dr_gens{{1, 0}};
  Lattice dl = F.ring(), dr = F.ring();
  for (i64 l : F.ramified()) {
    Lattice w = F.ideal({Elt{Rational(l), 0}, F.sqrt_disc()});  // prime above l
    bool lam_nontriv = !lambda.is_zero() && F.ord_ram(lambda, l) < F.ord_ram(a, l);
    bool r_nontriv = !F.in_local_ring(r, l);
    if (lam_nontriv) {
      cd.lambda_primes.push_back(l);
      cd.delta_lambda *= l;
      dl = F.mul(dl, w);
    }
    if (r_nontriv) {
      cd.r_primes.push_back(l);
      dr = F.mul(dr, w);
    }
  }
  cd.d_lambda = dl;
  cd.d_r = dr;
  return cd;
}

VariantResult variant_translate(const Field& F, const Rational& m, const Elt& mu, const Lattice& b) {
  if (F.disc() % 2 == 0) throw std::invalid_argument("even discriminant out of scope");
  Rational mp = m * Rational(-F.disc());
  if (!mp.is_integer()) throw std::invalid_argument("m|disc| must be an integer");
  Lattice binv = F.inv(b);
  Lattice a = F.mul(F.different(), binv);
  // lambda: element of b^{-1} with exact valuation at every ramified prime
  std::optional<Elt> lambda;
  for (i64 R = 1; !lambda && R < 200; ++R)
    for (i64 i = -R; i <= R && !lambda; ++i)
      for (i64 j = -R; j <= R && !lambda; ++j) {
        Elt e = Rational(i) * binv.v1() + Rational(j) * binv.v2();
        if (e.is_zero()) continue;
        bool ok = true;
        for (i64 l : F.ramified())
          if (F.ord_ram(e, l) != F.ord_ram(binv, l)) ok = false;
        if (ok) lambda = e;
      }
  if (!lambda) throw std::runtime_error("no generator found");
  Elt r = F.mul(*lambda, mu);
  return {as_int(mp), make_cycle_data(F, a, *lambda, r)};
}

}  // namespace ath
