#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ath/rational.hpp"

namespace ath {

// a + b*omega with omega = (disc + sqrt(disc)) / 2.
struct Elt {
  Rational a{0};
  Rational b{0};
  friend bool operator==(const Elt& x, const Elt& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Elt& x, const Elt& y) { return !(x == y); }
  Elt operator-() const { return {-a, -b}; }
  friend Elt operator+(const Elt& x, const Elt& y) { return {x.a + y.a, x.b + y.b}; }
  friend Elt operator-(const Elt& x, const Elt& y) { return {x.a - y.a, x.b - y.b}; }
  friend Elt operator*(const Rational& r, const Elt& x) { return {r * x.a, r * x.b}; }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  std::string str() const;
};

struct Form {
  i64 a, b, c;
  friend bool operator==(const Form&, const Form&) = default;
};

// Rank-2 lattice in k with Hermite basis {x, y + z*omega}, x > 0, z > 0,
// 0 <= y < x. Fractional ideals are lattices closed under omega.
class Lattice {
public:
  Lattice() = default;
  Lattice(const Rational& x, const Rational& y, const Rational& z);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }
  Elt v1() const { return {x_, 0}; }
  Elt v2() const { return {y_, z_}; }

  // index relative to Z + Z*omega; for a fractional ideal this is its norm
  Rational covolume() const { return x_ * z_; }
  bool contains(const Elt& e) const;
  bool contains(const Lattice& o) const { return contains(o.v1()) && contains(o.v2()); }
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }
  std::string str() const;

private:
  Rational x_{1}, y_{0}, z_{1};
};

struct LValues {
  double L1;            // L(1, chi)
  double Lambda1;       // sqrt|disc| * L(1) / pi
  double LambdaPrime1;  // derivative of the completed L-function at 1
  double faltings;      // LambdaPrime1 / (2 Lambda1)
  double log_deriv;     // Lambda'/Lambda at 1
  int terms;            // summation length
};

class Field {
public:
  static Field make(i64 disc);

  i64 disc() const { return disc_; }
  int w() const { return w_; }
  int h() const { return static_cast<int>(forms_.size()); }
  const std::vector<Form>& forms() const { return forms_; }
  const std::vector<i64>& ramified() const { return ramified_; }
  int chi(i64 n) const;  // Kronecker symbol (disc / n)

  // element arithmetic
  Elt mul(const Elt& x, const Elt& y) const;
  Elt conj(const Elt& x) const;
  Rational norm(const Elt& x) const;
  Rational trace(const Elt& x) const { return Rational(2) * x.a + x.b * Rational(disc_); }
  Elt inv(const Elt& x) const;
  Elt div(const Elt& x, const Elt& y) const { return mul(x, inv(y)); }
  Elt omega() const { return {0, 1}; }
  Elt sqrt_disc() const { return {Rational(-disc_), 2}; }
  bool integral(const Elt& x) const { return x.a.is_integer() && x.b.is_integer(); }

  // lattices and ideals
  Lattice lattice(const std::vector<Elt>& gens) const;  // Z-span
  Lattice ideal(const std::vector<Elt>& gens) const;    // O_k-span
  Lattice ring() const { return Lattice(1, 0, 1); }
  Lattice different() const { return ideal({sqrt_disc()}); }
  Lattice different_inv() const { return ideal({inv(sqrt_disc())}); }
  Lattice ideal_from_form(const Form& f) const;
  Lattice mul(const Lattice& I, const Lattice& J) const;
  Lattice conj(const Lattice& I) const;
  Lattice inv(const Lattice& I) const;  // fractional ideals only
  Lattice scale(const Lattice& I, const Elt& a) const;
  Lattice scale(const Lattice& I, const Rational& r) const { return scale(I, Elt{r, 0}); }
  Rational norm(const Lattice& I) const { return I.covolume(); }
  bool is_ideal(const Lattice& I) const;
  bool is_integral(const Lattice& I) const { return ring().contains(I); }

  // valuation at the prime above a ramified ell
  int ord_ram(const Elt& x, i64 ell) const;
  int ord_ram(const Lattice& I, i64 ell) const;
  bool in_local_ring(const Elt& x, i64 ell) const;  // ell ramified

  // number of lattice vectors of norm == target passing the filter
  using Filter = std::function<bool(const Elt&)>;
  std::vector<Elt> vectors_of_norm(const Lattice& L, const Rational& target) const;
  i64 count_by_norm(const Lattice& L, const Rational& target, const Filter& keep = {}) const;

  std::optional<Elt> principal_generator(const Lattice& I) const;
  bool is_principal(const Lattice& I) const { return principal_generator(I).has_value(); }
  bool same_class(const Lattice& I, const Lattice& J) const;
  int class_index(const Lattice& I) const;  // index into forms()

  // one integral ideal per class, norm coprime to disc and to every entry of
  // avoid; the principal class is first, the order follows forms()
  std::vector<Lattice> class_reps(const std::vector<i64>& avoid = {}) const;
  // all primitive integral ideals of norm n in the class of I (for choice tests)
  std::vector<Lattice> ideals_in_class(const Lattice& I, i64 max_norm,
                                       const std::vector<i64>& avoid = {}) const;

  i64 rho(i64 n) const;  // number of integral ideals of norm n
  int ambiguous_forms() const;

  LValues l_values() const;

private:
  i64 disc_ = 0;
  int w_ = 2;
  std::vector<Form> forms_;
  std::vector<i64> ramified_;
  std::vector<Lattice> form_ideals_;
};

std::vector<Form> reduced_forms(i64 disc);

// (a, lambda, r): a fractional ideal, lambda in d^{-1} a, r in d^{-1}.
struct CycleData {
  Lattice a;
  Elt lambda;
  Elt r;
  std::vector<i64> lambda_primes;  // ell with lambda nontrivial in (d^{-1}a/a)_ell
  std::vector<i64> r_primes;       // ell with r nontrivial in (d^{-1}/O)_ell
  i64 delta_lambda = 1;            // norm of d_lambda
  Lattice d_lambda;
  Lattice d_r;

  bool r_integral() const { return r_primes.empty(); }
  // d_r contained in d_lambda, i.e. r_primes is a subset of lambda_primes
  bool r_supported() const;
};

CycleData make_cycle_data(const Field& F, const Lattice& a, const Elt& lambda, const Elt& r);

struct VariantResult {
  i64 m;
  CycleData data;
};
// Z(m, mu; b) = Z(m|disc|; d b^{-1}, lambda, lambda mu)
VariantResult variant_translate(const Field& F, const Rational& m, const Elt& mu, const Lattice& b);

}  // namespace ath
