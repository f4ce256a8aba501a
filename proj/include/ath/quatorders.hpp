#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ath/quadfield.hpp"

namespace ath {

// B = k + k delta, delta^2 = kappa, delta x = conj(x) delta.
struct QuatData {
  Rational kappa;
  std::vector<i64> ram;  // finite ramified primes
  bool definite = false;
  i64 D = 1;   // product of ram
  i64 D1 = 1;  // ramified primes dividing disc
  i64 D0 = 1;  // D / D1 (all inert in k)
  i64 delta2_norm = 1;  // |disc| / D1
};

// kappa > 0 (indefinite B); throws on kappa <= 0 and on a split algebra.
QuatData quat_from_kappa(const Field& F, const Rational& kappa);
// any nonzero kappa, no split check; used for the definite algebras
QuatData quat_data(const Field& F, const Rational& kappa);

// O = { [alpha, beta] : alpha in d2^{-1}, beta in a^{-1}, alpha + lambda beta in O_k }
struct OrderData {
  QuatData quat;
  Lattice a;
  Elt lambda;
  std::vector<i64> d2_primes;  // ramified ell not dividing D1
  Lattice d2_inv;
};

OrderData make_order(const Field& F, const QuatData& q, const Lattice& a, const Elt& lambda);
// a of the right norm (the different times an integral ideal of norm |kappa| D1 / D
// when that is available) with the first admissible lambda
OrderData default_order(const Field& F, const QuatData& q);

// coset representatives of d2^{-1} a / a that generate and satisfy
// N(lambda) = kappa modulo N(a) at every ell | Delta_2
std::vector<Elt> lambda_set(const Field& F, const QuatData& q, const Lattice& a);

struct QuatElt {
  Elt alpha;
  Elt beta;
};

QuatElt quat_mul(const Field& F, const Rational& kappa, const QuatElt& x, const QuatElt& y);
Rational reduced_trace(const Field& F, const QuatElt& x);
Rational reduced_norm(const Field& F, const Rational& kappa, const QuatElt& x);

bool order_membership(const Field& F, const OrderData& od, const Elt& alpha, const Elt& beta);
// Z-basis: [1,0], [omega,0], [-lambda b_i, b_i] for a basis b_i of a^{-1}
std::vector<QuatElt> order_basis(const Field& F, const OrderData& od);
// |det(trd(e_i e_j))| over the Z-basis; equals D^2 for a maximal order
Rational order_discriminant(const Field& F, const OrderData& od);

struct ClosureReport {
  int samples = 0;
  int product_violations = 0;
  int integrality_violations = 0;
  Rational discriminant{0};
  bool discriminant_ok = false;
  bool ok() const { return product_violations == 0 && integrality_violations == 0 && discriminant_ok; }
  std::string str() const;
};

ClosureReport ring_closure_check(const Field& F, const OrderData& od, int samples, std::uint64_t seed);

// b^{-1} O b for the idele of b: a -> b bbar^{-1} a, lambda_w -> (-1)^{ord_w b} lambda_w,
// with a global representative of the new lambda found by search.
OrderData conjugation_action(const Field& F, const OrderData& od, const Lattice& b);

// representative of abar a^{-1} lambda in d2^{-1} abar / abar, built prime by
// prime; its class agrees with that of -conj(lambda)
Elt lambda_prime(const Field& F, const OrderData& od);

// global element of d2^{-1} a congruent to the prescribed local signs times
// lambda at each w | d2 (modulo a_w)
Elt lift_lambda(const Field& F, const Lattice& a, const Elt& lambda, const std::vector<i64>& d2_primes,
                const std::vector<int>& signs, const Lattice& target_a);

}  // namespace ath
