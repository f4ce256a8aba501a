#pragma once

#include <map>
#include <vector>

#include "ath/quadfield.hpp"

namespace ath {

// Places are primes, with 0 standing for the real place.
constexpr i64 kInfinity = 0;

enum class RamType { Split, Inert, Ramified, Real };

struct PlaceData {
  i64 p;
  RamType ram_type;
  int ord_disc;
};

PlaceData place_data(const Field& F, i64 p);

int hilbert_symbol(const Rational& a, const Rational& b, i64 p);
int chi_p(const Field& F, const Rational& x, i64 p);

// Places where chi_p(-m) = -1, plus the real place when m < 0. The
// cardinality is odd by the product formula; this is asserted.
std::vector<i64> diff_set(const Field& F, const Rational& m);

// The set attached to a cycle family: the local space at ell is k with the
// form -N(a)/delta_lambda * N(x), so ell is bad when chi_ell(-m N(a)) = -1.
// This differs from diff_set(F, m/delta_lambda) at ramified ell, where the
// norm of a need not be a local square class.
std::vector<i64> diff_set_scaled(const Field& F, const CycleData& cd, i64 m);

// Residue in O/w = F_ell of a w-integral element, ell ramified.
i64 residue_mod_w(const Field& F, const Elt& z, i64 ell);

struct LocalCosets {
  i64 lambda_res;  // image of lambda in (d^{-1} a / a)_ell = F_ell
  i64 r_res;       // image of r in (d^{-1} / O)_ell = F_ell
};

// Local images of lambda and r at every ramified ell. Identifications with
// F_ell: r -> r sqrt(disc) mod w; lambda -> lambda sqrt(disc) / g mod w for a
// fixed element g of a with exact valuation at every ramified prime.
std::map<i64, LocalCosets> split_lambda_local(const Field& F, const CycleData& cd);

// An element of I whose valuation at each ramified prime equals that of I.
Elt local_generator(const Field& F, const Lattice& I);

}  // namespace ath
