#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ath/cycles.hpp"
#include "ath/quadfield.hpp"
#include "ath/symcoeff.hpp"
#include "ath/whittaker.hpp"

namespace ath {

// Local space at a finite ell is k with the form -scale * N(x); the lattice
// function is the one attached to (a, lambda, r). The coherent variant at
// support_prime p twists the form by kappa_p.
struct EisSetup {
  Field field;
  CycleData cd;
  Rational scale;
  std::optional<i64> support_prime;

  // scale = N(a) / delta_lambda, so that bold m = m / delta_lambda
  static EisSetup canonical(const Field& F, const CycleData& cd, std::optional<i64> p = std::nullopt);
  EisSetup with_support(i64 p) const;
  EisSetup with_scale(const Rational& s) const;
};

Rational canonical_scale(const Field& F, const CycleData& cd);
// local twist at a non-split p: p when inert, the least non-residue when ramified
i64 canonical_kappa(const Field& F, i64 p);

enum class EisVariant { Incoherent, Coherent };

// gamma-normalized local Whittaker polynomial at a finite ell
WhitPoly local_factor(const EisSetup& s, i64 ell, const Rational& m_bold, EisVariant v);

// primes where a local factor can differ from 1
std::vector<i64> relevant_primes(const EisSetup& s, const Rational& m_bold);
std::vector<std::pair<i64, WhitPoly>> local_factors(const EisSetup& s, const Rational& m_bold, EisVariant v);

// coefficient of the coherent series at support_prime; m_bold > 0
Rational coherent_coeff(const EisSetup& s, const Rational& m_bold);
// coherent series whose odd place is the real one; m_bold < 0
Rational coherent_inf_coeff(const EisSetup& s, const Rational& m_bold);

// central derivative, m_bold > 0: zero unless Diff is a single finite prime.
// The local ratio at the Diff prime is checked against -c_p/2 (canonical
// scale only) and a logic_error is thrown on disagreement.
SymCoeff incoherent_deriv_coeff(const EisSetup& s, const Rational& m_bold);
// m_bold < 0: -1/2 BETA1(|m_bold|) times the coherent real-place coefficient
SymCoeff deriv_coeff_negative(const EisSetup& s, const Rational& m_bold);
// Eisenstein-side constant coefficient: -2 times the arithmetic constant term.
// The analytic constant term is not computed independently.
SymCoeff eis_constant_coeff(const Field& F, const CycleData& cd);

// dispatch on the sign of m_bold
SymCoeff eis_deriv_coeff(const EisSetup& s, const Rational& m_bold);

}  // namespace ath
