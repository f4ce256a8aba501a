#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ath/cycles.hpp"
#include "ath/eisenstein.hpp"
#include "ath/symcoeff.hpp"

namespace ath {

// Generating series on the grid 1/delta_lambda for |m| <= M, m = delta_lambda * exponent.
// Precision and BETA1 cut are both M / delta_lambda.
QSeries phi_hat(const CycleContext& ctx, const CycleData& cd, i64 M, const DegOptions& opt = {},
                Exec exec = Exec::Parallel);
// Central derivative of the incoherent Eisenstein series on the same window.
QSeries eis_side(const Field& F, const CycleData& cd, i64 M, Exec exec = Exec::Parallel);

// CycleContext with a model for every prime that can appear in a Diff set for |m| <= M
CycleContext context_for_window(const Field& F, const CycleData& cd, i64 M);

struct CoeffCheck {
  Rational exponent;
  SymCoeff eis;      // Eisenstein side
  SymCoeff phi_m2;   // -2 times the generating-series side
  bool equal = false;
  std::string provenance;  // filled on mismatch
};

struct TheoremAReport {
  std::vector<CoeffCheck> rows;
  int mismatches = 0;
  int nonzero = 0;
  bool ok() const { return mismatches == 0; }
  const CoeffCheck* first_mismatch() const;
};

// E-side coefficient against -2 phi_hat for every m in [-M, M]
TheoremAReport verify_theorem_A(const CycleContext& ctx, const CycleData& cd, i64 M, const DegOptions& opt = {},
                                Exec exec = Exec::Parallel);

// sum over a = a_r mod |disc| of q^{a^2/|disc|}; r = a_r / sqrt(disc)
QSeries theta_r(const Field& F, i64 a_r, const Rational& T);
// a_r for a trace-zero r in d^{-1}; throws otherwise
i64 theta_index(const Field& F, const Elt& r);

// L = (L0 + L1) + Z glue with L0, L1 the two diagonal blocks of gram.
// Q(x) = x^T gram x / 2.
struct GluedLattice {
  std::vector<std::vector<i64>> gram;
  int n0 = 0;
  std::vector<Rational> glue;
  std::string str() const;
};

struct FactorizationReport {
  i64 T = 0;
  i64 glue_order = 1;
  int compared = 0;
  int mismatches = 0;
  QSeries lhs;  // theta of L from its own basis
  QSeries rhs;  // sum over glue classes of the product of block thetas
  bool ok() const { return mismatches == 0; }
};

FactorizationReport lattice_theta_factorization_check(const GluedLattice& L, i64 T, Exec exec = Exec::Parallel);
// blocks of rank 1 or 2, total rank 2..4, glue of order 2 or 3
GluedLattice random_glued_lattice(std::mt19937_64& rng);

}  // namespace ath
