#include <doctest.h>

#include <random>

#include "ath/arith.hpp"
#include "ath/genfun.hpp"
#include "ath/localdata.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ath;

TEST_CASE("phi_hat examples") {
  Field F = Field::make(-7);
  CycleData triv = fixture::trivial(F);
  CycleContext ctx = context_for_window(F, triv, 40);
  QSeries phi = phi_hat(ctx, triv, 40);
  CHECK(phi.grid() == 1);
  CHECK(phi.precision() == Rational(40));
  CHECK(phi.at(-1) == SymCoeff(SymBasis::beta1(1), 1));
  CHECK(phi.at(0) == constant_term(F, triv));
  int size3 = 0;
  for (i64 m = 1; m <= 40; ++m) {
    auto diff = diff_set_scaled(F, triv, m);
    if (diff.size() != 1) {
      size3 += diff.size() == 3;
      CHECK(phi.at(m).is_zero());
    }
  }
  CHECK(size3 > 0);

  Elt isd = fixture::inv_sqrt_disc(F);
  CycleData cr = make_cycle_data(F, F.ring(), isd, isd);
  QSeries pr = phi_hat(context_for_window(F, cr, 70), cr, 70);
  CHECK(pr.grid() == 7);
  CHECK(pr.precision() == Rational(10));
  CHECK(pr.at(0).is_zero());
  CHECK_THROWS_AS(phi_hat(ctx, triv, 0), std::invalid_argument);
}

TEST_CASE("phi_hat positive coefficients sit on one LOG_P") {
  for (i64 d : {-11, -15, -23}) {
    Field F = Field::make(d);
    for (auto& cd : fixture::standard_configs(F)) {
      i64 M = 30 * cd.delta_lambda;
      QSeries phi = phi_hat(context_for_window(F, cd, M), cd, M);
      for (auto& [e, c] : phi.coeffs()) {
        if (e <= Rational(0) || c.is_zero()) continue;
        REQUIRE(c.terms().size() == 1);
        auto& [sym, v] = *c.terms().begin();
        CHECK(sym.tag == Sym::LOG_P);
        CHECK(v > Rational(0));
        CHECK(diff_set_scaled(F, cd, (e * Rational(cd.delta_lambda)).num()) == std::vector<i64>{sym.p});
      }
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  Field F = Field::make(-23);
  for (auto& cd : fixture::standard_configs(F)) {
    i64 M = 20 * cd.delta_lambda;
    CycleContext ctx = context_for_window(F, cd, M);
    CHECK(phi_hat(ctx, cd, M, {}, Exec::Serial) == phi_hat(ctx, cd, M, {}, Exec::Parallel));
    CHECK(eis_side(F, cd, M, Exec::Serial) == eis_side(F, cd, M, Exec::Parallel));
    auto a = verify_theorem_A(ctx, cd, M, {}, Exec::Serial);
    auto b = verify_theorem_A(ctx, cd, M, {}, Exec::Parallel);
    CHECK(a.mismatches == b.mismatches);
    CHECK(a.nonzero == b.nonzero);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].eis == b.rows[i].eis);
  }
  std::mt19937_64 rng(17);
  for (int it = 0; it < 5; ++it) {
    GluedLattice L = random_glued_lattice(rng);
    auto s = lattice_theta_factorization_check(L, 12, Exec::Serial);
    auto p = lattice_theta_factorization_check(L, 12, Exec::Parallel);
    CHECK(s.lhs == p.lhs);
    CHECK(s.rhs == p.rhs);
  }
}

TEST_CASE("verify_theorem_A on the trivial configuration") {
  Field F = Field::make(-7);
  CycleData triv = fixture::trivial(F);
  CycleContext ctx = context_for_window(F, triv, 40);
  auto rep = verify_theorem_A(ctx, triv, 40);
  CHECK(rep.ok());
  CHECK(rep.rows.size() == 81);
  CHECK(rep.nonzero > 10);
  CHECK(rep.first_mismatch() == nullptr);
  for (auto& r : rep.rows)
    if (r.eis.is_zero() && r.phi_m2.is_zero()) CHECK(r.equal);
}

TEST_CASE("verify_theorem_A reports an injected length error at the first affected coefficient") {
  Field F = Field::make(-7);
  CycleData triv = fixture::trivial(F);
  CycleContext ctx = context_for_window(F, triv, 40);
  auto rep = verify_theorem_A(ctx, triv, 40, DegOptions{1});
  CHECK_FALSE(rep.ok());
  i64 first = 0;
  for (i64 m = 1; m <= 40 && !first; ++m)
    if (!deg_Z(ctx, m, triv).is_zero()) first = m;
  REQUIRE(first > 0);
  const CoeffCheck* mm = rep.first_mismatch();
  REQUIRE(mm != nullptr);
  CHECK(mm->exponent == Rational(first));
  CHECK_FALSE(mm->provenance.empty());
}

TEST_CASE("theta_r examples and symmetries") {
  Field F = Field::make(-7);
  QSeries t0 = theta_r(F, 0, Rational(30));
  CHECK(t0.at(0) == SymCoeff(Rational(1)));
  CHECK(t0.at(7) == SymCoeff(Rational(2)));
  CHECK(t0.at(28) == SymCoeff(Rational(2)));
  CHECK(t0.coeffs().size() == 3);
  QSeries t1 = theta_r(F, 1, Rational(10));
  CHECK(t1.grid() == 7);
  CHECK(t1.at(Rational(1, 7)) == SymCoeff(Rational(1)));
  CHECK(t1.at(Rational(36, 7)) == SymCoeff(Rational(1)));
  CHECK(t1.at(Rational(64, 7)) == SymCoeff(Rational(1)));
  CHECK(t1.coeffs().size() == 3);
  for (i64 d : {-7, -11, -15, -23}) {
    Field G = Field::make(d);
    i64 N = -d;
    Rational T(20);
    QSeries all(N, T);
    i64 const_total = 0;
    for (i64 a = 0; a < N; ++a) {
      QSeries t = theta_r(G, a, T);
      CHECK(t == theta_r(G, mod(-a, N), T));
      for (auto& [e, c] : t.coeffs()) CHECK(c.as_integer().has_value());
      const_total += t.at(0).as_integer().value_or(0);
      all += t;
    }
    CHECK(const_total == 1);
    for (i64 a = -isqrt(20 * N); a <= isqrt(20 * N); ++a) {
      Rational e(a * a, N);
      i64 expect = a == 0 ? 1 : 2;
      CHECK(all.at(e).as_integer().value() == expect);
    }
    CHECK(theta_index(G, Rational(3) * fixture::inv_sqrt_disc(G)) == 3);
    CHECK_THROWS_AS(theta_index(G, Elt{Rational(1, 2), 0}), std::invalid_argument);
  }
}

TEST_CASE("lattice theta factorization examples") {
  // Z^2 with x^2 + y^2 split into two lines: r_2(n) = 4 sum chi_{-4}(d)
  GluedLattice sq{{{2, 0}, {0, 2}}, 1, {Rational(0), Rational(0)}};
  auto r = lattice_theta_factorization_check(sq, 30);
  CHECK(r.ok());
  CHECK(r.lhs.at(0) == SymCoeff(Rational(1)));
  CHECK(r.rhs.at(0) == SymCoeff(Rational(1)));
  for (i64 n = 1; n <= 30; ++n) CHECK(r.lhs.at(n) == SymCoeff(Rational(4 * oracle::rho(-4, n))));
  GluedLattice d13{{{2, 0}, {0, 6}}, 1, {Rational(0), Rational(0)}};
  CHECK(lattice_theta_factorization_check(d13, 30).ok());
  GluedLattice glued{{{2, 0}, {0, 2}}, 1, {Rational(1, 2), Rational(1, 2)}};
  auto g = lattice_theta_factorization_check(glued, 20);
  CHECK(g.ok());
  CHECK(g.glue_order == 2);
  // Z^2 + Z(1/2, 1/2) with x^2 + y^2 is Z^2 with (u^2 + v^2) / 2
  for (i64 n = 1; n <= 20; ++n) CHECK(g.lhs.at(Rational(n, 2)) == SymCoeff(Rational(4 * oracle::rho(-4, n))));
  GluedLattice skew{{{2, 1}, {1, 2}}, 1, {Rational(0), Rational(0)}};
  CHECK_THROWS_AS(lattice_theta_factorization_check(skew, 10), std::invalid_argument);
  GluedLattice indef{{{2, 0}, {0, -2}}, 1, {Rational(0), Rational(0)}};
  CHECK_THROWS_AS(lattice_theta_factorization_check(indef, 10), std::invalid_argument);
}

TEST_CASE("random glued lattices factor") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 10; ++it) {
    GluedLattice L = random_glued_lattice(rng);
    CHECK(L.gram.size() >= 2);
    CHECK(L.gram.size() <= 4);
    auto r = lattice_theta_factorization_check(L, 15);
    CHECK_MESSAGE(r.ok(), L.str());
    CHECK(r.compared > 1);
  }
}
