// Serial reference against the OpenMP path for the parallel kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "ath/genfun.hpp"
#include "ath/pullback.hpp"
#include "ath/symcoeff.hpp"

using namespace ath;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& st) {
  st.SetLabel(st.range(0) ? "parallel, " + std::to_string(max_threads()) + " threads" : "serial");
}

void BM_PhiHat(benchmark::State& st) {
  static const Field F = Field::make(-23);
  static const CycleData cd = make_cycle_data(F, F.ring(), Elt{}, Elt{});
  static const CycleContext ctx = context_for_window(F, cd, 200);
  for (auto _ : st) benchmark::DoNotOptimize(phi_hat(ctx, cd, 200, {}, exec_of(st)));
  label(st);
}

void BM_EisSide(benchmark::State& st) {
  static const Field F = Field::make(-39);
  static const CycleData cd = make_cycle_data(F, F.ring(), Elt{}, Elt{});
  for (auto _ : st) benchmark::DoNotOptimize(eis_side(F, cd, 400, exec_of(st)));
  label(st);
}

void BM_SeriesMul(benchmark::State& st) {
  std::mt19937_64 rng(1);
  QSeries theta(7, Rational(60)), phi(7, Rational(60));
  for (i64 j = 0; j <= 420; ++j)
    if (rng() % 3 == 0) theta.add_term(Rational(j, 7), SymCoeff(Rational(1 + static_cast<i64>(rng() % 3))));
  for (i64 j = -70; j <= 420; ++j)
    if (rng() % 2 == 0) phi.add_term(Rational(j, 7), SymCoeff(SymBasis::log_p(3), Rational(static_cast<i64>(rng() % 5))));
  for (auto _ : st) benchmark::DoNotOptimize(series_mul_by_integral(theta, phi, exec_of(st)));
  label(st);
}

void BM_ThetaFactorization(benchmark::State& st) {
  GluedLattice L{{{2, 1, 0, 0}, {1, 4, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 6}}, 2,
                 {Rational(1, 3), Rational(2, 3), Rational(1, 3), Rational(0)}};
  for (auto _ : st) benchmark::DoNotOptimize(lattice_theta_factorization_check(L, 30, exec_of(st)));
  label(st);
}

void BM_TheoremB(benchmark::State& st) {
  static const Field F = Field::make(-7);
  static const OrderData od = default_order(F, quat_from_kappa(F, 15));
  for (auto _ : st) benchmark::DoNotOptimize(verify_theorem_B(F, od, 8, {}, exec_of(st)));
  label(st);
}

}  // namespace

BENCHMARK(BM_PhiHat)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EisSide)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesMul)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaFactorization)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TheoremB)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
