// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "ath/arith.hpp"
#include "ath/cycles.hpp"
#include "ath/eisenstein.hpp"
#include "ath/genfun.hpp"
#include "ath/localdata.hpp"
#include "ath/pullback.hpp"
#include "ath/quatorders.hpp"
#include "ath/whittaker.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ath;

namespace {

const i64 kDiscs[] = {-7, -11, -15, -23, -39};

struct Result {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& s) {
    if (ok) note << s;
    ok = false;
  }
};

std::vector<i64> nonsplit_primes(const Field& F, i64 bound) {
  std::vector<i64> out;
  for (i64 p = 2; p <= bound; ++p)
    if (is_prime(p) && F.chi(p) != 1) out.push_back(p);
  return out;
}

// finite point counts against the coherent coefficient, both count routes
Result siegel_weil() {
  Result r;
  int checked = 0;
  for (i64 d : kDiscs) {
    Field F = Field::make(d);
    CycleContext ctx(F, 60);
    for (auto& cd : fixture::standard_configs(F)) {
      EisSetup s = EisSetup::canonical(F, cd);
      for (i64 m = 1; m <= 60; ++m) {
        auto diff = diff_set_scaled(F, cd, m);
        for (i64 p : nonsplit_primes(F, 60)) {
          i64 n = count_finite(ctx, m, p, cd);
          if (n > 0 && diff != std::vector<i64>{p}) r.fail("count outside Diff, disc " + std::to_string(d));
          if (diff != std::vector<i64>{p}) continue;
          ++checked;
          if (n != count_finite(ctx, m, p, cd, CountRoute::Global))
            r.fail("local/global routes differ, disc " + std::to_string(d) + " m " + std::to_string(m));
          if (Rational(n) != Rational(F.w(), 4) * coherent_coeff(s.with_support(p), Rational(m, cd.delta_lambda)))
            r.fail("count != (w/4) coherent, disc " + std::to_string(d) + " m " + std::to_string(m));
        }
      }
    }
  }
  r.note << (r.ok ? "" : "; ") << checked << " (m, p) pairs";
  return r;
}

Result theorem_a() {
  Result r;
  int rows = 0, nonzero = 0;
  for (i64 d : kDiscs) {
    Field F = Field::make(d);
    for (auto& cd : fixture::standard_configs(F)) {
      i64 M = 40 * cd.delta_lambda;
      auto rep = verify_theorem_A(context_for_window(F, cd, M), cd, M);
      rows += static_cast<int>(rep.rows.size());
      nonzero += rep.nonzero;
      if (!rep.ok()) r.fail("disc " + std::to_string(d) + ": " + std::to_string(rep.mismatches) + " mismatches");
    }
  }
  r.note << (r.ok ? "" : "; ") << rows << " coefficients, " << nonzero << " nonzero";
  return r;
}

Result top_counts() {
  Result r;
  for (i64 d : {-7, -11, -19, -23}) {
    Field F = Field::make(d);
    CycleContext ctx(F, 3);
    for (i64 m = -60; m < 0; ++m)
      if (count_top(ctx, m, fixture::trivial(F)) != F.w() * oracle::rho(d, -m))
        r.fail("disc " + std::to_string(d) + " m " + std::to_string(m));
  }
  r.note << (r.ok ? "" : "; ") << "4 discriminants, -60 <= m < 0";
  return r;
}

Result whittaker() {
  Result r;
  for (i64 q : {3, 5, 7, 11})
    for (int N = 0; N <= 6; ++N)
      for (int c = 0; c <= 6; ++c) {
        for (int chi : {1, -1}) {
          auto [v, dv] = oracle::ramified_center(N, c, chi, q);
          WhitPoly w = whit_ramified_center(N, c, chi, q);
          if (w.value() != v || w.deriv_log_p() != dv) r.fail("center grid");
          if (c == 0) {
            auto [u, du] = oracle::unramified(chi, N);
            WhitPoly x = whit_unramified(chi, N, q);
            if (x.value() != u || x.deriv_log_p() != du) r.fail("unramified grid");
          }
        }
        auto [v, dv] = oracle::ramified_offcenter(N, c, q);
        WhitPoly o = whit_ramified_offcenter(N, c, q);
        if (o.value() != v || o.deriv_log_p() != dv) r.fail("offcenter grid");
      }
  // local ratio recomputed from the local factors at every nonvanishing Diff prime
  int ratios = 0;
  for (i64 d : kDiscs) {
    Field F = Field::make(d);
    for (auto& cd : fixture::standard_configs(F)) {
      EisSetup s = EisSetup::canonical(F, cd);
      for (i64 m = 1; m <= 60; ++m) {
        auto diff = diff_set_scaled(F, cd, m);
        if (diff.size() != 1 || diff[0] == kInfinity) continue;
        i64 p = diff[0];
        Rational mb(m, cd.delta_lambda);
        EisSetup sp = s.with_support(p);
        WhitPoly inc = local_factor(sp, p, mb, EisVariant::Incoherent);
        Rational coh = local_factor(sp, p, mb, EisVariant::Coherent).value();
        if (coh.is_zero()) continue;
        ++ratios;
        if (!inc.value().is_zero() || -inc.deriv_log_p() / coh != Rational(-c_p(F, m, p, cd), 2))
          r.fail("ratio, disc " + std::to_string(d) + " m " + std::to_string(m));
      }
    }
  }
  r.note << (r.ok ? "" : "; ") << "grid q in {3,5,7,11}, N, c <= 6; " << ratios << " ratios";
  return r;
}

Result theorem_b() {
  Result r;
  for (auto [d, k] : {std::pair<i64, i64>{-7, 15}, {-11, 91}}) {
    Field F = Field::make(d);
    auto rep = verify_theorem_B(F, default_order(F, quat_from_kappa(F, k)), 25);
    if (!rep.ok()) r.fail("disc " + std::to_string(d) + ": " + rep.summary());
    if (r.ok) r.note << (d == -7 ? "" : "; ");
    r.note << "disc " << d << " kappa " << k << ": " << rep.rows.size() << " rows, " << rep.nonintegral_checked
           << " non-integral checked";
  }
  return r;
}

Result class_number_formula() {
  Result r;
  double worst = 0;
  int n = 0;
  for (i64 d = -200; d <= -3; ++d) {
    if (!is_fundamental(d)) continue;
    Field F = Field::make(d);
    double err = std::abs(F.l_values().Lambda1 - 2.0 * F.h() / F.w());
    worst = std::max(worst, err);
    ++n;
    if (err >= 1e-10) r.fail("disc " + std::to_string(d));
  }
  r.note << (r.ok ? "" : "; ") << n << " discriminants, max error " << worst;
  return r;
}

Result chowla_selberg() {
  Result r;
  double worst = 0;
  for (i64 d : {-4, -7, -8, -11, -23}) {
    auto rep = verify_chowla_selberg(Field::make(d));
    worst = std::max(worst, rep.diff);
    if (!rep.ok()) r.fail("disc " + std::to_string(d));
  }
  r.note << (r.ok ? "" : "; ") << "max route difference " << worst;
  return r;
}

Result lattices() {
  Result r;
  std::mt19937_64 rng(20240601);
  for (int it = 0; it < 10; ++it) {
    GluedLattice L = random_glued_lattice(rng);
    auto rep = lattice_theta_factorization_check(L, 30);
    if (!rep.ok()) r.fail(L.str());
  }
  r.note << (r.ok ? "" : "; ") << "10 random lattices to q^30";
  return r;
}

Result orders() {
  Result r;
  const std::pair<i64, i64> cfg[] = {{-7, 15},  {-7, 3},  {-11, 91}, {-11, 2}, {-15, 7},
                                     {-15, 2}, {-23, 35}, {-23, 5},  {-39, 7}};
  auto expected = [](const Field& F, const QuatData& q) {
    int o = static_cast<int>(prime_divisors(F.disc()).size());
    int o1 = q.D1 == 1 ? 0 : static_cast<int>(prime_divisors(q.D1).size());
    return 1 << (o - o1);
  };
  int n = 0;
  for (auto [d, k] : cfg) {
    Field F = Field::make(d);
    OrderData od = default_order(F, quat_from_kappa(F, k));
    auto rep = ring_closure_check(F, od, 1000, 11);
    if (!rep.ok()) r.fail("disc " + std::to_string(d) + " kappa " + std::to_string(k) + ": " + rep.str());
    if (static_cast<int>(lambda_set(F, od.quat, od.a).size()) != expected(F, od.quat)) r.fail("lambda set size");
    ++n;
  }
  for (i64 d : {-7, -15, -23})
    for (i64 p : {3, 5, 7, 13}) {
      Field F = Field::make(d);
      if (F.chi(p) == 1) continue;
      auto M = make_model(F, p);
      if (!ring_closure_check(F, M.order, 1000, 13).ok()) r.fail("definite model");
      if (static_cast<int>(lambda_set(F, M.order.quat, M.order.a).size()) != expected(F, M.order.quat))
        r.fail("lambda set size");
      ++n;
    }
  r.note << (r.ok ? "" : "; ") << n << " orders, 1000 samples each";
  return r;
}

Result choice_independence() {
  Result r;
  struct Case {
    i64 d;
    CycleData cd;
    i64 m, p, n;
  };
  std::vector<Case> cases;
  for (i64 d : {-15, -23, -31, -35, -39, -47, -55}) {
    Field F = Field::make(d);
    CycleContext ctx(F, 40);
    for (auto& cd : fixture::standard_configs(F))
      for (i64 m = 1; m <= 40; ++m) {
        auto diff = diff_set_scaled(F, cd, m);
        if (diff.size() != 1 || diff[0] == kInfinity) continue;
        i64 n = count_finite(ctx, m, diff[0], cd);
        if (n > 0) cases.push_back({d, cd, m, diff[0], n});
      }
  }
  std::mt19937_64 rng(7);
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const Case& c = cases[rng() % cases.size()];
    auto ch = static_cast<fixture::Choice>(rng() % fixture::kChoices);
    Field F = Field::make(c.d);
    if (fixture::recount(F, c.m, c.p, c.cd, ch, rng) != c.n)
      r.fail("disc " + std::to_string(c.d) + " m " + std::to_string(c.m) + " " + fixture::choice_name(ch));
  }
  r.note << (r.ok ? "" : "; ") << trials << " trials over " << cases.size() << " (config, m, p) cases";
  return r;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Result()>> criteria[] = {
      {"finite counts match the coherent coefficients", siegel_weil},
      {"Eisenstein derivative equals -2 phi_hat", theorem_a},
      {"top cycle counts equal w rho(|m|)", top_counts},
      {"local Whittaker closed forms and derivative ratio", whittaker},
      {"pullback identity to q^25", theorem_b},
      {"Lambda(1) = 2h/w", class_number_formula},
      {"two routes to Lambda'/Lambda(1)", chowla_selberg},
      {"glued lattice theta factorization", lattices},
      {"quaternion order closure and lambda sets", orders},
      {"counts independent of auxiliary choices", choice_independence},
  };
  int fails = 0, i = 0;
  for (auto& [name, f] : criteria) {
    ++i;
    auto t0 = std::chrono::steady_clock::now();
    Result res;
    try {
      res = f();
    } catch (const std::exception& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    fails += !res.ok;
    std::cout << (res.ok ? "PASS" : "FAIL") << "  [" << i << "] " << name << " (" << res.note.str() << ", "
              << std::fixed << std::setprecision(1) << sec << "s)" << std::defaultfloat << std::endl;
  }
  return fails ? 1 : 0;
}
