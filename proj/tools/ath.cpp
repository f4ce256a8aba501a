#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
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

using namespace ath;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  bool json = false;
  std::optional<double> v;
  std::uint64_t seed = 20240601;
};

Field field_for(i64 disc, bool odd_only) {
  if (!is_fundamental(disc) || disc >= 0 || (odd_only && disc % 2 == 0))
    throw UsageError(odd_only ? "non-fundamental or even discriminant out of scope"
                              : "not a negative fundamental discriminant");
  return Field::make(disc);
}

Elt parse_elt(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) return Elt{Rational::parse(s), 0};
  return Elt{Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1))};
}

struct CycleArgs {
  int ideal_form = 0;  // index into the reduced forms; 0 is the principal class
  std::string lambda = "0";
  std::string r = "0";

  void add(CLI::App* sc) {
    sc->add_option("--ideal-form", ideal_form, "ideal a from the i-th reduced form (0: O_k)");
    sc->add_option("--lambda", lambda, "lambda as 'x,y' meaning x + y*omega");
    sc->add_option("--r", r, "r as 'x,y' meaning x + y*omega");
  }
  CycleData make(const Field& F) const {
    if (ideal_form < 0 || ideal_form >= F.h()) throw UsageError("--ideal-form out of range");
    Lattice a = ideal_form == 0 ? F.ring() : F.ideal_from_form(F.forms()[static_cast<std::size_t>(ideal_form)]);
    return make_cycle_data(F, a, parse_elt(lambda), parse_elt(r));
  }
};

std::string places_str(const std::vector<i64>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << (v[i] == kInfinity ? "inf" : std::to_string(v[i]));
  os << "}";
  return os.str();
}

void print_coeff(const Common& c, const SymCoeff& s, const Field& F) {
  if (c.json) {
    json j{{"coeff", to_json(s)}};
    if (c.v) {
      NumericContext ctx;
      ctx.lambda_prime = F.l_values().LambdaPrime1;
      j["value"] = numeric_eval(s, *c.v, ctx);
    }
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << s.str() << "\n";
  if (c.v) {
    NumericContext ctx;
    ctx.lambda_prime = F.l_values().LambdaPrime1;
    std::cout << "value at v=" << *c.v << ": " << std::setprecision(15) << numeric_eval(s, *c.v, ctx) << "\n";
  }
}

void print_series(const Common& c, const QSeries& q, const Field& F) {
  if (c.json) {
    std::cout << to_json(q).dump() << "\n";
    return;
  }
  std::cout << "grid 1/" << q.grid() << ", precision " << q.precision();
  if (q.beta_cut()) std::cout << ", beta cut " << *q.beta_cut();
  std::cout << "\n";
  NumericContext ctx;
  if (c.v) ctx.lambda_prime = F.l_values().LambdaPrime1;
  for (auto& [e, s] : q.coeffs()) {
    std::cout << std::setw(10) << e.str() << "  " << s.str();
    if (c.v) std::cout << "  [" << std::setprecision(12) << numeric_eval(s, *c.v, ctx) << "]";
    std::cout << "\n";
  }
}

int cmd_field_info(const Common& c, i64 disc) {
  Field F = field_for(disc, false);
  LValues lv = F.l_values();
  if (c.json) {
    json forms = json::array();
    for (auto& f : F.forms()) forms.push_back({f.a, f.b, f.c});
    std::cout << json{{"disc", F.disc()},        {"h", F.h()},
                      {"w", F.w()},              {"forms", forms},
                      {"ramified", F.ramified()}, {"L1", lv.L1},
                      {"Lambda1", lv.Lambda1},    {"LambdaPrime1", lv.LambdaPrime1},
                      {"faltings", lv.faltings}}
                     .dump()
              << "\n";
    return kOk;
  }
  std::cout << std::left << std::setw(14) << "disc" << F.disc() << "\n"
            << std::setw(14) << "h" << F.h() << "\n"
            << std::setw(14) << "w" << F.w() << "\n"
            << std::setw(14) << "ramified" << places_str(F.ramified()) << "\n"
            << std::setw(14) << "forms";
  for (auto& f : F.forms()) std::cout << "(" << f.a << "," << f.b << "," << f.c << ") ";
  std::cout << "\n" << std::setprecision(15) << std::setw(14) << "L(1)" << lv.L1 << "\n"
            << std::setw(14) << "Lambda(1)" << lv.Lambda1 << "\n"
            << std::setw(14) << "Lambda'(1)" << lv.LambdaPrime1 << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetic theta series and Eisenstein derivatives"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "machine-readable output");
  app.add_option("--v", common.v, "archimedean parameter for numeric evaluation");
  app.add_option("--seed", common.seed, "seed for randomized checks");

  i64 disc = -7;
  auto add_disc = [&](CLI::App* sc) { sc->add_option("--disc", disc, "fundamental discriminant")->required(); };

  auto* fi = app.add_subcommand("field-info", "class group, units and L-values");
  add_disc(fi);

  std::string wkind = "unramified";
  int wN = 0, wc = 0, wchi = 1, wf = 1;
  i64 wp = 3;
  auto* wh = app.add_subcommand("whittaker", "local Whittaker polynomial");
  wh->add_option("--kind", wkind, "unramified | center | offcenter")
      ->check(CLI::IsMember({"unramified", "center", "offcenter"}));
  wh->add_option("--N", wN, "ord of m (center/unramified) or ord(m - t mu mubar) (offcenter)");
  wh->add_option("--c", wc, "ord t");
  wh->add_option("--chi", wchi, "chi(pi) or chi(t m)");
  wh->add_option("--p", wp, "prime");
  wh->add_option("--f", wf, "residue degree");

  CycleArgs cargs;
  std::string mstr = "1";
  std::optional<i64> support;
  auto* ec = app.add_subcommand("eis-coeff", "Eisenstein coefficient at bold m");
  add_disc(ec);
  cargs.add(ec);
  ec->add_option("--m", mstr, "bold m as a rational")->required();
  ec->add_option("--support", support, "coherent coefficient at this prime instead of the derivative");

  i64 m = 1, p = 0;
  std::string route = "local";
  auto* cc = app.add_subcommand("cycle-count", "point count of Z(m) at p (m > 0) or of the top cycle (m < 0)");
  add_disc(cc);
  cargs.add(cc);
  cc->add_option("--m", m, "m")->required();
  cc->add_option("--p", p, "prime (default: the Diff prime)");
  cc->add_option("--route", route, "local | global")->check(CLI::IsMember({"local", "global"}));

  auto* cd = app.add_subcommand("cycle-deg", "Arakelov degree of Z(m)");
  add_disc(cd);
  cargs.add(cd);
  cd->add_option("--m", m, "m")->required();

  i64 window = 40;
  auto* ph = app.add_subcommand("phi-hat", "generating series for |m| <= window");
  add_disc(ph);
  cargs.add(ph);
  ph->add_option("--window", window, "M");

  i64 ar = 0;
  std::string tstr = "10";
  auto* tr = app.add_subcommand("theta-r", "theta series of the coset a/sqrt(disc)");
  add_disc(tr);
  tr->add_option("--a", ar, "a with r = a/sqrt(disc)");
  tr->add_option("--T", tstr, "precision");

  int nu_shift = 0;
  auto* va = app.add_subcommand("verify-a", "Eisenstein derivative against -2 phi_hat");
  add_disc(va);
  cargs.add(va);
  va->add_option("--window", window, "M: all m with |m| <= M");
  va->add_option("--nu-shift", nu_shift, "fault injection on the length");

  std::string kappa = "15";
  auto* qi = app.add_subcommand("quat-info", "ramification of B = k + k delta, delta^2 = kappa");
  add_disc(qi);
  qi->add_option("--kappa", kappa, "kappa")->required();

  int samples = 1000;
  auto* oc = app.add_subcommand("order-check", "closure, discriminant and lambda set of the default order");
  add_disc(oc);
  oc->add_option("--kappa", kappa, "kappa")->required();
  oc->add_option("--samples", samples, "random member pairs");

  i64 T = 10;
  bool wrong_lambda = false;
  i64 rhs_D = 0;
  auto* vb = app.add_subcommand("verify-b", "pullback identity up to q^T");
  add_disc(vb);
  vb->add_option("--kappa", kappa, "kappa")->required();
  vb->add_option("--T", T, "precision");
  vb->add_flag("--wrong-lambda", wrong_lambda, "negative control: twist 2 lambda'");
  vb->add_option("--rhs-D", rhs_D, "negative control: rescale the right side by this D");

  auto* cs = app.add_subcommand("chowla-selberg", "two routes to Lambda'/Lambda(1)");
  add_disc(cs);

  auto* st = app.add_subcommand("selftest", "quick consistency run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*fi) return cmd_field_info(common, disc);

    if (*wh) {
      WhitPoly w = wkind == "unramified" ? whit_unramified(wchi, wN, wp, wf)
                   : wkind == "center"   ? whit_ramified_center(wN, wc, wchi, wp, wf)
                                         : whit_ramified_offcenter(wN, wc, wp);
      if (common.json) {
        json coef = json::array();
        for (auto& r : w.coef) coef.push_back(r.str());
        std::cout << json{{"poly", coef}, {"value", w.value().str()}, {"deriv", to_json(w.derivative())}}.dump()
                  << "\n";
      } else {
        std::cout << "poly   " << w.str() << "\nvalue  " << w.value() << "\nderiv  " << w.derivative().str() << "\n";
      }
      return kOk;
    }

    if (*ec) {
      Field F = field_for(disc, true);
      CycleData cdat = cargs.make(F);
      Rational mb = Rational::parse(mstr);
      EisSetup s = EisSetup::canonical(F, cdat);
      if (support) {
        if (mb.sign() <= 0) throw UsageError("coherent coefficient needs m > 0");
        print_coeff(common, SymCoeff(coherent_coeff(s.with_support(*support), mb)), F);
      } else {
        print_coeff(common, eis_deriv_coeff(s, mb), F);
      }
      return kOk;
    }

    if (*cc) {
      Field F = field_for(disc, true);
      CycleData cdat = cargs.make(F);
      if (m == 0) throw UsageError("m must be nonzero");
      i64 n = 0;
      std::string where = "top";
      if (m < 0) {
        CycleContext ctx(F, F.class_reps(), {});
        n = count_top(ctx, m, cdat);
      } else {
        if (p == 0) {
          auto diff = diff_set_scaled(F, cdat, m);
          if (diff.size() != 1 || diff[0] == kInfinity) {
            std::cout << (common.json ? json{{"count", 0}, {"diff", diff}}.dump() : "0 (Diff " + places_str(diff) + ")")
                      << "\n";
            return kOk;
          }
          p = diff[0];
        }
        if (F.chi(p) == 1) throw UsageError("p must be non-split");
        CycleContext ctx(F, F.class_reps(), {{p, make_model(F, p)}});
        n = count_finite(ctx, m, p, cdat, route == "global" ? CountRoute::Global : CountRoute::Local);
        where = std::to_string(p);
      }
      if (common.json)
        std::cout << json{{"count", n}, {"place", where}}.dump() << "\n";
      else
        std::cout << n << " (place " << where << ")\n";
      return kOk;
    }

    if (*cd) {
      Field F = field_for(disc, true);
      CycleData cdat = cargs.make(F);
      CycleContext ctx = context_for_window(F, cdat, std::max<i64>(1, m < 0 ? -m : m));
      print_coeff(common, deg_Z(ctx, m, cdat), F);
      return kOk;
    }

    if (*ph) {
      Field F = field_for(disc, true);
      CycleData cdat = cargs.make(F);
      if (window <= 0) throw UsageError("window must be positive");
      print_series(common, phi_hat(context_for_window(F, cdat, window), cdat, window), F);
      return kOk;
    }

    if (*tr) {
      Field F = field_for(disc, true);
      print_series(common, theta_r(F, mod(ar, -disc), Rational::parse(tstr)), F);
      return kOk;
    }

    if (*va) {
      Field F = field_for(disc, true);
      CycleData cdat = cargs.make(F);
      if (window <= 0) throw UsageError("window must be positive");
      DegOptions opt;
      opt.nu_shift = nu_shift;
      auto rep = verify_theorem_A(context_for_window(F, cdat, window), cdat, window, opt);
      if (common.json) {
        json rows = json::array();
        for (auto& r : rep.rows)
          rows.push_back({{"exponent", r.exponent.str()},
                          {"lhs", to_json(r.eis)},
                          {"rhs", to_json(r.phi_m2)},
                          {"equal", r.equal},
                          {"provenance", r.provenance}});
        std::cout << json{{"rows", rows}, {"mismatches", rep.mismatches}, {"nonzero", rep.nonzero}}.dump() << "\n";
      } else {
        for (auto& r : rep.rows)
          if (!r.equal)
            std::cout << "MISMATCH at " << r.exponent << ": E=" << r.eis.str() << " -2phi=" << r.phi_m2.str() << "\n  "
                      << r.provenance << "\n";
        std::cout << rep.rows.size() << " coefficients verified, " << rep.mismatches << " mismatches (" << rep.nonzero
                  << " nonzero)\n";
      }
      return rep.ok() ? kOk : kMismatch;
    }

    if (*qi) {
      Field F = field_for(disc, false);
      QuatData q = quat_data(F, Rational::parse(kappa));
      if (common.json) {
        std::cout << json{{"kappa", q.kappa.str()}, {"ram", q.ram}, {"definite", q.definite}, {"D", q.D},
                          {"D1", q.D1},          {"D0", q.D0},   {"delta2_norm", q.delta2_norm}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "kappa " << q.kappa << "\nram " << places_str(q.ram) << "\ndefinite " << q.definite << "\nD "
                  << q.D << "  D1 " << q.D1 << "  D0 " << q.D0 << "\n";
      }
      return kOk;
    }

    if (*oc) {
      Field F = field_for(disc, false);
      QuatData q = quat_data(F, Rational::parse(kappa));
      OrderData od = default_order(F, q);
      auto rep = ring_closure_check(F, od, samples, common.seed);
      auto ls = lambda_set(F, q, od.a);
      i64 want = i64{1} << (F.ramified().size() - prime_divisors(q.D1).size());
      bool ok = rep.ok() && static_cast<i64>(ls.size()) == want;
      if (common.json)
        std::cout << json{{"a", od.a.str()},        {"lambda", od.lambda.str()}, {"closure", rep.str()},
                          {"lambda_set", ls.size()}, {"expected", want},         {"ok", ok}}
                         .dump()
                  << "\n";
      else
        std::cout << "a " << od.a.str() << "  lambda " << od.lambda.str() << "\n" << rep.str() << "\nlambda set "
                  << ls.size() << " (expected " << want << ")\n";
      return ok ? kOk : kMismatch;
    }

    if (*vb) {
      Field F = field_for(disc, true);
      QuatData q = quat_from_kappa(F, Rational::parse(kappa));
      OrderData od = default_order(F, q);
      PullbackOptions opt;
      if (wrong_lambda) opt.lambda_prime_override = Rational(2) * lambda_prime(F, od);
      opt.rhs_D_override = rhs_D;
      auto rep = verify_theorem_B(F, od, T, opt);
      if (common.json) {
        json rows = json::array();
        for (auto& r : rep.rows)
          rows.push_back({{"t", r.t}, {"rhs", to_json(r.rhs)}, {"lhs", to_json(r.lhs)}, {"equal", r.equal}});
        std::cout << json{{"rows", rows},
                          {"mismatches", rep.mismatches},
                          {"nonintegral_nonzero", rep.nonintegral_nonzero},
                          {"constant_ok", rep.constant_ok},
                          {"ok", rep.ok()}}
                         .dump()
                  << "\n";
      } else {
        for (auto& r : rep.rows)
          std::cout << std::setw(4) << r.t << (r.equal ? "  ok  " : "  BAD ") << r.rhs.str() << "\n";
        std::cout << rep.summary() << "\n";
      }
      return rep.ok() ? kOk : kMismatch;
    }

    if (*cs) {
      Field F = field_for(disc, false);
      auto rep = verify_chowla_selberg(F);
      if (common.json)
        std::cout << json{{"direct", rep.direct}, {"completed", rep.completed}, {"theta", rep.theta_route},
                          {"diff", rep.diff}, {"ok", rep.ok()}}
                         .dump()
                  << "\n";
      else
        std::cout << std::setprecision(15) << "direct     " << rep.direct << "\ncompleted  " << rep.completed
                  << "\ntheta      " << rep.theta_route << "\ndiff       " << rep.diff << "\n";
      return rep.ok() ? kOk : kMismatch;
    }

    if (*st) {
      int fails = 0;
      auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok    " : "FAIL  ") << name << "\n";
        if (!ok) ++fails;
      };
      Field F = Field::make(-7);
      CycleData cd0 = make_cycle_data(F, F.ring(), Elt{}, Elt{});
      CycleContext ctx = context_for_window(F, cd0, 20);
      check("theorem A, disc -7, |m| <= 20", verify_theorem_A(ctx, cd0, 20).ok());
      bool sw = true;
      EisSetup s = EisSetup::canonical(F, cd0);
      for (i64 k = 1; k <= 20; ++k) {
        auto diff = diff_set_scaled(F, cd0, k);
        if (diff.size() != 1 || diff[0] == kInfinity) continue;
        sw = sw && Rational(count_finite(ctx, k, diff[0], cd0)) ==
                       Rational(F.w(), 4) * coherent_coeff(s.with_support(diff[0]), Rational(k));
      }
      check("Siegel-Weil, disc -7, m <= 20", sw);
      check("Chowla-Selberg, disc -7", verify_chowla_selberg(F).ok());
      std::mt19937_64 rng(common.seed);
      check("theta factorization", lattice_theta_factorization_check(random_glued_lattice(rng), 10).ok());
      return fails ? kMismatch : kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
