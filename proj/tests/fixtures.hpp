#pragma once

// Cycle configurations shared by the unit tests and the acceptance run.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ath/cycles.hpp"
#include "ath/localdata.hpp"
#include "ath/quadfield.hpp"

namespace fixture {

using namespace ath;

inline Elt inv_sqrt_disc(const Field& F) { return F.inv(F.sqrt_disc()); }

// (O, 0, 0), (O, 1/sqrt(disc), 0), (O, 1/sqrt(disc), 1/sqrt(disc)); for h > 1
// also a non-principal a with lambda = 0 and with a generator lambda
inline std::vector<CycleData> standard_configs(const Field& F) {
  Elt isd = inv_sqrt_disc(F);
  std::vector<CycleData> out{make_cycle_data(F, F.ring(), Elt{}, Elt{}), make_cycle_data(F, F.ring(), isd, Elt{}),
                             make_cycle_data(F, F.ring(), isd, isd)};
  if (F.h() > 1) {
    Lattice a = F.ideal_from_form(F.forms()[1]);
    out.push_back(make_cycle_data(F, a, Elt{}, Elt{}));
    out.push_back(make_cycle_data(F, a, F.mul(local_generator(F, a), isd), Elt{}));
  }
  return out;
}

inline CycleData trivial(const Field& F) { return make_cycle_data(F, F.ring(), Elt{}, Elt{}); }

// Auxiliary choices that must not change a point count.
enum class Choice { NextP0, ThirdP0, ConjP0, MuOffset, PermuteReps, ReplaceReps, Scale };
constexpr int kChoices = 7;

inline std::string choice_name(Choice c) {
  switch (c) {
    case Choice::NextP0: return "next p0";
    case Choice::ThirdP0: return "third p0";
    case Choice::ConjP0: return "conjugate P0";
    case Choice::MuOffset: return "mu offset";
    case Choice::PermuteReps: return "permuted class reps";
    case Choice::ReplaceReps: return "replaced class reps";
    case Choice::Scale: return "a -> alpha a";
  }
  return "?";
}

// Recount Z(m) at p after changing one auxiliary choice; the original count
// uses the default model and class representatives.
inline i64 recount(const Field& F, i64 m, i64 p, const CycleData& cd, Choice c, std::mt19937_64& rng) {
  std::vector<Lattice> reps = F.class_reps();
  ModelOptions opt;
  CycleData data = cd;
  switch (c) {
    case Choice::NextP0: opt.p0_skip = 1; break;
    case Choice::ThirdP0: opt.p0_skip = 2; break;
    case Choice::ConjP0: opt.conj_P0 = true; break;
    case Choice::MuOffset: opt.mu_offset = 1 + static_cast<i64>(rng() % 5); break;
    case Choice::PermuteReps: std::shuffle(reps.begin(), reps.end(), rng); break;
    case Choice::ReplaceReps:
      for (auto& b : reps) {
        auto alt = F.ideals_in_class(b, 80);
        b = alt[rng() % alt.size()];
      }
      break;
    case Choice::Scale: {
      Elt alpha{Rational(static_cast<i64>(rng() % 7) - 3, 1 + static_cast<i64>(rng() % 3)),
                Rational(static_cast<i64>(rng() % 5) - 2)};
      if (alpha.is_zero()) alpha = Elt{Rational(2), 0};
      data = make_cycle_data(F, F.scale(cd.a, alpha), F.mul(alpha, cd.lambda), cd.r);
      break;
    }
  }
  CycleContext ctx(F, reps, {{p, make_model(F, p, opt)}});
  return count_finite(ctx, m, p, data);
}

}  // namespace fixture
