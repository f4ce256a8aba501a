#pragma once

#include <map>
#include <vector>

#include "ath/quadfield.hpp"
#include "ath/quatorders.hpp"
#include "ath/symcoeff.hpp"

namespace ath {

struct ModelOptions {
  int p0_skip = 0;       // use the (1 + p0_skip)-th admissible auxiliary prime
  bool conj_P0 = false;  // use the conjugate prime above p0
  i64 mu_offset = 0;     // pick a different solution of the mu congruence
};

// Definite quaternion order End(E) for a supersingular CM curve at p, written
// as { alpha + beta delta } with delta^2 = kappa < 0 and a = P0 d2.
struct SupersingularModel {
  i64 p = 0;
  i64 p0 = 0;
  Lattice P0;
  Rational kappa;
  OrderData order;
  Elt mu_p;  // ramified p only
};

SupersingularModel make_model(const Field& F, i64 p, const ModelOptions& opt = {});

// Everything a count needs, fixed up front so parallel callers share it
// read-only.
class CycleContext {
public:
  CycleContext(const Field& F, i64 max_prime);
  CycleContext(const Field& F, std::vector<Lattice> class_reps, std::map<i64, SupersingularModel> models);

  const Field& field() const { return F_; }
  const std::vector<Lattice>& class_reps() const { return reps_; }
  const SupersingularModel& model(i64 p) const;
  bool has_model(i64 p) const { return models_.count(p) != 0; }

private:
  Field F_;
  std::vector<Lattice> reps_;
  std::map<i64, SupersingularModel> models_;
};

enum class CountRoute { Local, Global };

// |Z(m)(F_p-bar)|, m > 0, by enumeration over the class group
i64 count_finite(const CycleContext& ctx, i64 m, i64 p, const CycleData& cd, CountRoute route = CountRoute::Local);
// |Z^top(m)|, m < 0
i64 count_top(const CycleContext& ctx, i64 m, const CycleData& cd);

// length of the local ring; throws if not a positive integer
i64 nu_p(const Field& F, i64 m, i64 p, const CycleData& cd);
// multiplier of log p in the degree
i64 c_p(const Field& F, i64 m, i64 p, const CycleData& cd);

struct DegOptions {
  int nu_shift = 0;  // fault injection for verifier tests
};

SymCoeff deg_Z(const CycleContext& ctx, i64 m, const CycleData& cd, const DegOptions& opt = {});
// -Lambda'(1) - (h/w) log v when r is integral, else 0
SymCoeff constant_term(const Field& F, const CycleData& cd);

}  // namespace ath
