#include "ath/genfun.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ath/arith.hpp"
#include "ath/localdata.hpp"

namespace ath {

namespace {

void require_odd(const Field& F) {
  if (F.disc() % 2 == 0) throw std::invalid_argument("non-fundamental or even discriminant out of scope");
}

std::string provenance(const CycleContext& ctx, const CycleData& cd, i64 m) {
  const Field& F = ctx.field();
  std::ostringstream os;
  Rational mb(m, cd.delta_lambda);
  os << "m=" << m << " bold_m=" << mb;
  if (m == 0) return os.str();
  auto diff = diff_set_scaled(F, cd, m);
  os << " diff={";
  for (std::size_t i = 0; i < diff.size(); ++i) os << (i ? "," : "") << (diff[i] == kInfinity ? "inf" : std::to_string(diff[i]));
  os << "}";
  EisSetup s = EisSetup::canonical(F, cd);
  if (m < 0) {
    os << " count_top=" << count_top(ctx, m, cd);
    for (auto& [l, w] : local_factors(s, mb, EisVariant::Incoherent)) os << " W_" << l << "=" << w.str();
    return os.str();
  }
  if (diff.size() == 1 && diff[0] != kInfinity) {
    i64 p = diff[0];
    os << " p=" << p << " count=" << count_finite(ctx, m, p, cd);
    try {
      os << " nu=" << nu_p(F, m, p, cd) << " c=" << c_p(F, m, p, cd);
    } catch (const std::exception& e) {
      os << " length error: " << e.what();
    }
    auto sp = s.with_support(p);
    for (auto& [l, w] : local_factors(sp, mb, EisVariant::Incoherent)) os << " W_" << l << "=" << w.str();
    os << " Wcoh_" << p << "=" << local_factor(sp, p, mb, EisVariant::Coherent).str();
  }
  return os.str();
}

// points y = z + c * h / k, z in Z^n, with Q(y) = w^T G w / (2 k^2) <= T, w = k y
void enumerate_coset(const std::vector<std::vector<i64>>& G, const std::vector<i64>& h, i64 k, i64 T,
                     std::map<Rational, i64>& out) {
  std::size_t n = G.size();
  // bound |y_i| <= sqrt(2 T (G^{-1})_ii) from the inverse Gram in floating point
  std::vector<std::vector<double>> A(n, std::vector<double>(2 * n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) A[i][j] = static_cast<double>(G[i][j]);
    A[i][n + i] = 1.0;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(A[r][c]) > std::fabs(A[piv][c])) piv = r;
    std::swap(A[c], A[piv]);
    double d = A[c][c];
    for (auto& x : A[c]) x /= d;
    for (std::size_t r = 0; r < n; ++r)
      if (r != c) {
        double f = A[r][c];
        for (std::size_t j = 0; j < 2 * n; ++j) A[r][j] -= f * A[c][j];
      }
  }
  std::vector<i64> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    double B = std::sqrt(2.0 * static_cast<double>(T) * A[i][n + i]) + 1e-9;
    double sh = static_cast<double>(h[i]) / static_cast<double>(k);
    lo[i] = static_cast<i64>(std::ceil(-B - sh - 1e-9));
    hi[i] = static_cast<i64>(std::floor(B - sh + 1e-9));
  }
  std::vector<i64> w(n);
  i64 lim = 2 * k * k * T;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      i128 q = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) q += static_cast<i128>(w[a]) * G[a][b] * w[b];
      if (q <= lim) out[Rational(narrow(q), 2 * k * k)] += 1;
      return;
    }
    for (i64 z = lo[i]; z <= hi[i]; ++z) {
      w[i] = k * z + h[i];
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

QSeries to_series(const std::map<Rational, i64>& m, i64 grid, i64 T) {
  QSeries s(grid, Rational(T));
  for (auto& [e, c] : m) s.add_term(e, SymCoeff(Rational(c)));
  return s;
}

// integer row echelon basis of the Z-span of rows (full rank n assumed)
std::vector<std::vector<i64>> row_basis(std::vector<std::vector<i64>> rows, std::size_t n) {
  std::vector<std::vector<i64>> basis;
  for (std::size_t c = 0; c < n; ++c) {
    for (;;) {
      std::size_t piv = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (piv == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[piv][c]))) piv = r;
      if (piv == rows.size()) throw std::invalid_argument("lattice is not of full rank");
      bool done = true;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == piv || rows[r][c] == 0) continue;
        i64 q = rows[r][c] / rows[piv][c];
        for (std::size_t j = 0; j < n; ++j) rows[r][j] -= q * rows[piv][j];
        if (rows[r][c] != 0) done = false;
      }
      if (done) {
        basis.push_back(rows[piv]);
        rows.erase(rows.begin() + static_cast<long>(piv));
        break;
      }
    }
  }
  return basis;
}

bool positive_definite(const std::vector<std::vector<i64>>& G) {
  std::size_t n = G.size();
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = Rational(G[i][j]);
  for (std::size_t c = 0; c < n; ++c) {
    if (A[c][c].sign() <= 0) return false;
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = A[r][c] / A[c][c];
      for (std::size_t j = c; j < n; ++j) A[r][j] -= f * A[c][j];
    }
  }
  return true;
}

}  // namespace

CycleContext context_for_window(const Field& F, const CycleData& cd, i64 M) {
  std::set<i64> primes;
  for (i64 p = 2; p <= M; ++p)
    if (is_prime(p)) primes.insert(p);
  Rational Na = F.norm(cd.a);
  for (i64 p : prime_divisors(Na.num())) primes.insert(p);
  if (Na.den() != 1)
    for (i64 p : prime_divisors(Na.den())) primes.insert(p);
  for (i64 p : F.ramified()) primes.insert(p);
  std::vector<i64> ps;
  for (i64 p : primes)
    if (F.chi(p) != 1) ps.push_back(p);
  auto models = parallel_map<SupersingularModel>(ps.size(), [&](std::size_t i) { return make_model(F, ps[i]); });
  std::map<i64, SupersingularModel> mm;
  for (std::size_t i = 0; i < ps.size(); ++i) mm.emplace(ps[i], std::move(models[i]));
  return CycleContext(F, F.class_reps(), std::move(mm));
}

QSeries phi_hat(const CycleContext& ctx, const CycleData& cd, i64 M, const DegOptions& opt, Exec exec) {
  require_odd(ctx.field());
  if (M <= 0) throw std::invalid_argument("window must be positive");
  Rational T(M, cd.delta_lambda);
  QSeries out(cd.delta_lambda, T, T);
  auto vals = parallel_map<SymCoeff>(
      static_cast<std::size_t>(2 * M + 1), [&](std::size_t i) { return deg_Z(ctx, static_cast<i64>(i) - M, cd, opt); },
      exec);
  for (std::size_t i = 0; i < vals.size(); ++i) out.add_term(Rational(static_cast<i64>(i) - M, cd.delta_lambda), vals[i]);
  return out;
}

QSeries eis_side(const Field& F, const CycleData& cd, i64 M, Exec exec) {
  require_odd(F);
  if (M <= 0) throw std::invalid_argument("window must be positive");
  EisSetup s = EisSetup::canonical(F, cd);
  Rational T(M, cd.delta_lambda);
  QSeries out(cd.delta_lambda, T, T);
  auto vals = parallel_map<SymCoeff>(
      static_cast<std::size_t>(2 * M + 1),
      [&](std::size_t i) { return eis_deriv_coeff(s, Rational(static_cast<i64>(i) - M, cd.delta_lambda)); }, exec);
  for (std::size_t i = 0; i < vals.size(); ++i) out.add_term(Rational(static_cast<i64>(i) - M, cd.delta_lambda), vals[i]);
  return out;
}

const CoeffCheck* TheoremAReport::first_mismatch() const {
  for (auto& r : rows)
    if (!r.equal) return &r;
  return nullptr;
}

TheoremAReport verify_theorem_A(const CycleContext& ctx, const CycleData& cd, i64 M, const DegOptions& opt,
                                Exec exec) {
  QSeries phi = phi_hat(ctx, cd, M, opt, exec);
  QSeries eis = eis_side(ctx.field(), cd, M, exec);
  TheoremAReport rep;
  for (i64 m = -M; m <= M; ++m) {
    Rational e(m, cd.delta_lambda);
    CoeffCheck row{e, eis.at(e), Rational(-2) * phi.at(e), false, {}};
    row.equal = row.eis == row.phi_m2;
    if (!row.eis.is_zero()) ++rep.nonzero;
    if (!row.equal) {
      ++rep.mismatches;
      row.provenance = provenance(ctx, cd, m);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

i64 theta_index(const Field& F, const Elt& r) {
  Elt z = F.mul(r, F.sqrt_disc());
  if (!z.b.is_zero() || !z.a.is_integer()) throw std::invalid_argument("r is not a trace-zero element of the inverse different");
  return mod(z.a.num(), -F.disc());
}

QSeries theta_r(const Field& F, i64 a_r, const Rational& T) {
  require_odd(F);
  i64 D = -F.disc();
  QSeries out(D, T);
  i64 amax = isqrt((T * Rational(D)).floor());
  for (i64 a = -amax; a <= amax; ++a)
    if (mod(a - a_r, D) == 0) {
      Rational e(a * a, D);
      if (e <= T) out.add_term(e, SymCoeff(Rational(1)));
    }
  return out;
}

std::string GluedLattice::str() const {
  std::ostringstream os;
  os << "gram=[";
  for (std::size_t i = 0; i < gram.size(); ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < gram[i].size(); ++j) os << (j ? "," : "") << gram[i][j];
  }
  os << "] n0=" << n0 << " glue=(";
  for (std::size_t i = 0; i < glue.size(); ++i) os << (i ? "," : "") << glue[i];
  os << ")";
  return os.str();
}

FactorizationReport lattice_theta_factorization_check(const GluedLattice& L, i64 T, Exec exec) {
  std::size_t n = L.gram.size();
  std::size_t n0 = static_cast<std::size_t>(L.n0);
  if (n == 0 || n > 4 || n0 == 0 || n0 >= n || L.glue.size() != n)
    throw std::invalid_argument("bad lattice shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (L.gram[i].size() != n) throw std::invalid_argument("gram is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (L.gram[i][j] != L.gram[j][i]) throw std::invalid_argument("gram is not symmetric");
      if ((i < n0) != (j < n0) && L.gram[i][j] != 0) throw std::invalid_argument("split is not orthogonal");
    }
  }
  if (!positive_definite(L.gram)) throw std::invalid_argument("gram is not positive definite");
  i64 k = 1;
  for (auto& g : L.glue) k = lcm(k, g.den());
  std::vector<i64> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = (L.glue[i] * Rational(k)).num();

  FactorizationReport rep;
  rep.T = T;
  rep.glue_order = k;
  i64 grid = 2 * k * k;

  // left side: theta of L in a basis of L itself
  std::vector<std::vector<i64>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<i64> e(n, 0);
    e[i] = k;
    gens.push_back(e);
  }
  gens.push_back(h);
  auto B = row_basis(gens, n);  // rows are k times basis vectors of L
  std::vector<std::vector<i64>> H(n, std::vector<i64>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      i128 s = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += static_cast<i128>(B[a][i]) * L.gram[i][j] * B[b][j];
      H[a][b] = narrow(s);
    }
  // Q(z) = z^T H z / (2 k^2): enumerate with zero shift and the same scale
  std::map<Rational, i64> lhs_pts;
  {
    // z^T H z / (2k^2) <= T  <=>  z^T (H/k^2) z / 2 <= T; reuse the coset
    // enumerator with k = 1 on H and threshold k^2 T
    std::map<Rational, i64> raw;
    enumerate_coset(H, std::vector<i64>(n, 0), 1, k * k * T, raw);
    for (auto& [e, c] : raw) lhs_pts[e / Rational(k * k)] += c;
  }
  rep.lhs = to_series(lhs_pts, grid, T);

  // right side: sum over glue classes of products of block thetas
  std::vector<std::vector<i64>> G0(n0, std::vector<i64>(n0)), G1(n - n0, std::vector<i64>(n - n0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < n0 && j < n0) G0[i][j] = L.gram[i][j];
      if (i >= n0 && j >= n0) G1[i - n0][j - n0] = L.gram[i][j];
    }
  auto terms = parallel_map<QSeries>(
      static_cast<std::size_t>(k),
      [&](std::size_t c) {
        std::vector<i64> h0(n0), h1(n - n0);
        for (std::size_t i = 0; i < n; ++i) {
          i64 v = mod(static_cast<i64>(c) * h[i], k);
          if (i < n0)
            h0[i] = v;
          else
            h1[i - n0] = v;
        }
        std::map<Rational, i64> t0, t1;
        enumerate_coset(G0, h0, k, T, t0);
        enumerate_coset(G1, h1, k, T, t1);
        return series_mul_by_integral(to_series(t0, grid, T), to_series(t1, grid, T), Exec::Serial);
      },
      exec);
  QSeries rhs(grid, Rational(T));
  for (auto& t : terms) rhs += t;
  rep.rhs = rhs;

  std::set<Rational> exps;
  for (auto& [e, c] : rep.lhs.coeffs()) exps.insert(e);
  for (auto& [e, c] : rep.rhs.coeffs())
    if (e <= Rational(T)) exps.insert(e);
  for (auto& e : exps) {
    ++rep.compared;
    if (rep.lhs.at(e) != rep.rhs.at(e)) ++rep.mismatches;
  }
  return rep;
}

GluedLattice random_glued_lattice(std::mt19937_64& rng) {
  auto uni = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
  auto block = [&](int r) {
    std::vector<std::vector<i64>> g(static_cast<std::size_t>(r), std::vector<i64>(static_cast<std::size_t>(r)));
    if (r == 1) {
      g[0][0] = uni(1, 4);
      return g;
    }
    for (;;) {
      i64 a = uni(1, 4), c = uni(1, 4), b = uni(-1, 1);
      if (a * c - b * b > 0) {
        g[0][0] = a;
        g[1][1] = c;
        g[0][1] = g[1][0] = b;
        return g;
      }
    }
  };
  int r0 = static_cast<int>(uni(1, 2)), r1 = static_cast<int>(uni(1, 2));
  auto b0 = block(r0), b1 = block(r1);
  GluedLattice L;
  std::size_t n = static_cast<std::size_t>(r0 + r1);
  L.gram.assign(n, std::vector<i64>(n, 0));
  for (int i = 0; i < r0; ++i)
    for (int j = 0; j < r0; ++j) L.gram[i][j] = b0[i][j];
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r1; ++j) L.gram[r0 + i][r0 + j] = b1[i][j];
  L.n0 = r0;
  i64 k = uni(2, 3);
  for (;;) {
    L.glue.clear();
    bool nz0 = false, nz1 = false;
    for (std::size_t i = 0; i < n; ++i) {
      i64 v = uni(0, k - 1);
      if (v) (static_cast<int>(i) < r0 ? nz0 : nz1) = true;
      L.glue.push_back(Rational(v, k));
    }
    if (nz0 && nz1) break;
  }
  return L;
}

}  // namespace ath
