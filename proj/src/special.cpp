#include "ath/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ath/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ath {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

double beta1_series(double x) {
  // E1(x) = -gamma - log x - sum_{k>=1} (-x)^k / (k * k!)
  double sum = 0.0, term = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -x / k;
    double add = term / k;
    sum += add;
    if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
  }
  return -std::numbers::egamma - std::log(x) - sum;
}

double beta1_contfrac(double x) {
  // modified Lentz on E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
  const double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

double beta1(double x) {
  if (!(x > 0)) throw std::domain_error("beta1 requires x > 0");
  return x <= 1.5 ? beta1_series(x) : beta1_contfrac(x);
}

double euler_gamma_series() {
  // Euler-Maclaurin: gamma = H_n - log n - 1/(2n) + sum B_{2k}/(2k n^{2k}).
  const int n = 1000;
  double h = 0.0;
  for (int k = n; k >= 1; --k) h += 1.0 / k;
  double nn = n;
  double n2 = nn * nn;
  return h - std::log(nn) - 1.0 / (2 * nn) + 1.0 / (12 * n2) - 1.0 / (120 * n2 * n2) +
         1.0 / (252 * n2 * n2 * n2);
}

}  // namespace ath
