#pragma once

namespace ath {

// beta_1(x) = int_1^inf exp(-u x) / u du, i.e. the exponential integral E_1.
// Power series for x <= 1.5, continued fraction above.
double beta1(double x);
double beta1_series(double x);
double beta1_contfrac(double x);

// Euler-Mascheroni constant from a convergent series (independent of the
// library constant; used for cross-checks).
double euler_gamma_series();

}  // namespace ath
