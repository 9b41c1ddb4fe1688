#pragma once

namespace wahkon {

// Standard normal density and distribution function. The cdf goes through
// erfc, which is accurate to machine precision (well inside the 1e-7
// contract).
double std_normal_pdf(double z);
double std_normal_cdf(double z);

// Regularized lower incomplete gamma P(a, x), series for x < a+1 and
// continued fraction otherwise.
double gamma_p(double a, double x);

// Inverse chi-square cdf by bisection on gamma_p; relative accuracy ~1e-10,
// comfortably better than the 1e-4 contract. k >= 1, p in (0,1).
double chi_square_quantile(int k, double p);

}  // namespace wahkon
