#pragma once

#include <complex>
#include <functional>

namespace evanescent::numerics {

using Complex = std::complex<double>;

// Tolerances and truncation policy shared by every integral in the library.
//
// Semi-infinite integrals are truncated after `tail_decades` multiples of the
// integrand's decay length; the final panel must be negligible against the
// requested tolerance or the integral is reported as non-convergent.
struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_subdivisions = 4000;
  int tail_decades = 40;

  void validate() const;
};

template <class T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  int evaluations = 0;
};

/// Bessel function of the first kind J_n(x) for n in {0, 1, 2} and x >= 0.
///
/// Power series below x = 12, Miller backward recurrence up to x = 30 and the
/// Hankel asymptotic expansion beyond. Absolute accuracy is ~1e-15 over the
/// whole range.
double bessel_j(int order, double x);

/// Closed form of  int_0^inf dk k^(nu+1) J_nu(k rho) exp(-|z| sqrt(k^2 - k_d^2))
/// for nu in {1, 2}, obtained from the K_(nu+3/2) representation at
/// tau = -i k_d. For k < k_d the square root is taken on the outgoing branch,
/// sqrt(k^2 - k_d^2) = -i sqrt(k_d^2 - k^2).
Complex bessel_exponential_integral(int nu, double rho, double z, double k_d);

/// Integral over [lower, inf). `decay_scale` is the e-folding length of the
/// integrand tail; the range is truncated at lower + tail_decades * decay_scale.
Complex integrate_semi_infinite(const std::function<Complex(double)>& integrand,
                                double lower, double decay_scale,
                                const QuadratureSpec& spec = {});

double integrate_semi_infinite_real(const std::function<double(double)>& integrand,
                                    double lower, double decay_scale,
                                    const QuadratureSpec& spec = {});

Complex integrate_finite(const std::function<Complex(double)>& integrand, double a,
                         double b, const QuadratureSpec& spec = {});

/// int_{omega_min}^{omega_max} f(omega) d omega, evaluated in the variable
/// ln(omega) so that integrands spread over many decades are resolved evenly.
double integrate_log_frequency(const std::function<double(double)>& integrand,
                               double omega_min, double omega_max,
                               const QuadratureSpec& spec = {});

/// term(0)/2 + sum_{l>=1} term(l). Stops once two consecutive terms are both
/// below rel_tol times the running sum.
double matsubara_sum(const std::function<double(int)>& term, double rel_tol,
                     int l_max = 100000);

}  // namespace evanescent::numerics
