#include <cmath>
#include <stdexcept>

#include "evanescent/constants.hpp"
#include "evanescent/numerics.hpp"

namespace evanescent::numerics {

namespace {

constexpr double kSeriesLimit = 12.0;
constexpr double kAsymptoticLimit = 30.0;

// Ascending series; long double absorbs the cancellation near x = 12.
double series(int n, double x) {
  const long double half = 0.5L * x;
  const long double h2 = half * half;
  long double term = 1.0L;
  for (int i = 1; i <= n; ++i) term *= half / i;
  long double sum = term;
  for (int m = 1; m < 200; ++m) {
    term *= -h2 / (static_cast<long double>(m) * (m + n));
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum)) break;
  }
  return static_cast<double>(sum);
}

// Miller backward recurrence normalised by J0 + 2 sum J_2m = 1.
double miller(int n, double x) {
  int start = static_cast<int>(1.5 * x) + 40;
  if (start % 2 != 0) ++start;
  long double next = 0.0L;
  long double cur = 1e-30L;
  long double norm = 0.0L;
  long double wanted = 0.0L;
  for (int k = start; k >= 1; --k) {
    // cur = J_k, next = J_{k+1}; produce J_{k-1}
    const long double prev = 2.0L * k / x * cur - next;
    next = cur;
    cur = prev;
    const int idx = k - 1;
    if (idx == n) wanted = cur;
    if (idx == 0) {
      norm += cur;
    } else if (idx % 2 == 0) {
      norm += 2.0L * cur;
    }
  }
  return static_cast<double>(wanted / norm);
}

// Hankel expansion, summed until the terms stop shrinking.
double asymptotic(int n, double x) {
  const double mu = 4.0 * n * n;
  const double eight_x = 8.0 * x;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * eight_x);
    if (std::abs(term) > last) break;
    last = std::abs(term);
    if (k % 2 == 1) {
      q += ((k / 2) % 2 == 0 ? 1.0 : -1.0) * term;
    } else {
      p += ((k / 2) % 2 == 0 ? 1.0 : -1.0) * term;
    }
    if (last < 1e-18) break;
  }
  const double phase = (0.5 * n + 0.25) * constants::pi;
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double cos_chi = c * std::cos(phase) + s * std::sin(phase);
  const double sin_chi = s * std::cos(phase) - c * std::sin(phase);
  return std::sqrt(2.0 / (constants::pi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace

double bessel_j(int order, double x) {
  if (order < 0 || order > 2) throw std::invalid_argument("bessel_j supports orders 0, 1, 2");
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("bessel_j needs finite x >= 0");
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  if (x < kSeriesLimit) return series(order, x);
  if (x < kAsymptoticLimit) return miller(order, x);
  return asymptotic(order, x);
}

}  // namespace evanescent::numerics
