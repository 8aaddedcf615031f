#pragma once

// Globally adaptive Gauss-Kronrod (G10/K21) integration. Header-only so that
// physics kernels can pass lambdas without type erasure.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <span>
#include <sstream>
#include <vector>

#include "evanescent/errors.hpp"
#include "evanescent/numerics.hpp"

namespace evanescent::numerics::detail {

// QUADPACK qk21 nodes and weights.
inline constexpr std::array<double, 11> kronrod_nodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kronrod_weights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> gauss_weights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class T>
bool is_finite_value(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

template <class T>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  T value{};
  double error = 0.0;
  double roundoff = 0.0;
};

template <class T>
struct PanelOrder {
  bool operator()(const Panel<T>& lhs, const Panel<T>& rhs) const {
    return lhs.error < rhs.error;
  }
};

[[noreturn]] inline void throw_nan(double at) {
  std::ostringstream os;
  os << "integrand returned a non-finite value at " << at;
  throw NumericalError(ErrorKind::NotANumber, os.str());
}

// One 21-point rule with the QUADPACK error heuristic.
template <class T, class F>
Panel<T> kronrod_panel(F& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<T, 10> left{};
  std::array<T, 10> right{};
  const T fc = f(center);
  if (!is_finite_value(fc)) throw_nan(center);

  T resk = kronrod_weights[10] * fc;
  T resg{};
  double resabs = kronrod_weights[10] * std::abs(fc);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kronrod_nodes[j];
    left[j] = f(center - dx);
    right[j] = f(center + dx);
    if (!is_finite_value(left[j])) throw_nan(center - dx);
    if (!is_finite_value(right[j])) throw_nan(center + dx);
    resk += kronrod_weights[j] * (left[j] + right[j]);
    resabs += kronrod_weights[j] * (std::abs(left[j]) + std::abs(right[j]));
    if (j % 2 == 1) resg += gauss_weights[j / 2] * (left[j] + right[j]);
  }
  const T mean = resk * 0.5;
  double resasc = kronrod_weights[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    resasc += kronrod_weights[j] * (std::abs(left[j] - mean) + std::abs(right[j] - mean));
  }

  const double width = std::abs(half);
  resabs *= width;
  resasc *= width;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double roundoff = 50.0 * eps * resabs;
  err = std::max(err, roundoff);
  return Panel<T>{a, b, resk * half, err, roundoff};
}

// Adaptive integration over consecutive panels [breaks[i], breaks[i+1]].
// Converges when the summed error estimate is below
// max(abs_tol, rel_tol * |I|), or when every remaining panel is limited by
// floating-point roundoff.
template <class T, class F>
QuadratureResult<T> adaptive(F&& f, std::span<const double> breaks,
                             const QuadratureSpec& spec) {
  if (breaks.size() < 2) {
    throw std::invalid_argument("adaptive quadrature needs at least one panel");
  }
  std::priority_queue<Panel<T>, std::vector<Panel<T>>, PanelOrder<T>> active;
  std::vector<Panel<T>> settled;

  T total{};
  double total_error = 0.0;
  int evaluations = 0;
  int panels = 0;

  auto admit = [&](Panel<T> p) {
    total += p.value;
    total_error += p.error;
    ++panels;
    evaluations += 21;
    const double width = p.b - p.a;
    const double scale = std::max({1.0, std::abs(p.a), std::abs(p.b)});
    const bool unrefinable =
        p.error <= p.roundoff * 1.0000001 ||
        width <= 64.0 * std::numeric_limits<double>::epsilon() * scale;
    if (unrefinable) {
      settled.push_back(p);
    } else {
      active.push(p);
    }
  };

  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    admit(kronrod_panel<T>(f, breaks[i], breaks[i + 1]));
  }

  while (true) {
    const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (total_error <= target || active.empty()) break;
    if (panels >= spec.max_subdivisions) {
      std::ostringstream os;
      os << "adaptive quadrature exhausted " << spec.max_subdivisions
         << " panels (error estimate " << total_error << ", target " << target << ")";
      throw NumericalError(ErrorKind::NonConvergence, os.str());
    }
    Panel<T> worst = active.top();
    active.pop();
    total -= worst.value;
    total_error -= worst.error;
    --panels;
    const double mid = 0.5 * (worst.a + worst.b);
    admit(kronrod_panel<T>(f, worst.a, mid));
    admit(kronrod_panel<T>(f, mid, worst.b));
  }

  // Re-sum to shed the drift of the running totals.
  T value{};
  double error = 0.0;
  for (const auto& p : settled) {
    value += p.value;
    error += p.error;
  }
  while (!active.empty()) {
    value += active.top().value;
    error += active.top().error;
    active.pop();
  }
  return QuadratureResult<T>{value, error, evaluations};
}

template <class T, class F>
QuadratureResult<T> finite(F&& f, double a, double b, const QuadratureSpec& spec,
                           int panels = 1) {
  std::vector<double> breaks(static_cast<std::size_t>(panels) + 1);
  for (int i = 0; i <= panels; ++i) {
    breaks[static_cast<std::size_t>(i)] = a + (b - a) * i / panels;
  }
  breaks.back() = b;
  return adaptive<T>(std::forward<F>(f), breaks, spec);
}

// [lower, lower + tail_decades * scale], one initial panel per decay length.
// When the final panel is not negligible against max(abs_tol, rel_tol |I|)
// the range is extended by further blocks of tail_decades panels, up to
// kMaxTailBlocks blocks, before non-convergence is reported.
inline constexpr int kMaxTailBlocks = 8;

template <class T, class F>
QuadratureResult<T> semi_infinite(F&& f, double lower, double scale,
                                  const QuadratureSpec& spec) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("decay scale must be positive and finite");
  }
  if (!std::isfinite(lower)) throw std::invalid_argument("lower limit must be finite");
  const int n = spec.tail_decades;
  QuadratureResult<T> total;
  double start = lower;
  for (int block = 0; block < kMaxTailBlocks; ++block) {
    std::vector<double> breaks(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) breaks[static_cast<std::size_t>(i)] = start + scale * i;
    const auto part = adaptive<T>(f, breaks, spec);
    total.value += part.value;
    total.error += part.error;
    total.evaluations += part.evaluations + 21;

    const Panel<T> last = kronrod_panel<T>(f, breaks[n - 1], breaks[n]);
    const double allowed = std::max(spec.abs_tol, spec.rel_tol * std::abs(total.value));
    if (std::abs(last.value) <= allowed) return total;
    start = breaks[n];
  }
  std::ostringstream os;
  os << "integrand tail not negligible after " << kMaxTailBlocks * n
     << " decay lengths (scale " << scale << ")";
  throw NumericalError(ErrorKind::NonConvergence, os.str());
}

}  // namespace evanescent::numerics::detail
