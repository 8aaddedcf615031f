#include <cmath>
#include <sstream>
#include <stdexcept>

#include "evanescent/errors.hpp"
#include "evanescent/numerics.hpp"

namespace evanescent::numerics {

double matsubara_sum(const std::function<double(int)>& term, double rel_tol, int l_max) {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
  if (l_max < 1) throw std::invalid_argument("l_max must be >= 1");

  const double t0 = term(0);
  if (!std::isfinite(t0)) {
    throw NumericalError(ErrorKind::NotANumber, "Matsubara term l=0 is not finite");
  }
  double sum = 0.5 * t0;
  double previous = std::abs(t0);
  for (int l = 1; l <= l_max; ++l) {
    const double t = term(l);
    if (!std::isfinite(t)) {
      std::ostringstream os;
      os << "Matsubara term l=" << l << " is not finite";
      throw NumericalError(ErrorKind::NotANumber, os.str());
    }
    sum += t;
    if (std::max(previous, std::abs(t)) <= rel_tol * std::abs(sum)) return sum;
    previous = std::abs(t);
  }
  std::ostringstream os;
  os << "Matsubara sum not converged after l_max=" << l_max << " terms";
  throw NumericalError(ErrorKind::NonConvergence, os.str());
}

}  // namespace evanescent::numerics
