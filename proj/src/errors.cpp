#include "evanescent/errors.hpp"

namespace evanescent {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonConvergence:
      return "non-convergence";
    case ErrorKind::NotANumber:
      return "not-a-number";
    case ErrorKind::PoleOnContour:
      return "pole-on-contour";
    case ErrorKind::DegenerateDenominator:
      return "degenerate-denominator";
    case ErrorKind::NoCrossing:
      return "no-crossing";
  }
  return "unknown";
}

}  // namespace evanescent
