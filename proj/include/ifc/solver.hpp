#pragma once

#include <cmath>
#include <string>

#include "ifc/errors.hpp"

namespace ifc {

struct BisectionOptions {
  double tolerance = 1e-12;  // on |r(t)|
  int max_iterations = 200;
};

struct RootResult {
  double root;
  double residual;
  int iterations;  // residual evaluations at bracket midpoints
};

/// Bisection for r(t) = 0 on the open bracket (lo, hi).
///
/// The midpoint is tested before the bracket, so a residual that vanishes
/// everywhere returns the midpoint after one iteration. Otherwise r(lo) and
/// r(hi) must have strictly opposite signs. Throws NoRootError when they do
/// not, or when |r| has not reached the tolerance once the bracket stops
/// shrinking or the iteration cap is hit.
template <typename Residual>
RootResult bisect(Residual&& r, double lo, double hi, const BisectionOptions& opts = {}) {
  double a = lo;
  double b = hi;
  double fa = r(a);
  const double fb = r(b);
  const bool sign_change = (fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0);
  double best_t = a;
  double best_r = fa;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    const double m = a + (b - a) / 2;
    if (m <= a || m >= b) break;
    const double fm = r(m);
    if (it == 1 || std::abs(fm) < std::abs(best_r)) {
      best_t = m;
      best_r = fm;
    }
    if (std::abs(fm) <= opts.tolerance) return {m, fm, it};
    if (!sign_change) {
      throw NoRootError("no sign change of the residual on the bracket (" + std::to_string(lo) +
                        ", " + std::to_string(hi) + ")");
    }
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  throw NoRootError("bisection stalled at t = " + std::to_string(best_t) + " with residual " +
                    std::to_string(best_r));
}

}  // namespace ifc
