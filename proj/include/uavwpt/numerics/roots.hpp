#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "uavwpt/error.hpp"
#include "uavwpt/numerics/tolerance.hpp"

namespace uavwpt::numerics {

/// Bisection for a sign change of f in [lo, hi]. Deterministic: the sequence of
/// evaluation points depends only on the bracket. Stops when f hits zero exactly
/// or the bracket is narrower than max(tol.absolute, tol.relative * |x|).
template <class F>
double find_crossing(F&& f, double lo, double hi, const Tolerance& tol = kDefaultRootTolerance) {
  tol.validate();
  if (!(lo <= hi)) {
    throw DomainError("find_crossing: requires lo <= hi");
  }
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw BracketingError("find_crossing: no sign change on [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  }
  for (int i = 0; i < tol.max_iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= std::max(tol.absolute, tol.relative * std::abs(mid)) || mid == lo ||
        mid == hi) {
      return mid;
    }
    const double f_mid = f(mid);
    if (f_mid == 0.0) {
      return mid;
    }
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  throw NumericalError("find_crossing: bracket did not shrink below tolerance", 0.5 * (lo + hi));
}

}  // namespace uavwpt::numerics
