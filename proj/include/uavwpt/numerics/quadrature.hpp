#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>

#include "uavwpt/error.hpp"
#include "uavwpt/numerics/tolerance.hpp"

namespace uavwpt::numerics {

namespace detail {

template <class F>
class AdaptiveSimpson {
 public:
  AdaptiveSimpson(F& f, const Tolerance& tol) : f_(f), tol_(tol) {}

  double run(double a, double b) {
    const double fa = f_(a);
    const double fb = f_(b);
    const double m = 0.5 * (a + b);
    const double fm = f_(m);
    const double whole = simpson(a, b, fa, fm, fb);
    // The relative target is anchored on the coarse estimate of the whole integral.
    const double target = std::max(tol_.absolute, tol_.relative * std::abs(whole));
    return refine(a, b, fa, fm, fb, whole, target, 0);
  }

  bool converged() const noexcept { return converged_; }

 private:
  static double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double refine(double a, double b, double fa, double fm, double fb, double whole, double target,
                int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f_(lm);
    const double frm = f_(rm);
    evaluations_ += 2;
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * target) {
      return left + right + delta / 15.0;
    }
    if (depth >= tol_.max_iterations || evaluations_ > kEvaluationBudget) {
      converged_ = false;
      return left + right + delta / 15.0;
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * target, depth + 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * target, depth + 1);
  }

  static constexpr std::size_t kEvaluationBudget = 50'000'000;

  F& f_;
  Tolerance tol_;
  std::size_t evaluations_ = 3;
  bool converged_ = true;
};

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] with Richardson correction.
/// Throws NumericalError (carrying the best estimate) when the depth limit in
/// `tol.max_iterations` is hit before the local error test passes.
template <class F>
double integrate(F&& f, double a, double b, const Tolerance& tol = kDefaultQuadratureTolerance) {
  tol.validate();
  if (!(a <= b)) {
    throw DomainError("integrate: requires a <= b");
  }
  if (a == b) {
    return 0.0;
  }
  detail::AdaptiveSimpson<std::remove_reference_t<F>> rule(f, tol);
  const double estimate = rule.run(a, b);
  if (!std::isfinite(estimate)) {
    throw NumericalError("integrate: integrand produced a non-finite value", estimate);
  }
  if (!rule.converged()) {
    throw NumericalError("integrate: no convergence within depth " +
                             std::to_string(tol.max_iterations),
                         estimate);
  }
  return estimate;
}

}  // namespace uavwpt::numerics
