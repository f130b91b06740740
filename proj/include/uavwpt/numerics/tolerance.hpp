#pragma once

#include "uavwpt/error.hpp"

namespace uavwpt::numerics {

/// Convergence target shared by the iterative kernels. For quadrature,
/// `max_iterations` bounds the bisection depth; for root finding, the number of
/// bisection steps.
struct Tolerance {
  double absolute = 1e-12;
  double relative = 1e-10;
  int max_iterations = 60;

  void validate() const {
    if (!(absolute >= 0.0) || !(relative >= 0.0)) {
      throw DomainError("tolerance components must be non-negative");
    }
    if (absolute == 0.0 && relative == 0.0) {
      throw DomainError("tolerance needs a positive absolute or relative component");
    }
    if (max_iterations < 1) {
      throw DomainError("tolerance max_iterations must be at least 1");
    }
  }
};

inline constexpr Tolerance kDefaultQuadratureTolerance{1e-12, 1e-10, 60};
inline constexpr Tolerance kDefaultRootTolerance{1e-13, 1e-13, 200};

}  // namespace uavwpt::numerics
