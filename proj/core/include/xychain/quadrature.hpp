#ifndef XYCHAIN_QUADRATURE_HPP
#define XYCHAIN_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace xychain {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_panels = 10000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

/// Globally adaptive Gauss-Kronrod (7,15) integration of f on [a, b].
///
/// Panels are kept in a max-heap keyed by the embedded error estimate; the
/// worst panel is bisected until the summed estimate drops below abs_tol.
/// Throws QuadratureFailure if the panel budget is exhausted first.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Same, with the initial interval pre-split at the given interior
/// breakpoints (for piecewise-smooth integrands such as the isotropic case).
QuadratureResult integrate_split(const std::function<double(double)>& f, double a, double b,
                                 const std::vector<double>& breakpoints,
                                 const QuadratureOptions& opts = {});

/// Single non-adaptive Gauss-Kronrod (7,15) pass over [a, b]; returns the
/// Kronrod value and the embedded error estimate.
QuadratureResult gauss_kronrod_panel(const std::function<double(double)>& f, double a, double b);

}  // namespace xychain

#endif
