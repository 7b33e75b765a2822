#ifndef XYCHAIN_OPTIMIZE_HPP
#define XYCHAIN_OPTIMIZE_HPP

#include <functional>
#include <vector>

namespace xychain {

struct NelderMeadOptions {
  double xatol = 1e-10;
  double fatol = 1e-12;
  int max_iter = 2000;
  double initial_step = 0.35;
};

struct NelderMeadResult {
  std::vector<double> x;
  double fval = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free simplex minimisation (adaptive Nelder-Mead).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, const NelderMeadOptions& opts = {});

/// Runs Nelder-Mead from every start and returns the best maximum of f.
/// Throws OptimizerStall if no start converges to a finite value.
NelderMeadResult multistart_maximize(const std::function<double(const std::vector<double>&)>& f,
                                     const std::vector<std::vector<double>>& starts,
                                     const NelderMeadOptions& opts = {});

}  // namespace xychain

#endif
