#ifndef XYCHAIN_MODEL_HPP
#define XYCHAIN_MODEL_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace xychain {

/// Parameters of the anisotropic XY chain in a transverse field.
///
/// The chain couples neighbouring spins with strengths (1+gamma)/4 and
/// (1-gamma)/4 along x and y (Pauli normalisation) and carries a field term
/// -(h/2) sum_j sigma_z^j. A sudden quench h0 -> hf happens at time zero;
/// the equilibrium case is hf == h0. beta is the inverse temperature of the
/// pre-quench state, +infinity meaning the ground state. Time is
/// dimensionless (hbar = 1).
struct ModelParams {
  double gamma = 1.0;
  double h0 = 0.0;
  double hf = 0.0;
  double beta = std::numeric_limits<double>::infinity();
  double t = 0.0;

  ModelParams() = default;
  ModelParams(double gamma_, double h0_, double hf_,
              double beta_ = std::numeric_limits<double>::infinity(), double t_ = 0.0)
      : gamma(gamma_), h0(h0_), hf(hf_), beta(beta_), t(t_) {
    validate();
  }

  bool equilibrium() const { return hf == h0; }
  bool zero_temperature() const { return std::isinf(beta); }

  void validate() const {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must be in [0,1]");
    if (!(h0 >= 0.0) || !(hf >= 0.0)) throw std::invalid_argument("fields must be >= 0");
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive (or +inf)");
    if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
  }

  ModelParams at_time(double time) const {
    ModelParams p = *this;
    p.t = time;
    p.validate();
    return p;
  }
};

inline ModelParams equilibrium_params(double gamma, double h,
                                      double beta = std::numeric_limits<double>::infinity()) {
  return ModelParams(gamma, h, h, beta, 0.0);
}

inline ModelParams quench_params(double gamma, double h0, double hf, double t,
                                 double beta = std::numeric_limits<double>::infinity()) {
  return ModelParams(gamma, h0, hf, beta, t);
}

/// A fundamental fermionic contraction evaluated at integer site offset R.
/// Values are normalised spin contractions, |value| <= 1.
struct Contraction {
  int offset = 0;
  double value = 0.0;
};

}  // namespace xychain

#endif
