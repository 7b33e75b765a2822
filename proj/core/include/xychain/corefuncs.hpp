#ifndef XYCHAIN_COREFUNCS_HPP
#define XYCHAIN_COREFUNCS_HPP

#include <vector>

#include "xychain/model.hpp"
#include "xychain/quadrature.hpp"

namespace xychain {

/// Quasiparticle energy Lambda(h) = sqrt(gamma^2 sin^2 phi + (h - cos phi)^2).
double dispersion(double h, double phi, double gamma);

/// tanh(beta * Lambda / 2) with the zero-temperature limit built in:
/// at beta = +inf this is 1 for Lambda > 0 and 0 at Lambda = 0.
double thermal_factor(double beta, double lambda);

/// Two-point fermionic contraction G_R after a field quench h0 -> hf,
/// evaluated at time t by adaptive quadrature to the given absolute
/// tolerance. In equilibrium (hf == h0) the reduced time-independent branch
/// is taken. Index convention fixed by the nearest-neighbour dictionary
/// T_xx^(1) = G_{-1}, T_yy^(1) = G_{+1}.
Contraction g_correlator(int R, const ModelParams& params, double abs_tol = 1e-10);

/// Anomalous contraction S_R; identically zero in equilibrium or at t = 0
/// (returned without quadrature). Sign convention fixed against exact
/// finite-chain time evolution so that T_xy^(1) = S_1.
Contraction s_correlator(int R, const ModelParams& params, double abs_tol = 1e-10);

/// Transverse magnetization M_z = G_0 / 2.
double magnetization(const ModelParams& params, double abs_tol = 1e-10);

/// Closed form of M_z for gamma = 1 in terms of complete elliptic integrals,
///   M_z(h) = (1/2pi) [ (h-1)/h K(k) + (h+1)/h E(k) ],  k = 2 sqrt(h)/(1+h).
/// Valid for h > 0, h != 1 (K diverges at modulus 1).
double mz_ising_closed_form(double h);

/// Time-averaged (dephased) contraction: the oscillatory cos(2 Lambda t)
/// terms of G_R are dropped, giving the exact infinite-time average of
/// G_R(t). The corresponding average of S_R is zero.
Contraction g_correlator_stationary(int R, const ModelParams& params, double abs_tol = 1e-10);

/// Table of G_R (and S_R for quenches) for |R| <= max_offset, computed once
/// and shared by the determinant and Wick evaluators.
class CorrelatorTable {
 public:
  CorrelatorTable(const ModelParams& params, int max_offset, double abs_tol = 1e-10);

  double g(int R) const;
  double s(int R) const;
  int max_offset() const { return max_offset_; }
  const ModelParams& params() const { return params_; }

 private:
  ModelParams params_;
  int max_offset_;
  std::vector<double> g_;  // index R + max_offset_
  std::vector<double> s_;
};

}  // namespace xychain

#endif
