#ifndef XYCHAIN_TWOSITE_HPP
#define XYCHAIN_TWOSITE_HPP

#include <cstdint>

#include "xychain/corefuncs.hpp"
#include "xychain/density_matrix.hpp"
#include "xychain/model.hpp"

namespace xychain {

/// Nonvanishing correlators of the two-site reduced state at separation R:
///   rho = 1/4 [ I + txx XX + tyy YY + tzz ZZ + txy (XY + YX) ].
/// txy vanishes in equilibrium.
struct TwoSiteTensor {
  int r = 1;
  double txx = 0.0;
  double tyy = 0.0;
  double tzz = 0.0;
  double txy = 0.0;
};

/// Builds the tensor from the contractions.
/// R = 1 uses the nearest-neighbour dictionary
///   T_xx = G_{-1}, T_yy = G_{+1}, T_zz = G_0^2 - G_1 G_{-1} - S_1 S_{-1},
///   T_xy = S_1
/// and is valid out of equilibrium. R > 1 requires equilibrium and uses the
/// Toeplitz determinants
///   T_xx = det[G_{m-n-1}], T_yy = det[G_{m-n+1}] (R x R),
///   T_zz = G_0^2 - G_R G_{-R}.
TwoSiteTensor two_site_tensor(int R, const ModelParams& params, double abs_tol = 1e-10);
TwoSiteTensor two_site_tensor(int R, const CorrelatorTable& table);

/// 4x4 density matrix for the tensor; throws PositivityError when an
/// eigenvalue drops below -1e-8 (inconsistent correlators).
DensityMatrix assemble_two_site(const TwoSiteTensor& tensor);

/// Entries of the state in the Bell basis {Phi+, Phi-, Psi+, Psi-} that feed
/// the CHSH optimum: the diagonal, the imaginary parts of the (1,2), (1,3),
/// (2,4), (3,4) entries and the real parts of (1,4), (2,3).
struct BellDecomposition {
  double diag[4] = {0, 0, 0, 0};
  double i12 = 0, i13 = 0, i24 = 0, i34 = 0;
  double r14 = 0, r23 = 0;
};

BellDecomposition bell_decompose(const DensityMatrix& rho);

/// Closed-form maximum of tr(rho B_CHSH) over all measurement directions,
///   2 sqrt( |T|^2 - min(txx^2, tyy^2, tzz^2) + 2 txy^2 ).
double chsh_max(const TwoSiteTensor& tensor);

/// Equivalent maximum written in Bell-basis entries,
///   2 sqrt(2) sqrt( (d1-d4)^2 + (d2-d3)^2 + 4 i12^2 )
/// with the diagonal sorted in decreasing order.
double chsh_max_bell(const BellDecomposition& bell);

struct ChshOptimizerOptions {
  int starts = 64;
  std::uint64_t seed = 0x5eed'c45c'0001ull;
};

/// Numerical maximisation of tr(rho B_CHSH) over the 8 spherical angles of
/// the four measurement directions; oracle for chsh_max.
double chsh_max_bruteforce(const DensityMatrix& rho, const ChshOptimizerOptions& opts = {});

/// Wootters concurrence from the spin-flip spectrum of rho (YY) rho* (YY).
double concurrence(const DensityMatrix& rho);

}  // namespace xychain

#endif
