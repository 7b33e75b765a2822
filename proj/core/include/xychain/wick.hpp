#ifndef XYCHAIN_WICK_HPP
#define XYCHAIN_WICK_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "xychain/corefuncs.hpp"

namespace xychain {

/// Pfaffian of an even-dimensional skew-symmetric matrix by Gaussian
/// elimination with row/column pivoting (Parlett-Reid style). Only the
/// strictly upper triangle of a is read; the lower triangle is ignored.
std::complex<double> pfaffian(Eigen::MatrixXcd a);

/// Expectation of a Pauli string on the Gaussian (free-fermion) state
/// described by the contraction table.
///
/// `labels` covers a contiguous window of sites; labels[j] is the operator
/// ('i', 'x', 'y', 'z') on the j-th window site. Strings with an odd number
/// of x/y operators vanish identically and return 0 without work.
///
/// Internally each operator is rewritten in Majorana pairs A_l = c_l^ + c_l,
/// B_l = c_l^ - c_l with the Jordan-Wigner string truncated to the window
/// (valid for even x/y count) and the monomial is contracted with Wick's
/// theorem as a Pfaffian of the pair-correlation matrix
///   <A_m A_n> = delta + i S_{n-m},  <B_m B_n> = -delta + i S_{n-m},
///   <B_m A_n> = G_{m-n}.
/// Works for equilibrium and quenched (still Gaussian) states alike.
double pauli_expectation(const std::string& labels, const CorrelatorTable& table);

}  // namespace xychain

#endif
