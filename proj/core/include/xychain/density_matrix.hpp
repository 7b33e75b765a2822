#ifndef XYCHAIN_DENSITY_MATRIX_HPP
#define XYCHAIN_DENSITY_MATRIX_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace xychain {

/// Dense Hermitian density matrix of dimension 4 or 8.
///
/// Construction validates hermiticity and unit trace to 1e-12 and positivity
/// up to a configurable slack (quadrature error propagates linearly into the
/// entries, so small negative eigenvalues are tolerated).
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(const Eigen::MatrixXcd& m, double positivity_slack = 1e-8);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return mat_; }
  double min_eigenvalue() const;

  /// Real part of tr(rho * op).
  double expectation(const Eigen::MatrixXcd& op) const;

 private:
  explicit DensityMatrix(Eigen::MatrixXcd m) : mat_(std::move(m)) {}
  Eigen::MatrixXcd mat_;
};

// Pauli matrices and helpers shared by the assembly and oracle code.
namespace pauli {
Eigen::Matrix2cd id();
Eigen::Matrix2cd x();
Eigen::Matrix2cd y();
Eigen::Matrix2cd z();
Eigen::Matrix2cd by_label(char label);  // 'i','x','y','z'

/// Tensor product of single-site Paulis, first label = leftmost factor.
Eigen::MatrixXcd string_op(const std::string& labels);
}  // namespace pauli

/// rho = (1/2^n) [ I + sum_s value_s * sigma_s ] from a list of Pauli-string
/// components, e.g. {"zz", ...} for two sites or {"xxz", ...} for three.
Eigen::MatrixXcd matrix_from_pauli_components(
    int nsites, const std::vector<std::pair<std::string, double>>& components);

}  // namespace xychain

#endif
