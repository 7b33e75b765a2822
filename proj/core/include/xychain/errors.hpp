#ifndef XYCHAIN_ERRORS_HPP
#define XYCHAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xychain {

/// Adaptive integration could not reach the requested tolerance within the
/// panel budget. Usually indicates an integrand singularity that was not
/// split out (e.g. the isotropic case handled without interval splitting).
struct QuadratureFailure : std::runtime_error {
  explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of a closed-form expression.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Requested a parameter combination the correlator formulas do not cover
/// (e.g. separations beyond nearest neighbour out of equilibrium).
struct UnsupportedConfiguration : std::runtime_error {
  explicit UnsupportedConfiguration(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix that should be a density matrix has a significantly negative
/// eigenvalue; the correlators fed into the assembly are inconsistent.
struct PositivityError : std::runtime_error {
  explicit PositivityError(const std::string& what) : std::runtime_error(what) {}
};

/// No start of a multi-start local search converged.
struct OptimizerStall : std::runtime_error {
  explicit OptimizerStall(const std::string& what) : std::runtime_error(what) {}
};

/// Extremal eigensolver did not converge.
struct SolverFailure : std::runtime_error {
  explicit SolverFailure(const std::string& what) : std::runtime_error(what) {}
};

/// A time-average window is too short to be meaningful.
struct InsufficientWindow : std::runtime_error {
  explicit InsufficientWindow(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xychain

#endif
