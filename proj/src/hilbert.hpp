#ifndef IBSIM_HILBERT_HPP
#define IBSIM_HILBERT_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "errors.hpp"

namespace ibsim {

using Complex = std::complex<double>;

/// A normalized wavefunction over a finite basis. The amplitude vector is
/// renormalized on construction and immutable afterwards, so the unit-norm
/// invariant holds for the life of the object.
class StateVector {
 public:
  /// dim must be >= 2 and the norm nonzero.
  explicit StateVector(Eigen::VectorXcd amplitudes);

  /// The basis state e_k.
  static StateVector basis_state(int dim, int index);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex amplitude(int index) const { return amplitudes_(index); }

 private:
  Eigen::VectorXcd amplitudes_;
};

/// <bra|ket>, conjugate-linear in the first argument.
Complex inner(const StateVector& bra, const StateVector& ket);

/// A dense self-adjoint matrix; Hermiticity is checked on construction
/// (entrywise, 1e-12 relative to the largest entry magnitude).
class HermitianOperator {
 public:
  explicit HermitianOperator(Eigen::MatrixXcd entries);

  static HermitianOperator identity(int dim);
  static HermitianOperator diagonal(const Eigen::VectorXd& entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }

 private:
  Eigen::MatrixXcd entries_;
};

/// Spectral decomposition with eigenvalues ascending. Eigenvector phases are
/// fixed by making the largest-magnitude component real-positive, and exact
/// eigenvalue ties are broken lexicographically, so the decomposition of a
/// given matrix is deterministic.
struct EigenSystem {
  std::vector<double> eigenvalues;
  std::vector<StateVector> eigenvectors;
};

/// <psi|op|psi>. The quadratic form of a Hermitian operator is real; an
/// imaginary residue above 1e-10 (relative) is reported as a contract
/// violation instead of being silently dropped.
double expectation(const HermitianOperator& op, const StateVector& psi);

inline constexpr int kDefaultEigenDimCap = 4096;

EigenSystem eigendecompose(const HermitianOperator& op,
                           int dim_cap = kDefaultEigenDimCap);

}  // namespace ibsim

#endif
