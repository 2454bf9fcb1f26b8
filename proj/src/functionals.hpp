#ifndef IBSIM_FUNCTIONALS_HPP
#define IBSIM_FUNCTIONALS_HPP

#include <Eigen/Dense>

#include "hilbert.hpp"

namespace ibsim {

/// Real-valued functional of a wavefunction. Functionals are defined on raw
/// amplitude vectors through the scale-invariant extension f(a) = f(a/|a|),
/// which makes them insensitive to both global phase and overall scale.
/// That extension is what allows finite-difference checks (and the sphere
/// minimizer) to perturb raw coordinates without leaving the domain.
class StateFunctional {
 public:
  virtual ~StateFunctional() = default;
  virtual int dim() const = 0;
  virtual double value(const Eigen::VectorXcd& amplitudes) const = 0;
  double value(const StateVector& psi) const { return value(psi.amplitudes()); }
};

/// A functional with an analytic gradient, reported in complex form
/// g_n = dE/dx_n + i dE/dy_n for amplitudes a_n = x_n + i y_n. Used as the
/// Gibbs weight of the wavefunction ensemble and by the ground-state search.
class EnergyFunctional : public StateFunctional {
 public:
  virtual Eigen::VectorXcd gradient(const Eigen::VectorXcd& amplitudes) const = 0;
};

/// <a|O|a> / <a|a>. Doubles as the linear energy functional when O is the
/// Hamiltonian and as the generic quadratic-form observable.
class HermitianExpectation final : public EnergyFunctional {
 public:
  explicit HermitianExpectation(HermitianOperator op);

  int dim() const override { return op_.dim(); }
  double value(const Eigen::VectorXcd& a) const override;
  Eigen::VectorXcd gradient(const Eigen::VectorXcd& a) const override;

  const HermitianOperator& op() const { return op_; }

 private:
  HermitianOperator op_;
};

/// |<phi|a>|^2 / <a|a>, the weight of a reference state in a.
class ProjectionWeight final : public EnergyFunctional {
 public:
  explicit ProjectionWeight(StateVector reference);

  int dim() const override { return reference_.dim(); }
  double value(const Eigen::VectorXcd& a) const override;
  Eigen::VectorXcd gradient(const Eigen::VectorXcd& a) const override;

 private:
  StateVector reference_;
};

/// Var_a(X) = <X^2> - <X>^2, the dispersion of a Hermitian operator in the
/// state a. Nonnegative, and zero exactly on eigenvectors of X.
class OperatorVariance final : public EnergyFunctional {
 public:
  explicit OperatorVariance(HermitianOperator op);

  int dim() const override { return op_.dim(); }
  double value(const Eigen::VectorXcd& a) const override;
  Eigen::VectorXcd gradient(const Eigen::VectorXcd& a) const override;

 private:
  HermitianOperator op_;
  Eigen::MatrixXcd op_squared_;
};

}  // namespace ibsim

#endif
