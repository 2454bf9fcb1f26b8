#include "functionals.hpp"

namespace ibsim {

namespace {

double checked_norm_squared(const Eigen::VectorXcd& a, int expected_dim) {
  if (a.size() != expected_dim) {
    throw ContractViolation("functional: amplitude dimension mismatch");
  }
  const double nsq = a.squaredNorm();
  if (!(nsq > 0.0)) {
    throw ContractViolation("functional: zero-norm amplitude vector");
  }
  return nsq;
}

}  // namespace

HermitianExpectation::HermitianExpectation(HermitianOperator op)
    : op_(std::move(op)) {}

double HermitianExpectation::value(const Eigen::VectorXcd& a) const {
  const double nsq = checked_norm_squared(a, dim());
  return a.dot(op_.matrix() * a).real() / nsq;
}

Eigen::VectorXcd HermitianExpectation::gradient(const Eigen::VectorXcd& a) const {
  const double nsq = checked_norm_squared(a, dim());
  const Eigen::VectorXcd oa = op_.matrix() * a;
  const double v = a.dot(oa).real() / nsq;
  return 2.0 * (oa - v * a) / nsq;
}

ProjectionWeight::ProjectionWeight(StateVector reference)
    : reference_(std::move(reference)) {}

double ProjectionWeight::value(const Eigen::VectorXcd& a) const {
  const double nsq = checked_norm_squared(a, dim());
  return std::norm(reference_.amplitudes().dot(a)) / nsq;
}

Eigen::VectorXcd ProjectionWeight::gradient(const Eigen::VectorXcd& a) const {
  const double nsq = checked_norm_squared(a, dim());
  const Complex overlap = reference_.amplitudes().dot(a);
  const double v = std::norm(overlap) / nsq;
  return 2.0 * (overlap * reference_.amplitudes() - v * a) / nsq;
}

OperatorVariance::OperatorVariance(HermitianOperator op)
    : op_(std::move(op)), op_squared_(op_.matrix() * op_.matrix()) {}

double OperatorVariance::value(const Eigen::VectorXcd& a) const {
  const double nsq = checked_norm_squared(a, dim());
  const double m = a.dot(op_.matrix() * a).real() / nsq;
  const double s = a.dot(op_squared_ * a).real() / nsq;
  return s - m * m;
}

Eigen::VectorXcd OperatorVariance::gradient(const Eigen::VectorXcd& a) const {
  const double nsq = checked_norm_squared(a, dim());
  const Eigen::VectorXcd xa = op_.matrix() * a;
  const Eigen::VectorXcd xxa = op_squared_ * a;
  const double m = a.dot(xa).real() / nsq;
  const double s = a.dot(xxa).real() / nsq;
  return 2.0 * (xxa - 2.0 * m * xa - (s - 2.0 * m * m) * a) / nsq;
}

}  // namespace ibsim
