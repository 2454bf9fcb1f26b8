#include <doctest.h>

#include "support.hpp"

using namespace ibsim;

TEST_SUITE_BEGIN("hilbert");

TEST_CASE("state vectors are normalized on construction") {
  Eigen::VectorXcd a(3);
  a << Complex(3.0, 0.0), Complex(0.0, 4.0), Complex(0.0, 0.0);
  const StateVector psi(a);
  CHECK(std::abs(psi.amplitudes().squaredNorm() - 1.0) < 1e-12);
  CHECK(psi.dim() == 3);

  Rng rng(11);
  for (int dim : {2, 5, 16}) {
    const StateVector s = sample_sphere_uniform(dim, rng);
    CHECK(std::abs(s.amplitudes().squaredNorm() - 1.0) < 1e-12);
  }
}

TEST_CASE("state vector rejects dim < 2 and zero norm") {
  Eigen::VectorXcd one(1);
  one << Complex(1.0, 0.0);
  CHECK_THROWS_AS(StateVector{one}, ValidationError);

  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(3);
  CHECK_THROWS_AS(StateVector{zero}, ValidationError);
}

TEST_CASE("expectation of the identity is 1") {
  Rng rng(42);
  for (int dim : {2, 3, 7}) {
    const StateVector psi = sample_sphere_uniform(dim, rng);
    CHECK(expectation(HermitianOperator::identity(dim), psi) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("two-level expectation values match hand computation") {
  Eigen::VectorXcd half(2);
  half << Complex(M_SQRT1_2, 0.0), Complex(M_SQRT1_2, 0.0);
  const StateVector psi(half);

  const HermitianOperator sz =
      HermitianOperator::diagonal(Eigen::Vector2d(1.0, -1.0));
  CHECK(std::abs(expectation(sz, psi)) < 1e-12);

  CHECK(expectation(testsup::pauli_x(), psi) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("expectation rejects mismatched dimensions") {
  Rng rng(1);
  const StateVector psi = sample_sphere_uniform(3, rng);
  CHECK_THROWS_AS(expectation(HermitianOperator::identity(2), psi),
                  ContractViolation);
}

TEST_CASE("non-Hermitian matrices are rejected") {
  Eigen::Matrix2cd m;
  m << Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(0.5, 0.0),
      Complex(0.0, 0.0);
  CHECK_THROWS_AS(HermitianOperator{m}, ContractViolation);

  Eigen::Matrix2cd imag_diag;
  imag_diag << Complex(0.0, 1e-6), Complex(0.0, 0.0), Complex(0.0, 0.0),
      Complex(1.0, 0.0);
  CHECK_THROWS_AS(HermitianOperator{imag_diag}, ContractViolation);
}

TEST_CASE("eigendecompose sorts a diagonal matrix ascending") {
  const auto sys =
      eigendecompose(HermitianOperator::diagonal(Eigen::Vector2d(3.0, 1.0)));
  CHECK(sys.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sys.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(std::abs(sys.eigenvectors[0].amplitude(1)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(sys.eigenvectors[1].amplitude(0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-level tunneling matrix has the symmetric/antisymmetric pair") {
  Eigen::Matrix2cd m;
  m << 0.0, -1.0, -1.0, 0.0;
  const auto sys = eigendecompose(HermitianOperator(m));
  CHECK(sys.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(sys.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));

  const auto& ground = sys.eigenvectors[0].amplitudes();
  CHECK(std::abs(ground(0) - Complex(M_SQRT1_2, 0.0)) < 1e-10);
  CHECK(std::abs(ground(1) - Complex(M_SQRT1_2, 0.0)) < 1e-10);

  const auto& excited = sys.eigenvectors[1].amplitudes();
  CHECK(std::abs(excited(0) - Complex(M_SQRT1_2, 0.0)) < 1e-10);
  CHECK(std::abs(excited(1) + Complex(M_SQRT1_2, 0.0)) < 1e-10);
}

TEST_CASE("random 8x8 reconstruction and residuals") {
  Rng rng(2024);
  const HermitianOperator h = testsup::random_hermitian(8, rng);
  const auto sys = eigendecompose(h);

  Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(8, 8);
  for (int n = 0; n < 8; ++n) {
    const auto& v = sys.eigenvectors[n].amplitudes();
    rebuilt += sys.eigenvalues[n] * v * v.adjoint();
  }
  CHECK((rebuilt - h.matrix()).norm() < 1e-10);

  for (int n = 0; n < 8; ++n) {
    const auto& v = sys.eigenvectors[n].amplitudes();
    CHECK((h.matrix() * v - sys.eigenvalues[n] * v).norm() < 1e-10);
    for (int k = n + 1; k < 8; ++k) {
      CHECK(std::abs(v.dot(sys.eigenvectors[k].amplitudes())) < 1e-10);
    }
  }
}

TEST_CASE("expectation in an eigenstate returns its eigenvalue") {
  Rng rng(7);
  for (int dim : {2, 5, 12}) {
    const HermitianOperator h = testsup::random_hermitian(dim, rng);
    const auto sys = eigendecompose(h);
    for (int n = 0; n < dim; ++n) {
      CHECK(std::abs(expectation(h, sys.eigenvectors[n]) -
                     sys.eigenvalues[n]) < 1e-10);
    }
  }
}

TEST_CASE("eigenbasis resolves the trace of any observable") {
  Rng rng(99);
  const int dim = 6;
  const HermitianOperator h = testsup::random_hermitian(dim, rng);
  const HermitianOperator o = testsup::random_hermitian(dim, rng);
  const auto sys = eigendecompose(h);
  double sum = 0.0;
  for (const auto& v : sys.eigenvectors) sum += expectation(o, v);
  CHECK(std::abs(sum - o.matrix().trace().real()) < 1e-9);
}

TEST_CASE("expectation is global-phase invariant") {
  Rng rng(5);
  const HermitianOperator o = testsup::random_hermitian(4, rng);
  const StateVector psi = sample_sphere_uniform(4, rng);
  const double base = expectation(o, psi);
  for (int k = 0; k < 5; ++k) {
    const double theta = 2.0 * M_PI * rng.uniform();
    const StateVector rotated(std::exp(Complex(0.0, theta)) *
                              psi.amplitudes());
    CHECK(std::abs(expectation(o, rotated) - base) < 1e-12);
  }
}

TEST_CASE("dimension cap raises a capacity error") {
  Rng rng(3);
  const HermitianOperator h = testsup::random_hermitian(8, rng);
  CHECK_THROWS_AS(eigendecompose(h, 4), CapacityError);
}

TEST_CASE("eigendecompose is deterministic") {
  Rng rng(31415);
  const HermitianOperator h = testsup::random_hermitian(6, rng);
  const auto a = eigendecompose(h);
  const auto b = eigendecompose(h);
  for (int n = 0; n < 6; ++n) {
    CHECK(a.eigenvalues[n] == b.eigenvalues[n]);
    CHECK(a.eigenvectors[n].amplitudes() == b.eigenvectors[n].amplitudes());
  }
}

TEST_SUITE_END();
