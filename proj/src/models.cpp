#include "models.hpp"

#include <cmath>

namespace ibsim {

namespace {

Eigen::VectorXcd superposition(const StateVector& a, const StateVector& b,
                               double sign) {
  return (a.amplitudes() + sign * b.amplitudes()) / std::sqrt(2.0);
}

}  // namespace

WfeSpec::WfeSpec(double strength, int n_dof, HermitianOperator com_operator)
    : strength(strength), n_dof(n_dof), com_operator(std::move(com_operator)) {
  if (!(strength >= 0.0) || !std::isfinite(strength)) {
    throw ValidationError("WfeSpec: strength w must be finite and >= 0");
  }
  if (n_dof < 1) {
    throw ValidationError("WfeSpec: n_dof must be >= 1");
  }
}

double wfe_energy(const WfeSpec& spec, const StateVector& psi) {
  const double n = static_cast<double>(spec.n_dof);
  return spec.strength * n * n *
         OperatorVariance(spec.com_operator).value(psi.amplitudes());
}

TotalEnergy::TotalEnergy(HermitianOperator hamiltonian, WfeSpec wfe)
    : linear_(std::move(hamiltonian)),
      dispersion_(wfe.com_operator),
      scale_(wfe.strength * static_cast<double>(wfe.n_dof) *
             static_cast<double>(wfe.n_dof)) {
  if (linear_.dim() != dispersion_.dim()) {
    throw ContractViolation(
        "TotalEnergy: Hamiltonian and COM operator dimensions differ");
  }
}

double TotalEnergy::value(const Eigen::VectorXcd& a) const {
  return linear_.value(a) + scale_ * dispersion_.value(a);
}

Eigen::VectorXcd TotalEnergy::gradient(const Eigen::VectorXcd& a) const {
  return linear_.gradient(a) + scale_ * dispersion_.gradient(a);
}

EnantiomerModel::EnantiomerModel(double site_energy, double tunneling,
                                 double separation, double wfe_strength,
                                 int n_dof)
    : site_energy_(site_energy),
      tunneling_(tunneling),
      separation_(separation),
      wfe_(wfe_strength, n_dof,
           HermitianOperator::diagonal(
               Eigen::Vector2d(separation / 2.0, -separation / 2.0))),
      hamiltonian_((Eigen::Matrix2cd() << Complex(site_energy, 0.0),
                    Complex(-tunneling, 0.0), Complex(-tunneling, 0.0),
                    Complex(site_energy, 0.0))
                       .finished()),
      psi_a_(StateVector::basis_state(2, 0)),
      psi_b_(StateVector::basis_state(2, 1)),
      psi_symmetric_(superposition(psi_a_, psi_b_, +1.0)),
      psi_antisymmetric_(superposition(psi_a_, psi_b_, -1.0)) {
  if (!(tunneling > 0.0)) {
    throw ValidationError("EnantiomerModel: tunneling Delta must be > 0");
  }
  if (!(separation > 0.0)) {
    throw ValidationError("EnantiomerModel: separation d must be > 0");
  }

  // Construction-time verification of the spectral structure: eigenpairs are
  // the symmetric/antisymmetric combinations at E -+ Delta, and the localized
  // forms sit strictly above the ground state.
  const EigenSystem eig = eigendecompose(hamiltonian_);
  const double scale = std::max(1.0, std::abs(site_energy) + tunneling);
  if (std::abs(eig.eigenvalues[0] - (site_energy - tunneling)) >
          1e-12 * scale ||
      std::abs(eig.eigenvalues[1] - (site_energy + tunneling)) >
          1e-12 * scale) {
    throw std::runtime_error("EnantiomerModel: unexpected spectrum");
  }
  const double localized = expectation(hamiltonian_, psi_a_);
  const double ground = expectation(hamiltonian_, psi_symmetric_);
  if (!(localized > ground)) {
    throw std::runtime_error(
        "EnantiomerModel: localized forms must lie above the ground state");
  }
}

TotalEnergy EnantiomerModel::energy_functional() const {
  return TotalEnergy(hamiltonian_, wfe_);
}

double EnantiomerModel::total_energy(const StateVector& psi) const {
  return expectation(hamiltonian_, psi) + wfe_energy(wfe_, psi);
}

namespace {

int checked_n_spins(int n_spins) {
  if (n_spins < 2) {
    throw ValidationError("CurieWeissModel: n_spins must be >= 2");
  }
  return n_spins;
}

double checked_coupling(double coupling) {
  if (!(coupling > 0.0) || !std::isfinite(coupling)) {
    throw ValidationError("CurieWeissModel: coupling J must be > 0");
  }
  return coupling;
}

// Total magnetization in the symmetric sector: diagonal {N, N-2, ..., -N}.
Eigen::VectorXd magnetization_spectrum(int n_spins) {
  Eigen::VectorXd m(n_spins + 1);
  for (int k = 0; k <= n_spins; ++k) {
    m(k) = static_cast<double>(n_spins - 2 * k);
  }
  return m;
}

WfeSpec curie_weiss_wfe(int n_spins, double wfe_strength) {
  const Eigen::VectorXd density =
      magnetization_spectrum(n_spins) / static_cast<double>(n_spins);
  return WfeSpec(wfe_strength, n_spins, HermitianOperator::diagonal(density));
}

HermitianOperator curie_weiss_hamiltonian(int n_spins, double coupling) {
  const Eigen::VectorXd m = magnetization_spectrum(n_spins);
  const Eigen::VectorXd h =
      -coupling / (2.0 * n_spins) * m.cwiseProduct(m);
  return HermitianOperator::diagonal(h);
}

}  // namespace

CurieWeissModel::CurieWeissModel(int n_spins, double coupling,
                                 double wfe_strength)
    : n_spins_(checked_n_spins(n_spins)),
      coupling_(checked_coupling(coupling)),
      wfe_(curie_weiss_wfe(n_spins_, wfe_strength)),
      hamiltonian_(curie_weiss_hamiltonian(n_spins_, coupling_)),
      magnetization_(
          HermitianOperator::diagonal(magnetization_spectrum(n_spins_))) {}

HermitianOperator CurieWeissModel::m_squared_operator() const {
  const Eigen::MatrixXcd& density = wfe_.com_operator.matrix();
  return HermitianOperator(density * density);
}

TotalEnergy CurieWeissModel::energy_functional() const {
  return TotalEnergy(hamiltonian_, wfe_);
}

double CurieWeissModel::total_energy(const StateVector& psi) const {
  return expectation(hamiltonian_, psi) + wfe_energy(wfe_, psi);
}

}  // namespace ibsim
