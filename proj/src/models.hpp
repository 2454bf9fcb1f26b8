#ifndef IBSIM_MODELS_HPP
#define IBSIM_MODELS_HPP

#include "functionals.hpp"

namespace ibsim {

/// Parameters of the wavefunction-energy term
///   WFE(psi) = w * N^2 * Var_psi(X),
/// where X is the collective (center-of-mass) coordinate operator and the
/// dispersion is its quantum variance in psi. N counts degrees of freedom of
/// the modeled system and is deliberately decoupled from the Hilbert-space
/// dimension; only the product w * N^2 enters the energy.
struct WfeSpec {
  double strength;  // w >= 0, energy per length^2
  int n_dof;        // N >= 1
  HermitianOperator com_operator;

  WfeSpec(double strength, int n_dof, HermitianOperator com_operator);
};

double wfe_energy(const WfeSpec& spec, const StateVector& psi);

/// <psi|H|psi> + WFE(psi): the augmented energy handed to the sampler and to
/// the ground-state search. Reduces exactly to the linear energy at w = 0.
class TotalEnergy final : public EnergyFunctional {
 public:
  TotalEnergy(HermitianOperator hamiltonian, WfeSpec wfe);

  int dim() const override { return linear_.dim(); }
  double value(const Eigen::VectorXcd& a) const override;
  Eigen::VectorXcd gradient(const Eigen::VectorXcd& a) const override;

 private:
  HermitianExpectation linear_;
  OperatorVariance dispersion_;
  double scale_;  // w * N^2
};

/// Two-level model of a symmetry-breaking molecule. In the (A, B) basis the
/// Hamiltonian is [[E, -Delta], [-Delta, E]] whose eigenstates are the
/// symmetric/antisymmetric combinations (psi_A +- psi_B)/sqrt(2) at energies
/// E -+ Delta; the localized forms psi_A, psi_B sit Delta above the ground
/// state. The collective coordinate is X = diag(+d/2, -d/2).
class EnantiomerModel {
 public:
  EnantiomerModel(double site_energy, double tunneling, double separation,
                  double wfe_strength, int n_dof);

  double site_energy() const { return site_energy_; }
  double tunneling() const { return tunneling_; }
  double separation() const { return separation_; }
  const WfeSpec& wfe() const { return wfe_; }
  const HermitianOperator& hamiltonian() const { return hamiltonian_; }
  const HermitianOperator& com_operator() const { return wfe_.com_operator; }

  const StateVector& psi_a() const { return psi_a_; }
  const StateVector& psi_b() const { return psi_b_; }
  const StateVector& psi_symmetric() const { return psi_symmetric_; }
  const StateVector& psi_antisymmetric() const { return psi_antisymmetric_; }

  TotalEnergy energy_functional() const;
  double total_energy(const StateVector& psi) const;

 private:
  double site_energy_, tunneling_, separation_;
  WfeSpec wfe_;
  HermitianOperator hamiltonian_;
  StateVector psi_a_, psi_b_, psi_symmetric_, psi_antisymmetric_;
};

/// Ferromagnet in the permutation-symmetric sector of N spins (dimension
/// N + 1). H = -(J/2N) M^2 with M the total magnetization, diagonal with
/// spectrum {N, N-2, ..., -N}; the collective coordinate for the WFE term is
/// the magnetization density M/N.
class CurieWeissModel {
 public:
  CurieWeissModel(int n_spins, double coupling, double wfe_strength);

  int n_spins() const { return n_spins_; }
  double coupling() const { return coupling_; }
  int dim() const { return n_spins_ + 1; }
  const WfeSpec& wfe() const { return wfe_; }
  const HermitianOperator& hamiltonian() const { return hamiltonian_; }
  const HermitianOperator& magnetization() const { return magnetization_; }
  /// M/N, the order parameter operator.
  const HermitianOperator& magnetization_density() const {
    return wfe_.com_operator;
  }
  /// (M/N)^2, the observable used in magnetization scans.
  HermitianOperator m_squared_operator() const;

  TotalEnergy energy_functional() const;
  double total_energy(const StateVector& psi) const;

 private:
  int n_spins_;
  double coupling_;
  WfeSpec wfe_;
  HermitianOperator hamiltonian_;
  HermitianOperator magnetization_;
};

}  // namespace ibsim

#endif
