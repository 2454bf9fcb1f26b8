#include "vnte.hpp"

#include <cmath>
#include <limits>

namespace ibsim {

ThermalParams::ThermalParams(double temperature) : temperature_(temperature) {
  if (std::isnan(temperature_) || temperature_ <= 0.0) {
    throw ValidationError("temperature must be positive (or +infinity)");
  }
}

ThermalParams ThermalParams::infinite() {
  return ThermalParams(std::numeric_limits<double>::infinity());
}

double ThermalParams::beta() const {
  return std::isinf(temperature_) ? 0.0 : 1.0 / temperature_;
}

double vnte_expectation(const HermitianOperator& hamiltonian,
                        const HermitianOperator& observable,
                        const ThermalParams& params) {
  if (hamiltonian.dim() != observable.dim()) {
    throw ContractViolation("vnte_expectation: operator dimensions differ");
  }
  const EigenSystem eig = eigendecompose(hamiltonian);
  const double beta = params.beta();
  const double shift = eig.eigenvalues.front();

  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t n = 0; n < eig.eigenvalues.size(); ++n) {
    const double w = std::exp(-beta * (eig.eigenvalues[n] - shift));
    weighted += w * expectation(observable, eig.eigenvectors[n]);
    total += w;
  }
  return weighted / total;
}

PartitionFunction vnte_partition(const HermitianOperator& hamiltonian,
                                 const ThermalParams& params) {
  const EigenSystem eig = eigendecompose(hamiltonian);
  const double beta = params.beta();
  const double shift = eig.eigenvalues.front();

  double total = 0.0;
  for (double lambda : eig.eigenvalues) {
    total += std::exp(-beta * (lambda - shift));
  }
  return PartitionFunction{total, shift, std::log(total) - beta * shift};
}

}  // namespace ibsim
