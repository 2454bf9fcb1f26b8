#ifndef IBSIM_VNTE_HPP
#define IBSIM_VNTE_HPP

#include "hilbert.hpp"

namespace ibsim {

/// Temperature in energy units (Boltzmann constant fixed to 1).
/// T = +infinity is a first-class value meaning beta = 0, i.e. uniform
/// Gibbs weights.
class ThermalParams {
 public:
  explicit ThermalParams(double temperature);
  static ThermalParams infinite();

  double temperature() const { return temperature_; }
  double beta() const;

 private:
  double temperature_;
};

/// Z evaluated with the shifted-exponent trick: the ground-state eigenvalue
/// is factored out so the stored sum never over- or underflows. log Z is
/// exact; value() may overflow for extreme inputs.
struct PartitionFunction {
  double scaled_sum;  // sum_n exp(-beta (lambda_n - shift))
  double shift;       // smallest eigenvalue
  double log_z;       // log(scaled_sum) - beta * shift

  double value() const { return std::exp(log_z); }
};

/// Gibbs-weighted trace average over the energy eigenbasis of `hamiltonian`:
/// sum_n <v_n|O|v_n> exp(-lambda_n/T) / Z. Every member of this ensemble is
/// an energy eigenstate; superpositions never enter.
double vnte_expectation(const HermitianOperator& hamiltonian,
                        const HermitianOperator& observable,
                        const ThermalParams& params);

PartitionFunction vnte_partition(const HermitianOperator& hamiltonian,
                                 const ThermalParams& params);

}  // namespace ibsim

#endif
