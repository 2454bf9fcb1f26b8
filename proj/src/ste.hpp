#ifndef IBSIM_STE_HPP
#define IBSIM_STE_HPP

#include <cstdint>
#include <vector>

#include "functionals.hpp"
#include "rng.hpp"
#include "vnte.hpp"

namespace ibsim {

enum class SamplerMethod {
  // Self-normalized importance sampling with uniform sphere proposals.
  // Unbiased at any temperature but only efficient at small dim / high T;
  // serves as the independent cross-check for the Metropolis chain.
  UniformImportance,
  // Random-walk Metropolis on the sphere: Gaussian perturbation of the
  // amplitudes followed by renormalization (a symmetric proposal), accepted
  // with min(1, exp(-dE/T)).
  Metropolis,
};

struct SamplerConfig {
  SamplerMethod method = SamplerMethod::Metropolis;
  std::int64_t n_samples = 10000;  // retained draws per chain, >= 100
  int n_chains = 4;
  std::int64_t burn_in = 1000;
  double step_size = 0.3;  // Metropolis proposal scale before auto-tuning
  std::uint64_t seed = 1;
  double r_hat_threshold = 1.05;

  void validate() const;
};

/// Monte Carlo estimate with its diagnostics. `converged` is the r_hat gate:
/// false means the estimate is still returned but should not be trusted.
struct EnsembleEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double n_effective = 0.0;
  double r_hat = 1.0;
  double acceptance_rate = 0.0;  // NaN for UniformImportance
  bool converged = true;
};

struct Histogram {
  std::vector<double> edges;   // bins + 1, ascending
  std::vector<double> masses;  // normalized: sums to 1
};

/// Uniform draw from the unit sphere of normalized dim-dimensional complex
/// vectors (equivalently the real (2 dim - 1)-sphere): 2 dim independent
/// standard Gaussians, normalized.
StateVector sample_sphere_uniform(int dim, Rng& rng);

/// One sampling pass evaluating several observables on shared draws.
/// Chains run in a fixed order with counter-derived substream seeds, so the
/// result is a pure function of (inputs, config).
struct SteRun {
  SamplerConfig config;
  // values[k][c][i]: draw i of observable k in chain c.
  std::vector<std::vector<std::vector<double>>> values;
  // log Gibbs weights per chain/draw; empty for Metropolis (unit weights).
  std::vector<std::vector<double>> log_weights;
  double acceptance_rate = 0.0;
};

SteRun ste_run(const EnergyFunctional& energy,
               const std::vector<const StateFunctional*>& observables,
               const ThermalParams& params, const SamplerConfig& cfg);

EnsembleEstimate ste_estimate(const SteRun& run, std::size_t index);

/// Histogram over the Gibbs-weighted draws. The two-argument range overload
/// pins the bin edges; the automatic one spans the observed data range.
Histogram ste_histogram(const SteRun& run, std::size_t index, int bins);
Histogram ste_histogram(const SteRun& run, std::size_t index, int bins,
                        double lo, double hi);

/// Gibbs-weighted sphere average of `observable` under the energy functional:
/// int O(psi) exp(-E(psi)/T) dsigma / int exp(-E(psi)/T) dsigma.
EnsembleEstimate ste_expectation(const EnergyFunctional& energy,
                                 const StateFunctional& observable,
                                 const ThermalParams& params,
                                 const SamplerConfig& cfg);

Histogram ensemble_histogram(const EnergyFunctional& energy,
                             const StateFunctional& observable,
                             const ThermalParams& params,
                             const SamplerConfig& cfg, int bins);

/// Deterministic dim-2 oracle for the same ratio of integrals, via
/// tensor-product quadrature in the Bloch parametrization
/// psi = (cos(theta/2), e^{i phi} sin(theta/2)). Requires both functionals
/// to be global-phase invariant (checked on sampled states); the grid is
/// doubled until successive values agree to `tolerance`.
double ste_quadrature_2d(const EnergyFunctional& energy,
                         const StateFunctional& observable,
                         const ThermalParams& params, int n_grid = 32,
                         double tolerance = 1e-10);

}  // namespace ibsim

#endif
