#include "ste.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ibsim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Eigen::VectorXcd gaussian_vector(int dim, Rng& rng) {
  Eigen::VectorXcd g(dim);
  for (int i = 0; i < dim; ++i) {
    g(i) = Complex(rng.normal(), rng.normal());
  }
  return g;
}

struct ChainData {
  std::vector<std::vector<double>> values;  // per observable
  std::vector<double> log_weights;          // UniformImportance only
  std::int64_t accepted = 0;                // Metropolis only
};

ChainData run_uniform_chain(const EnergyFunctional& energy,
                            const std::vector<const StateFunctional*>& obs,
                            double beta, const SamplerConfig& cfg,
                            std::uint64_t seed) {
  Rng rng(seed);
  const int dim = energy.dim();
  ChainData out;
  out.values.resize(obs.size());
  for (auto& v : out.values) v.reserve(cfg.n_samples);
  out.log_weights.reserve(cfg.n_samples);

  for (std::int64_t t = 0; t < cfg.n_samples; ++t) {
    const StateVector psi = sample_sphere_uniform(dim, rng);
    out.log_weights.push_back(-beta * energy.value(psi));
    for (std::size_t k = 0; k < obs.size(); ++k) {
      out.values[k].push_back(obs[k]->value(psi.amplitudes()));
    }
  }
  return out;
}

ChainData run_metropolis_chain(const EnergyFunctional& energy,
                               const std::vector<const StateFunctional*>& obs,
                               double beta, const SamplerConfig& cfg,
                               std::uint64_t seed) {
  Rng rng(seed);
  const int dim = energy.dim();
  ChainData out;
  out.values.resize(obs.size());
  for (auto& v : out.values) v.reserve(cfg.n_samples);

  Eigen::VectorXcd a = gaussian_vector(dim, rng);
  a /= a.norm();
  double e = energy.value(a);
  double step = cfg.step_size;

  const auto try_move = [&]() -> bool {
    Eigen::VectorXcd cand = a + step * gaussian_vector(dim, rng);
    const double norm = cand.norm();
    if (!(norm > 0.0)) return false;
    cand /= norm;
    const double e_cand = energy.value(cand);
    if (-beta * (e_cand - e) >= std::log(rng.uniform_open())) {
      a.swap(cand);
      e = e_cand;
      return true;
    }
    return false;
  };

  // Burn-in doubles as step-size tuning: every 100 proposals the step is
  // nudged toward the 30-50% acceptance band, then frozen for sampling.
  constexpr std::int64_t kTuneWindow = 100;
  std::int64_t window_accepts = 0;
  for (std::int64_t t = 0; t < cfg.burn_in; ++t) {
    if (try_move()) ++window_accepts;
    if ((t + 1) % kTuneWindow == 0) {
      const double rate =
          static_cast<double>(window_accepts) / static_cast<double>(kTuneWindow);
      if (rate < 0.30) step *= 0.8;
      if (rate > 0.50) step *= 1.25;
      step = std::clamp(step, 1e-4, 50.0);
      window_accepts = 0;
    }
  }

  for (std::int64_t t = 0; t < cfg.n_samples; ++t) {
    if (try_move()) ++out.accepted;
    for (std::size_t k = 0; k < obs.size(); ++k) {
      out.values[k].push_back(obs[k]->value(a));
    }
  }
  return out;
}

double mean_of(const std::vector<double>& xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) /
         static_cast<double>(xs.size());
}

// Split-chain potential scale reduction plus an autocorrelation-based
// effective sample size (initial-positive-sequence truncation). Each chain
// is halved, so the diagnostic works from a single chain upward.
struct ChainDiagnostics {
  double mean = 0.0;
  double var_plus = 0.0;
  double r_hat = 1.0;
  double n_effective = 0.0;
};

ChainDiagnostics diagnose_chains(const std::vector<std::vector<double>>& chains) {
  ChainDiagnostics d;

  double grand_sum = 0.0;
  std::size_t grand_count = 0;
  for (const auto& c : chains) {
    grand_sum += std::accumulate(c.begin(), c.end(), 0.0);
    grand_count += c.size();
  }
  d.mean = grand_sum / static_cast<double>(grand_count);

  // Split halves.
  std::vector<std::pair<const double*, std::size_t>> halves;
  const std::size_t h = chains.front().size() / 2;
  for (const auto& c : chains) {
    halves.emplace_back(c.data(), h);
    halves.emplace_back(c.data() + (c.size() - h), h);
  }
  const std::size_t m = halves.size();

  std::vector<double> half_means(m);
  std::vector<double> half_vars(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double* x = halves[j].first;
    double s = 0.0;
    for (std::size_t i = 0; i < h; ++i) s += x[i];
    half_means[j] = s / static_cast<double>(h);
    double v = 0.0;
    for (std::size_t i = 0; i < h; ++i) {
      const double dlt = x[i] - half_means[j];
      v += dlt * dlt;
    }
    half_vars[j] = v / static_cast<double>(h - 1);
  }

  const double mu = mean_of(half_means);
  double b = 0.0;
  for (double hm : half_means) b += (hm - mu) * (hm - mu);
  b *= static_cast<double>(h) / static_cast<double>(m - 1);
  const double w = mean_of(half_vars);
  const double hd = static_cast<double>(h);
  d.var_plus = (hd - 1.0) / hd * w + b / hd;

  const double total = static_cast<double>(m) * hd;
  if (w <= 0.0) {
    // Constant draws: nothing to diagnose.
    d.r_hat = b <= 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    d.n_effective = total;
    return d;
  }
  d.r_hat = std::sqrt(d.var_plus / w);

  // Combined autocorrelations rho_t = 1 - (W - mean_j gamma_{t,j}) / var_plus,
  // summed over Geyer lag pairs (rho_0 + rho_1), (rho_2 + rho_3), ... while
  // the pair sums stay positive.
  double sum_pairs = 0.0;
  double held = 1.0;  // rho_0
  bool holding = true;
  for (std::size_t t = 1; t < h; ++t) {
    double gamma_bar = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double* x = halves[j].first;
      double g = 0.0;
      for (std::size_t i = 0; i + t < h; ++i) {
        g += (x[i] - half_means[j]) * (x[i + t] - half_means[j]);
      }
      gamma_bar += g / static_cast<double>(h);
    }
    gamma_bar /= static_cast<double>(m);
    const double rho = 1.0 - (w - gamma_bar) / d.var_plus;
    if (holding) {
      const double pair = held + rho;
      if (pair <= 0.0) break;
      sum_pairs += pair;
      holding = false;
    } else {
      held = rho;
      holding = true;
    }
  }
  const double tau = std::max(1.0, 2.0 * sum_pairs - 1.0);
  d.n_effective = total / tau;
  return d;
}

EnsembleEstimate summarize_metropolis(const SteRun& run, std::size_t k) {
  const ChainDiagnostics d = diagnose_chains(run.values[k]);
  EnsembleEstimate est;
  est.mean = d.mean;
  est.r_hat = d.r_hat;
  est.n_effective = d.n_effective;
  est.std_error =
      d.n_effective > 0.0 ? std::sqrt(d.var_plus / d.n_effective) : 0.0;
  est.acceptance_rate = run.acceptance_rate;
  est.converged = !(d.r_hat > run.config.r_hat_threshold);
  return est;
}

EnsembleEstimate summarize_importance(const SteRun& run, std::size_t k) {
  double max_logw = -std::numeric_limits<double>::infinity();
  for (const auto& lw : run.log_weights) {
    for (double v : lw) max_logw = std::max(max_logw, v);
  }

  double wsum = 0.0;
  double fsum = 0.0;
  for (std::size_t c = 0; c < run.log_weights.size(); ++c) {
    for (std::size_t i = 0; i < run.log_weights[c].size(); ++i) {
      const double w = std::exp(run.log_weights[c][i] - max_logw);
      wsum += w;
      fsum += w * run.values[k][c][i];
    }
  }
  const double mean = fsum / wsum;

  // Delta-method variance of the self-normalized ratio; Kish effective size.
  double var = 0.0;
  double wsq = 0.0;
  for (std::size_t c = 0; c < run.log_weights.size(); ++c) {
    for (std::size_t i = 0; i < run.log_weights[c].size(); ++i) {
      const double wb = std::exp(run.log_weights[c][i] - max_logw) / wsum;
      const double dlt = run.values[k][c][i] - mean;
      var += wb * wb * dlt * dlt;
      wsq += wb * wb;
    }
  }

  EnsembleEstimate est;
  est.mean = mean;
  est.std_error = std::sqrt(var);
  est.n_effective = 1.0 / wsq;
  // Independent proposals carry no Markov dependence; the split statistic is
  // still computed across chains as a cross-batch sanity check.
  est.r_hat = diagnose_chains(run.values[k]).r_hat;
  est.acceptance_rate = kNaN;
  est.converged = !(est.r_hat > run.config.r_hat_threshold);
  return est;
}

}  // namespace

void SamplerConfig::validate() const {
  if (n_samples < 100) {
    throw ValidationError("SamplerConfig: n_samples must be >= 100 per chain");
  }
  if (n_chains < 1) {
    throw ValidationError("SamplerConfig: n_chains must be >= 1");
  }
  if (burn_in < 0) {
    throw ValidationError("SamplerConfig: burn_in must be >= 0");
  }
  if (!(step_size > 0.0)) {
    throw ValidationError("SamplerConfig: step_size must be positive");
  }
  if (!(r_hat_threshold > 0.0)) {
    throw ValidationError("SamplerConfig: r_hat_threshold must be positive");
  }
}

StateVector sample_sphere_uniform(int dim, Rng& rng) {
  if (dim < 2) {
    throw ValidationError("sample_sphere_uniform: dim must be >= 2");
  }
  Eigen::VectorXcd g = gaussian_vector(dim, rng);
  while (g.norm() < 1e-12) {
    g = gaussian_vector(dim, rng);
  }
  return StateVector(std::move(g));
}

SteRun ste_run(const EnergyFunctional& energy,
               const std::vector<const StateFunctional*>& observables,
               const ThermalParams& params, const SamplerConfig& cfg) {
  cfg.validate();
  if (observables.empty()) {
    throw ContractViolation("ste_run: at least one observable required");
  }
  for (const auto* f : observables) {
    if (f->dim() != energy.dim()) {
      throw ContractViolation("ste_run: observable dimension mismatch");
    }
  }

  const double beta = params.beta();
  SteRun run;
  run.config = cfg;
  run.values.assign(observables.size(), {});
  for (auto& per_obs : run.values) per_obs.resize(cfg.n_chains);

  std::int64_t accepted = 0;
  for (int c = 0; c < cfg.n_chains; ++c) {
    const std::uint64_t seed = substream_seed(cfg.seed, static_cast<std::uint64_t>(c));
    ChainData chain =
        cfg.method == SamplerMethod::UniformImportance
            ? run_uniform_chain(energy, observables, beta, cfg, seed)
            : run_metropolis_chain(energy, observables, beta, cfg, seed);
    for (std::size_t k = 0; k < observables.size(); ++k) {
      run.values[k][c] = std::move(chain.values[k]);
    }
    if (cfg.method == SamplerMethod::UniformImportance) {
      run.log_weights.push_back(std::move(chain.log_weights));
    }
    accepted += chain.accepted;
  }

  run.acceptance_rate =
      cfg.method == SamplerMethod::Metropolis
          ? static_cast<double>(accepted) /
                static_cast<double>(cfg.n_samples * cfg.n_chains)
          : kNaN;
  return run;
}

EnsembleEstimate ste_estimate(const SteRun& run, std::size_t index) {
  if (index >= run.values.size()) {
    throw ContractViolation("ste_estimate: observable index out of range");
  }
  return run.log_weights.empty() ? summarize_metropolis(run, index)
                                 : summarize_importance(run, index);
}

Histogram ste_histogram(const SteRun& run, std::size_t index, int bins,
                        double lo, double hi) {
  if (index >= run.values.size()) {
    throw ContractViolation("ste_histogram: observable index out of range");
  }
  if (bins < 2) {
    throw ValidationError("ste_histogram: bins must be >= 2");
  }
  if (!(hi > lo)) {
    throw ValidationError("ste_histogram: empty bin range");
  }

  double max_logw = 0.0;
  if (!run.log_weights.empty()) {
    max_logw = -std::numeric_limits<double>::infinity();
    for (const auto& lw : run.log_weights) {
      for (double v : lw) max_logw = std::max(max_logw, v);
    }
  }

  Histogram h;
  h.edges.resize(bins + 1);
  const double width = (hi - lo) / bins;
  for (int b = 0; b <= bins; ++b) h.edges[b] = lo + width * b;
  h.masses.assign(bins, 0.0);

  double total = 0.0;
  for (std::size_t c = 0; c < run.values[index].size(); ++c) {
    for (std::size_t i = 0; i < run.values[index][c].size(); ++i) {
      const double v = run.values[index][c][i];
      const double w = run.log_weights.empty()
                           ? 1.0
                           : std::exp(run.log_weights[c][i] - max_logw);
      int b = static_cast<int>(std::floor((v - lo) / width));
      b = std::clamp(b, 0, bins - 1);
      h.masses[b] += w;
      total += w;
    }
  }
  for (double& m : h.masses) m /= total;
  return h;
}

Histogram ste_histogram(const SteRun& run, std::size_t index, int bins) {
  if (index >= run.values.size()) {
    throw ContractViolation("ste_histogram: observable index out of range");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& chain : run.values[index]) {
    for (double v : chain) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!(hi > lo)) {
    // Degenerate (constant observable): center a unit-wide range on it.
    hi = lo + 0.5;
    lo -= 0.5;
  }
  return ste_histogram(run, index, bins, lo, hi);
}

EnsembleEstimate ste_expectation(const EnergyFunctional& energy,
                                 const StateFunctional& observable,
                                 const ThermalParams& params,
                                 const SamplerConfig& cfg) {
  const SteRun run = ste_run(energy, {&observable}, params, cfg);
  return ste_estimate(run, 0);
}

Histogram ensemble_histogram(const EnergyFunctional& energy,
                             const StateFunctional& observable,
                             const ThermalParams& params,
                             const SamplerConfig& cfg, int bins) {
  const SteRun run = ste_run(energy, {&observable}, params, cfg);
  return ste_histogram(run, 0, bins);
}

// ---------------------------------------------------------------------------
// Deterministic dim-2 quadrature
// ---------------------------------------------------------------------------

namespace {

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev initial guess, polished by Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p1 = 0.0;
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    nodes[n - 1 - i] = -x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[n - 1 - i] = weights[i];
  }
}

void check_phase_invariance(const StateFunctional& f, const char* label) {
  Rng rng(0xB10C4);
  for (int probe = 0; probe < 3; ++probe) {
    const StateVector psi = sample_sphere_uniform(f.dim(), rng);
    const double base = f.value(psi.amplitudes());
    const double theta = 2.0 * M_PI * rng.uniform();
    const Eigen::VectorXcd rotated =
        std::exp(Complex(0.0, theta)) * psi.amplitudes();
    const double turned = f.value(rotated);
    if (std::abs(turned - base) > 1e-10 * std::max(1.0, std::abs(base))) {
      throw ContractViolation(std::string(label) +
                              " functional is not global-phase invariant");
    }
  }
}

struct BlochGrid {
  std::vector<double> u_nodes, u_weights;
  int n_phi = 0;
};

double quadrature_pass(const EnergyFunctional& energy,
                       const StateFunctional& observable, double beta,
                       const BlochGrid& grid) {
  // Pass 1 finds the largest log-weight so the Gibbs factors can be rescaled;
  // pass 2 accumulates numerator and denominator. The ratio is unaffected.
  const int nu = static_cast<int>(grid.u_nodes.size());
  const double dphi = 2.0 * M_PI / grid.n_phi;

  const auto state_at = [&](int iu, int j) {
    const double u = grid.u_nodes[iu];
    const double c = std::sqrt(0.5 * (1.0 + u));
    const double s = std::sqrt(0.5 * (1.0 - u));
    const double phi = dphi * j;
    Eigen::VectorXcd psi(2);
    psi(0) = Complex(c, 0.0);
    psi(1) = std::polar(s, phi);
    return psi;
  };

  double g_max = -std::numeric_limits<double>::infinity();
  for (int iu = 0; iu < nu; ++iu) {
    for (int j = 0; j < grid.n_phi; ++j) {
      g_max = std::max(g_max, -beta * energy.value(state_at(iu, j)));
    }
  }

  double num = 0.0;
  double den = 0.0;
  for (int iu = 0; iu < nu; ++iu) {
    for (int j = 0; j < grid.n_phi; ++j) {
      const Eigen::VectorXcd psi = state_at(iu, j);
      const double w =
          grid.u_weights[iu] * std::exp(-beta * energy.value(psi) - g_max);
      num += w * observable.value(psi);
      den += w;
    }
  }
  return num / den;
}

}  // namespace

double ste_quadrature_2d(const EnergyFunctional& energy,
                         const StateFunctional& observable,
                         const ThermalParams& params, int n_grid,
                         double tolerance) {
  if (energy.dim() != 2 || observable.dim() != 2) {
    throw ContractViolation("ste_quadrature_2d: functionals must be dim 2");
  }
  check_phase_invariance(energy, "energy");
  check_phase_invariance(observable, "observable");

  const double beta = params.beta();
  constexpr int kMaxGrid = 4096;
  int n = std::clamp(n_grid, 8, kMaxGrid);

  BlochGrid grid;
  gauss_legendre(n, grid.u_nodes, grid.u_weights);
  grid.n_phi = n;
  double prev = quadrature_pass(energy, observable, beta, grid);

  while (n < kMaxGrid) {
    n *= 2;
    gauss_legendre(n, grid.u_nodes, grid.u_weights);
    grid.n_phi = n;
    const double cur = quadrature_pass(energy, observable, beta, grid);
    if (std::abs(cur - prev) <= tolerance * std::max(1.0, std::abs(cur))) {
      return cur;
    }
    prev = cur;
  }
  throw std::runtime_error("ste_quadrature_2d: grid doubling did not converge");
}

}  // namespace ibsim
