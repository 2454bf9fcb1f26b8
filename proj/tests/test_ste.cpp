#include <doctest.h>

#include "support.hpp"

using namespace ibsim;

namespace {

SamplerConfig quick_config(SamplerMethod method, std::uint64_t seed,
                           std::int64_t n_samples = 10000) {
  SamplerConfig cfg;
  cfg.method = method;
  cfg.n_samples = n_samples;
  cfg.n_chains = 4;
  cfg.burn_in = 1000;
  cfg.seed = seed;
  return cfg;
}

// Deliberately phase-sensitive functional for the contract check.
class PhaseSensitive final : public StateFunctional {
 public:
  int dim() const override { return 2; }
  double value(const Eigen::VectorXcd& a) const override {
    return a(0).real();
  }
};

}  // namespace

TEST_SUITE_BEGIN("ste");

TEST_CASE("sphere draws are normalized and exchangeable") {
  Rng rng(1234);
  double sum0_d2 = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const StateVector psi = sample_sphere_uniform(2, rng);
    CHECK(std::abs(psi.amplitudes().squaredNorm() - 1.0) < 1e-12);
    sum0_d2 += std::norm(psi.amplitude(0));
  }
  // |a_0|^2 is uniform on [0, 1] at dim 2: mean 1/2, sd 1/sqrt(12).
  const double se = 1.0 / std::sqrt(12.0 * n);
  CHECK(std::abs(sum0_d2 / n - 0.5) < 3.0 * se);

  double sum0_d4 = 0.0;
  for (int i = 0; i < n; ++i) {
    sum0_d4 += std::norm(sample_sphere_uniform(4, rng).amplitude(0));
  }
  CHECK(std::abs(sum0_d4 / n - 0.25) < 3.0 * 0.25 / std::sqrt(n));
}

TEST_CASE("identity observable is exact with zero error") {
  Rng rng(5);
  const HermitianExpectation energy(testsup::random_hermitian(2, rng));
  const HermitianExpectation one(HermitianOperator::identity(2));
  for (auto method :
       {SamplerMethod::UniformImportance, SamplerMethod::Metropolis}) {
    const auto est = ste_expectation(energy, one, ThermalParams(1.0),
                                     quick_config(method, 7, 500));
    CHECK(est.mean == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(est.std_error == 0.0);
    CHECK(est.converged);
  }
}

TEST_CASE("infinite temperature reproduces tr(O)/dim") {
  Rng rng(99);
  for (int dim : {2, 4, 8}) {
    const HermitianExpectation energy(testsup::random_hermitian(dim, rng));
    const HermitianOperator o = testsup::random_hermitian(dim, rng);
    const HermitianExpectation obs(o);
    const double expected = o.matrix().trace().real() / dim;

    const auto uni =
        ste_expectation(energy, obs, ThermalParams::infinite(),
                        quick_config(SamplerMethod::UniformImportance, 31));
    const auto met =
        ste_expectation(energy, obs, ThermalParams::infinite(),
                        quick_config(SamplerMethod::Metropolis, 32));
    CHECK(std::abs(uni.mean - expected) < 3.0 * uni.std_error);
    CHECK(std::abs(met.mean - expected) < 3.0 * met.std_error);
    CHECK(std::abs(uni.mean - met.mean) < 3.0 * testsup::combined_se(uni, met));
  }
}

TEST_CASE("quadrature oracle: closed symmetry values at beta = 0") {
  const HermitianExpectation energy(testsup::pauli_x());
  const HermitianExpectation upper(
      HermitianOperator::diagonal(Eigen::Vector2d(1.0, 0.0)));
  CHECK(std::abs(ste_quadrature_2d(energy, upper, ThermalParams::infinite()) -
                 0.5) < 1e-8);

  const ProjectionWeight pa(StateVector::basis_state(2, 0));
  CHECK(std::abs(ste_quadrature_2d(energy, pa, ThermalParams::infinite()) -
                 0.5) < 1e-8);
}

TEST_CASE("quadrature oracle concentrates on the sphere minimizer as T -> 0") {
  Eigen::Matrix2cd m;
  m << 0.0, -1.0, -1.0, 0.0;
  const HermitianOperator h(m);
  const HermitianExpectation energy(h);
  const double value = ste_quadrature_2d(energy, energy, ThermalParams(1e-3),
                                         64, 1e-8);
  // lambda_0 = -1, gap = 2.
  CHECK(std::abs(value - (-1.0)) < 2e-2 * 2.0);
}

TEST_CASE("samplers and quadrature agree on a two-level problem") {
  Eigen::Matrix2cd m;
  m << 0.0, -1.0, -1.0, 0.0;
  const HermitianExpectation energy{HermitianOperator(m)};
  const HermitianExpectation obs(testsup::pauli_x());
  const ThermalParams params(1.0);

  const double oracle = ste_quadrature_2d(energy, obs, params);
  const auto uni =
      ste_expectation(energy, obs, params,
                      quick_config(SamplerMethod::UniformImportance, 41, 20000));
  const auto met = ste_expectation(
      energy, obs, params, quick_config(SamplerMethod::Metropolis, 42, 20000));

  CHECK(std::abs(uni.mean - oracle) < 3.0 * uni.std_error);
  CHECK(std::abs(met.mean - oracle) < 3.0 * met.std_error);
  CHECK(std::abs(uni.mean - met.mean) < 3.0 * testsup::combined_se(uni, met));
  CHECK(uni.converged);
  CHECK(met.converged);
  CHECK(met.acceptance_rate > 0.05);
  CHECK(met.acceptance_rate < 0.95);
}

TEST_CASE("estimator agreement holds at dim 3 as well") {
  Rng rng(55);
  const HermitianExpectation energy(testsup::random_hermitian(3, rng));
  const HermitianExpectation obs(testsup::random_hermitian(3, rng));
  const ThermalParams params(0.7);
  const auto uni =
      ste_expectation(energy, obs, params,
                      quick_config(SamplerMethod::UniformImportance, 61, 20000));
  const auto met = ste_expectation(
      energy, obs, params, quick_config(SamplerMethod::Metropolis, 62, 20000));
  CHECK(std::abs(uni.mean - met.mean) < 3.0 * testsup::combined_se(uni, met));
}

TEST_CASE("quadrature rejects phase-sensitive functionals") {
  const HermitianExpectation energy(testsup::pauli_x());
  const PhaseSensitive bad;
  CHECK_THROWS_AS(
      ste_quadrature_2d(energy, bad, ThermalParams(1.0)),
      ContractViolation);
}

TEST_CASE("histogram of a constant observable lands in one bin") {
  const HermitianExpectation energy(testsup::pauli_x());
  const HermitianExpectation one(HermitianOperator::identity(2));
  const auto hist =
      ensemble_histogram(energy, one, ThermalParams(1.0),
                         quick_config(SamplerMethod::Metropolis, 71, 500), 10);
  double total = 0.0;
  for (std::size_t b = 0; b < hist.masses.size(); ++b) {
    total += hist.masses[b];
    if (hist.edges[b] <= 1.0 && 1.0 < hist.edges[b + 1]) {
      CHECK(hist.masses[b] == doctest::Approx(1.0).epsilon(1e-12));
    } else {
      CHECK(hist.masses[b] == 0.0);
    }
  }
  CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("projection weight is uniform on [0,1] at infinite temperature") {
  const HermitianExpectation energy(testsup::pauli_x());
  const ProjectionWeight pa(StateVector::basis_state(2, 0));
  const SteRun run =
      ste_run(energy, {&pa}, ThermalParams::infinite(),
              quick_config(SamplerMethod::UniformImportance, 81, 10000));
  const auto hist = ste_histogram(run, 0, 10, 0.0, 1.0);

  const double n = 4.0 * 10000.0;
  const double per_bin_se = std::sqrt(0.1 * 0.9 / n);
  double total = 0.0;
  for (double mass : hist.masses) {
    CHECK(std::abs(mass - 0.1) < 3.0 * per_bin_se);
    total += mass;
  }
  CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("sampled members are never exact energy eigenstates") {
  Eigen::Matrix2cd m;
  m << 0.0, -1.0, -1.0, 0.0;
  const HermitianOperator h(m);
  const auto sys = eigendecompose(h);
  const HermitianExpectation energy(h);
  const ProjectionWeight p0(sys.eigenvectors[0]);
  const ProjectionWeight p1(sys.eigenvectors[1]);

  for (auto method :
       {SamplerMethod::UniformImportance, SamplerMethod::Metropolis}) {
    const SteRun run = ste_run(energy, {&p0, &p1}, ThermalParams(1.0),
                               quick_config(method, 91, 2000));
    for (std::size_t c = 0; c < run.values[0].size(); ++c) {
      for (std::size_t i = 0; i < run.values[0][c].size(); ++i) {
        const double overlap =
            std::max(run.values[0][c][i], run.values[1][c][i]);
        CHECK(overlap < 1.0 - 1e-9);
      }
    }
  }
}

TEST_CASE("identical config reproduces the estimate bit for bit") {
  const HermitianExpectation energy(testsup::pauli_x());
  const HermitianExpectation obs(
      HermitianOperator::diagonal(Eigen::Vector2d(0.4, -0.9)));
  const auto cfg = quick_config(SamplerMethod::Metropolis, 123, 2000);
  const auto a = ste_expectation(energy, obs, ThermalParams(0.5), cfg);
  const auto b = ste_expectation(energy, obs, ThermalParams(0.5), cfg);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.n_effective == b.n_effective);
  CHECK(a.r_hat == b.r_hat);
  CHECK(a.acceptance_rate == b.acceptance_rate);

  auto other = cfg;
  other.seed = 124;
  const auto c = ste_expectation(energy, obs, ThermalParams(0.5), other);
  CHECK(c.mean != a.mean);
}

TEST_CASE("doubling the sample count moves the mean within noise") {
  const HermitianExpectation energy(testsup::pauli_x());
  const HermitianExpectation obs(testsup::pauli_x());
  const ThermalParams params(1.0);
  const auto base = quick_config(SamplerMethod::Metropolis, 321, 10000);
  auto doubled = base;
  doubled.n_samples = 20000;
  const auto a = ste_expectation(energy, obs, params, base);
  const auto b = ste_expectation(energy, obs, params, doubled);
  CHECK(std::abs(a.mean - b.mean) < 2.0 * testsup::combined_se(a, b));
}

TEST_CASE("config validation") {
  SamplerConfig cfg;
  cfg.n_samples = 50;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = SamplerConfig{};
  cfg.n_chains = 0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = SamplerConfig{};
  cfg.step_size = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = SamplerConfig{};
  cfg.burn_in = -1;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);

  const HermitianExpectation energy(testsup::pauli_x());
  const SteRun run = ste_run(energy, {&energy}, ThermalParams(1.0),
                             quick_config(SamplerMethod::Metropolis, 1, 500));
  CHECK_THROWS_AS(ste_histogram(run, 0, 1), ValidationError);
  CHECK_THROWS_AS(ste_histogram(run, 5, 4), ContractViolation);
}

TEST_CASE("an unreachable r_hat threshold flags the estimate") {
  const HermitianExpectation energy(testsup::pauli_x());
  const HermitianExpectation obs(
      HermitianOperator::diagonal(Eigen::Vector2d(1.0, -1.0)));
  auto cfg = quick_config(SamplerMethod::Metropolis, 17, 500);
  cfg.r_hat_threshold = 1e-6;
  const auto est = ste_expectation(energy, obs, ThermalParams(1.0), cfg);
  CHECK_FALSE(est.converged);
  CHECK(std::isfinite(est.mean));
}

TEST_CASE("observable dimension mismatch is rejected") {
  const HermitianExpectation energy(testsup::pauli_x());
  Rng rng(3);
  const HermitianExpectation obs(testsup::random_hermitian(3, rng));
  CHECK_THROWS_AS(ste_expectation(energy, obs, ThermalParams(1.0),
                                  quick_config(SamplerMethod::Metropolis, 1, 500)),
                  ContractViolation);
}

TEST_SUITE_END();
