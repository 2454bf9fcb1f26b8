#ifndef IBSIM_TESTS_SUPPORT_HPP
#define IBSIM_TESTS_SUPPORT_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "analysis.hpp"
#include "hilbert.hpp"
#include "models.hpp"
#include "rng.hpp"
#include "ste.hpp"
#include "vnte.hpp"

namespace testsup {

inline Eigen::MatrixXcd random_hermitian_matrix(int dim, ibsim::Rng& rng,
                                                double scale = 1.0) {
  Eigen::MatrixXcd m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = ibsim::Complex(scale * rng.normal(), 0.0);
    for (int j = i + 1; j < dim; ++j) {
      m(i, j) = scale * ibsim::Complex(rng.normal(), rng.normal());
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

inline ibsim::HermitianOperator random_hermitian(int dim, ibsim::Rng& rng,
                                                 double scale = 1.0) {
  return ibsim::HermitianOperator(random_hermitian_matrix(dim, rng, scale));
}

inline ibsim::HermitianOperator pauli_x() {
  Eigen::Matrix2cd m;
  m << 0.0, 1.0, 1.0, 0.0;
  return ibsim::HermitianOperator(m);
}

/// Central finite differences of a functional in the raw real/imaginary
/// amplitude coordinates, reported in the same complex packing as
/// EnergyFunctional::gradient. Independent of any analytic gradient code.
inline Eigen::VectorXcd fd_gradient(const ibsim::StateFunctional& f,
                                    const Eigen::VectorXcd& a,
                                    double h = 1e-5) {
  Eigen::VectorXcd g(a.size());
  for (Eigen::Index n = 0; n < a.size(); ++n) {
    Eigen::VectorXcd plus = a;
    Eigen::VectorXcd minus = a;
    plus(n) += h;
    minus(n) -= h;
    const double dx = (f.value(plus) - f.value(minus)) / (2.0 * h);
    plus = a;
    minus = a;
    plus(n) += ibsim::Complex(0.0, h);
    minus(n) -= ibsim::Complex(0.0, h);
    const double dy = (f.value(plus) - f.value(minus)) / (2.0 * h);
    g(n) = ibsim::Complex(dx, dy);
  }
  return g;
}

inline Eigen::VectorXcd bloch_state(double theta, double phi) {
  Eigen::VectorXcd psi(2);
  psi(0) = ibsim::Complex(std::cos(theta / 2.0), 0.0);
  psi(1) = std::polar(std::sin(theta / 2.0), phi);
  return psi;
}

struct BlochMin {
  double theta = 0.0;
  double phi = 0.0;
  double energy = 0.0;
};

/// Brute-force minimum of a dim-2 functional over the Bloch sphere: a dense
/// global grid followed by local grid refinement around the best cell. Purely
/// evaluation-based, so it is independent of the gradient machinery it
/// cross-checks.
inline BlochMin bloch_grid_min(const ibsim::EnergyFunctional& f,
                               int n_theta = 1000, int n_phi = 1000,
                               int refine_rounds = 3) {
  BlochMin best;
  best.energy = std::numeric_limits<double>::infinity();

  double dt = M_PI / n_theta;
  double dp = 2.0 * M_PI / n_phi;
  for (int i = 0; i <= n_theta; ++i) {
    for (int j = 0; j < n_phi; ++j) {
      const double theta = i * dt;
      const double phi = j * dp;
      const double e = f.value(bloch_state(theta, phi));
      if (e < best.energy) best = BlochMin{theta, phi, e};
    }
  }

  // Zoom: a 41x41 grid over +-1 previous spacing, three times. The phase
  // coordinates are periodic/foldable, so no window clamping is needed.
  for (int round = 0; round < refine_rounds; ++round) {
    const BlochMin center = best;
    const double ht = dt;
    const double hp = dp;
    dt = 2.0 * ht / 40.0;
    dp = 2.0 * hp / 40.0;
    for (int i = 0; i <= 40; ++i) {
      for (int j = 0; j <= 40; ++j) {
        const double theta = center.theta - ht + i * dt;
        const double phi = center.phi - hp + j * dp;
        const double e = f.value(bloch_state(theta, phi));
        if (e < best.energy) best = BlochMin{theta, phi, e};
      }
    }
  }
  return best;
}

inline double combined_se(const ibsim::EnsembleEstimate& a,
                          const ibsim::EnsembleEstimate& b) {
  return std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
}

}  // namespace testsup

#endif
