#include "hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ibsim {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kImagResidueTol = 1e-10;

std::string dim_message(const char* what, long a, long b) {
  std::ostringstream os;
  os << what << ": " << a << " vs " << b;
  return os.str();
}

}  // namespace

StateVector::StateVector(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 2) {
    throw ValidationError("StateVector requires dim >= 2");
  }
  const double norm = amplitudes_.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw ValidationError("StateVector amplitudes must have finite nonzero norm");
  }
  amplitudes_ /= norm;
}

StateVector StateVector::basis_state(int dim, int index) {
  if (dim < 2 || index < 0 || index >= dim) {
    throw ValidationError("basis_state: index out of range");
  }
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
  a(index) = 1.0;
  return StateVector(std::move(a));
}

Complex inner(const StateVector& bra, const StateVector& ket) {
  if (bra.dim() != ket.dim()) {
    throw ContractViolation(
        dim_message("inner: dimension mismatch", bra.dim(), ket.dim()));
  }
  return bra.amplitudes().dot(ket.amplitudes());
}

HermitianOperator::HermitianOperator(Eigen::MatrixXcd entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw ContractViolation("HermitianOperator requires a square matrix");
  }
  if (!entries_.allFinite()) {
    throw ValidationError("HermitianOperator entries must be finite");
  }
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  const double dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermitianTol * scale) {
    std::ostringstream os;
    os << "matrix is not Hermitian (max deviation " << dev << ")";
    throw ContractViolation(os.str());
  }
}

HermitianOperator HermitianOperator::identity(int dim) {
  return HermitianOperator(Eigen::MatrixXcd::Identity(dim, dim));
}

HermitianOperator HermitianOperator::diagonal(const Eigen::VectorXd& entries) {
  Eigen::MatrixXcd m =
      entries.cast<Complex>().asDiagonal().toDenseMatrix();
  return HermitianOperator(std::move(m));
}

double expectation(const HermitianOperator& op, const StateVector& psi) {
  if (op.dim() != psi.dim()) {
    throw ContractViolation(
        dim_message("expectation: dimension mismatch", op.dim(), psi.dim()));
  }
  const Complex q = psi.amplitudes().dot(op.matrix() * psi.amplitudes());
  const double scale = std::max(1.0, std::abs(q.real()));
  if (std::abs(q.imag()) >= kImagResidueTol * scale) {
    std::ostringstream os;
    os << "expectation: imaginary residue " << q.imag()
       << " exceeds tolerance; operator not Hermitian enough";
    throw ContractViolation(os.str());
  }
  return q.real();
}

namespace {

// Rotates a unit eigenvector so its largest-magnitude component is real and
// positive. The first index attaining the maximum is used, which makes the
// choice deterministic under exact ties.
void fix_phase(Eigen::VectorXcd& v) {
  Eigen::Index pivot = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > best) {
      best = mag;
      pivot = i;
    }
  }
  if (best <= 0.0) return;
  v *= std::conj(v(pivot)) / best;
  v(pivot) = Complex(std::abs(v(pivot)), 0.0);
}

bool lexicographic_less(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

}  // namespace

EigenSystem eigendecompose(const HermitianOperator& op, int dim_cap) {
  if (op.dim() > dim_cap) {
    std::ostringstream os;
    os << "eigendecompose: dim " << op.dim() << " exceeds cap " << dim_cap;
    throw CapacityError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecompose: solver failed to converge");
  }

  const int n = op.dim();
  std::vector<Eigen::VectorXcd> vectors(n);
  for (int i = 0; i < n; ++i) {
    vectors[i] = solver.eigenvectors().col(i);
    fix_phase(vectors[i]);
  }

  // Eigen already returns ascending eigenvalues; only exact ties need the
  // lexicographic tie-break.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double la = solver.eigenvalues()(a);
    const double lb = solver.eigenvalues()(b);
    if (la != lb) return la < lb;
    return lexicographic_less(vectors[a], vectors[b]);
  });

  EigenSystem out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (int i : order) {
    out.eigenvalues.push_back(solver.eigenvalues()(i));
    out.eigenvectors.emplace_back(std::move(vectors[i]));
  }
  return out;
}

}  // namespace ibsim
