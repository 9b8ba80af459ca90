#include "qtop/metrics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qtop {

SemiMetricMatrix::SemiMetricMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("semi-metric needs at least one point");
  entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
}

SemiMetricMatrix SemiMetricMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  SemiMetricMatrix d(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix is not square");
    if (rows[i][i] != 0.0) throw std::invalid_argument("diagonal must be zero");
    for (int j = 0; j < n; ++j) {
      const double v = rows[i][j];
      if (v != rows[j][i]) throw std::invalid_argument("matrix is not symmetric");
      if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("distance outside [0, 1]");
      d.entries_[d.index(i, j)] = v;
    }
  }
  return d;
}

void SemiMetricMatrix::set(int i, int j, double value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("point index out of range");
  if (i == j) {
    if (value != 0.0) throw std::invalid_argument("diagonal must be zero");
    return;
  }
  if (!(value >= 0.0 && value <= 1.0)) throw std::invalid_argument("distance outside [0, 1]");
  entries_[index(i, j)] = value;
  entries_[index(j, i)] = value;
}

SemiMetricMatrix SemiMetricMatrix::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  SemiMetricMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.entries_[out.index(perm[i], perm[j])] = (*this)(i, j);
  }
  return out;
}

double two_qubit_concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("concurrence needs a 4x4 density matrix");

  // With rho = W W^dagger (columns sqrt(p_k) v_k), the lambda_i are the
  // singular values of tau = W^T (sy x sy) W.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(rho.entries);
  const double cutoff = kSpectrumCutoff * std::max(1.0, eig.eigenvalues().maxCoeff());
  Eigen::Matrix<cplx, 4, Eigen::Dynamic, 0, 4, 4> w(4, 0);
  for (int k = 3; k >= 0; --k) {
    const double p = eig.eigenvalues()[k];
    if (p <= cutoff) break;
    w.conservativeResize(Eigen::NoChange, w.cols() + 1);
    w.col(w.cols() - 1) = std::sqrt(p) * eig.eigenvectors().col(k);
  }
  if (w.cols() == 0) return 0.0;

  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Eigen::MatrixXcd tau = w.transpose() * yy * w;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(tau);

  std::array<double, 4> lambda{};
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) lambda[static_cast<std::size_t>(k)] = svd.singularValues()[k];
  std::sort(lambda.begin(), lambda.end(), std::greater<>());

  const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  if (c < kConcurrenceClamp) return 0.0;
  return std::min(c, 1.0);
}

double concurrence(const PureState& state, int i, int j) {
  const int n = state.n_qubits();
  if (n < 2) throw std::invalid_argument("concurrence needs at least two qubits");
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) {
    throw std::invalid_argument("concurrence needs two distinct in-range qubit indices");
  }
  const std::uint32_t mask = (1u << i) | (1u << j);
  if (n == 2) {
    // Nothing to trace out: rho is the full projector.
    const auto a = state.amplitudes();
    DensityMatrix rho{Eigen::MatrixXcd(4, 4)};
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) rho.entries(r, c) = a[r] * std::conj(a[c]);
    }
    return two_qubit_concurrence(rho);
  }
  return two_qubit_concurrence(reduced_density_mask(state, mask));
}

double generalized_concurrence(const DensityMatrix& rho) {
  return 2.0 * std::sqrt(std::max(0.0, 1.0 - purity(rho)));
}

std::optional<SeparableCut> find_separable_cut(const PureState& state, double tol) {
  const int n = state.n_qubits();
  if (n < 2) throw std::invalid_argument("genuine entanglement needs at least two qubits");
  const std::uint32_t full = (1u << n) - 1u;
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    // Tr rho_A^2 = Tr rho_Abar^2, so trace down to the smaller side.
    const std::uint32_t side = (2 * std::popcount(mask) <= n) ? mask : (full ^ mask);
    const double cg = generalized_concurrence(reduced_density_mask(state, side));
    if (!(cg > tol)) return SeparableCut{mask, cg};
  }
  return std::nullopt;
}

bool is_genuinely_entangled(const PureState& state, double tol) {
  return !find_separable_cut(state, tol).has_value();
}

double semi_distance(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("concurrence outside [0, 1]");
  if (c == 0.0) return 1.0;
  return 0.0 - std::expm1(1.0 - 1.0 / c);  // +0 at c = 1
}

SemiMetricMatrix distance_matrix(const PureState& state) {
  const int n = state.n_qubits();
  if (n < 2) throw std::invalid_argument("distance matrix needs at least two qubits");
  SemiMetricMatrix d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) d.set(i, j, semi_distance(concurrence(state, i, j)));
  }
  return d;
}

}  // namespace qtop
