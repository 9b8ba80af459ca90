#include "qtop/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qtop/kernels.hpp"

namespace qtop {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                                "], got " + std::to_string(n_qubits));
  }
}

std::size_t basis_size(int n_qubits) { return std::size_t{1} << n_qubits; }

double squared_norm(std::span<const cplx> v) {
  return kernels::conj_dot(v, v).real();
}

// Bit position of qubit q inside a basis index.
int bit_of(int q, int n_qubits) { return n_qubits - 1 - q; }

}  // namespace

PureState::PureState(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (amplitudes_.size() != basis_size(n_qubits)) {
    throw std::invalid_argument("amplitude vector has length " + std::to_string(amplitudes_.size()) +
                                ", expected 2^" + std::to_string(n_qubits));
  }
  if (std::abs(norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized (norm " + std::to_string(norm()) + ")");
  }
}

PureState PureState::normalized(int n_qubits, std::vector<cplx> amplitudes) {
  const double n = std::sqrt(squared_norm(amplitudes));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  }
  for (auto& a : amplitudes) a /= n;
  return PureState(n_qubits, std::move(amplitudes));
}

double PureState::norm() const noexcept { return std::sqrt(squared_norm(amplitudes_)); }

PureState state_from_params(int n_qubits, const RandomStateParams& params) {
  check_qubit_count(n_qubits);
  const std::size_t d = basis_size(n_qubits);
  if (params.phases.size() != d - 1 || params.radii.size() != d) {
    throw std::invalid_argument("parameter lengths do not match 2^n_qubits: got " +
                                std::to_string(params.phases.size()) + " phases and " +
                                std::to_string(params.radii.size()) + " radii");
  }

  // sin/cos of theta_n with sin theta_n = xi_n^{1/(2n)}; theta_0 = 0.
  std::vector<double> sin_t(d, 0.0);
  std::vector<double> cos_t(d, 1.0);
  for (std::size_t n = 1; n < d; ++n) {
    const double xi = params.radii[n];
    if (!(xi >= 0.0 && xi <= 1.0)) throw std::invalid_argument("radius outside [0, 1]");
    const double s = std::pow(xi, 1.0 / (2.0 * static_cast<double>(n)));
    sin_t[n] = s;
    cos_t[n] = std::sqrt(std::max(0.0, 1.0 - s * s));
  }

  std::vector<cplx> nu(d);
  nu[0] = cos_t[d - 1];
  double tail = 1.0;  // prod_{l=d-n}^{d-1} sin theta_l
  for (std::size_t n = 1; n < d; ++n) {
    tail *= sin_t[d - n];
    const double phi = params.phases[n - 1];
    nu[n] = std::polar(cos_t[d - 1 - n] * tail, phi);
  }
  return PureState(n_qubits, std::move(nu));
}

PureState random_state(int n_qubits, CounterRng& rng) {
  check_qubit_count(n_qubits);
  const std::size_t d = basis_size(n_qubits);
  RandomStateParams params;
  params.phases.resize(d - 1);
  params.radii.resize(d);
  for (auto& p : params.phases) p = 2.0 * std::numbers::pi * rng.uniform();
  for (auto& r : params.radii) r = rng.uniform();
  return state_from_params(n_qubits, params);
}

DensityMatrix reduced_density_mask(const PureState& state, std::uint32_t keep_mask) {
  const int n = state.n_qubits();
  const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
  if (keep_mask == 0 || (keep_mask & ~full) != 0 || keep_mask == full) {
    throw std::invalid_argument("keep set must be a non-empty proper subset of the qubits");
  }
  const int k = std::popcount(keep_mask);
  const std::size_t rows = std::size_t{1} << k;
  const std::size_t cols = std::size_t{1} << (n - k);

  // Reshape psi into a rows x cols matrix M so that rho = M M^dagger.
  std::vector<cplx> m(rows * cols);
  const auto amps = state.amplitudes();
  for (std::size_t x = 0; x < amps.size(); ++x) {
    std::size_t r = 0, c = 0;
    for (int q = 0; q < n; ++q) {
      const std::size_t bit = (x >> bit_of(q, n)) & 1u;
      if (keep_mask & (1u << q)) {
        r = (r << 1) | bit;
      } else {
        c = (c << 1) | bit;
      }
    }
    m[r * cols + c] = amps[x];
  }

  DensityMatrix rho{Eigen::MatrixXcd(rows, rows)};
  const auto& table = kernels::active();
  for (std::size_t a = 0; a < rows; ++a) {
    const cplx* ra = m.data() + a * cols;
    rho.entries(a, a) = cplx(table.conj_dot(ra, ra, cols).real(), 0.0);
    for (std::size_t b = a + 1; b < rows; ++b) {
      const cplx v = table.conj_dot(ra, m.data() + b * cols, cols);
      rho.entries(a, b) = v;
      rho.entries(b, a) = std::conj(v);
    }
  }
  return rho;
}

DensityMatrix reduced_density(const PureState& state, std::span<const int> keep) {
  std::uint32_t mask = 0;
  for (int q : keep) {
    if (q < 0 || q >= state.n_qubits()) {
      throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
    }
    if (mask & (1u << q)) throw std::invalid_argument("qubit index " + std::to_string(q) + " repeated");
    mask |= 1u << q;
  }
  return reduced_density_mask(state, mask);
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ab|^2 for Hermitian rho.
  return rho.entries.squaredNorm();
}

PureState permute_qubits(const PureState& state, std::span<const int> perm) {
  const int n = state.n_qubits();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::uint32_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || (seen & (1u << p))) throw std::invalid_argument("not a permutation");
    seen |= 1u << p;
  }
  const auto amps = state.amplitudes();
  std::vector<cplx> out(amps.size());
  for (std::size_t x = 0; x < amps.size(); ++x) {
    std::size_t y = 0;
    for (int q = 0; q < n; ++q) {
      if ((x >> bit_of(q, n)) & 1u) y |= std::size_t{1} << bit_of(perm[q], n);
    }
    out[y] = amps[x];
  }
  return PureState(n, std::move(out));
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<cplx> out;
  out.reserve(a.dim() * b.dim());
  for (const cplx& x : a.amplitudes()) {
    for (const cplx& y : b.amplitudes()) out.push_back(x * y);
  }
  return PureState::normalized(a.n_qubits() + b.n_qubits(), std::move(out));
}

}  // namespace qtop
