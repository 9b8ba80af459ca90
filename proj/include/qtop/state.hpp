#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qtop/rng.hpp"

namespace qtop {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 12;
inline constexpr double kNormTolerance = 1e-9;

/// Normalized state vector over the 2^n computational basis.
///
/// Basis index convention: index n is read as an n_qubits-bit binary string
/// whose most significant bit is qubit 0, so the ket |0001> has amplitude at
/// index 1 and its excitation on qubit 3.
class PureState {
 public:
  /// Throws std::invalid_argument unless amplitudes has length 2^n_qubits and
  /// unit norm within kNormTolerance.
  PureState(int n_qubits, std::vector<cplx> amplitudes);

  /// Rescales any nonzero vector of length 2^n_qubits to unit norm.
  static PureState normalized(int n_qubits, std::vector<cplx> amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  const cplx& operator[](std::size_t i) const noexcept { return amplitudes_[i]; }

  double norm() const noexcept;

 private:
  int n_qubits_;
  std::vector<cplx> amplitudes_;
};

/// Raw draws feeding the hyperspherical parametrization.
struct RandomStateParams {
  std::vector<double> phases;  // phi_1 .. phi_{2^N-1}, radians in [0, 2pi)
  std::vector<double> radii;   // xi_0 .. xi_{2^N-1}, in [0, 1]
};

/// Reduced state of a qubit subset. Hermitian, PSD, unit trace.
struct DensityMatrix {
  Eigen::MatrixXcd entries;

  std::size_t dim() const noexcept { return static_cast<std::size_t>(entries.rows()); }
};

/// Maps (phi, xi) to amplitudes with
///   nu_0 = cos theta_{d-1},
///   nu_n = e^{i phi_n} cos theta_{d-1-n} prod_{l=d-n}^{d-1} sin theta_l,
/// where sin theta_n = xi_n^{1/(2n)} and theta_0 = 0.
PureState state_from_params(int n_qubits, const RandomStateParams& params);

/// Draws phases then radii from rng and applies state_from_params. The
/// resulting distribution is the unitarily invariant measure.
PureState random_state(int n_qubits, CounterRng& rng);

/// Partial trace of |psi><psi| over every qubit not in keep. Output rows and
/// columns order the kept qubits by ascending index (first = most significant).
DensityMatrix reduced_density(const PureState& state, std::span<const int> keep);

/// Same, with the kept set given as a bit mask (bit q set = keep qubit q).
DensityMatrix reduced_density_mask(const PureState& state, std::uint32_t keep_mask);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// Relabels qubits: qubit q of the input becomes qubit perm[q] of the output.
PureState permute_qubits(const PureState& state, std::span<const int> perm);

/// Tensor product a (x) b; a's qubits come first.
PureState tensor(const PureState& a, const PureState& b);

}  // namespace qtop
