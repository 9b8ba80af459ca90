#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtop/state.hpp"

namespace qtop {

/// Concurrence values below this are reported as exactly 0.
inline constexpr double kConcurrenceClamp = 1e-9;
inline constexpr double kGenuineTolerance = 1e-9;
/// Eigenvalues of rho at or below this (relative) level are treated as zero
/// before square roots are taken.
inline constexpr double kSpectrumCutoff = 1e-14;

/// Symmetric, zero-diagonal matrix of pairwise distances in [0, 1]. The
/// triangle inequality is not required.
class SemiMetricMatrix {
 public:
  explicit SemiMetricMatrix(int n);

  /// Validates symmetry, zero diagonal and range; throws std::invalid_argument.
  static SemiMetricMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int size() const noexcept { return n_; }
  double operator()(int i, int j) const noexcept { return entries_[index(i, j)]; }

  /// Sets both (i, j) and (j, i).
  void set(int i, int j, double value);

  SemiMetricMatrix permuted(const std::vector<int>& perm) const;

  bool operator==(const SemiMetricMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<double> entries_;
};

/// Wootters concurrence max(0, l1 - l2 - l3 - l4) of a two-qubit density
/// matrix, where l_i are the square roots of the eigenvalues of rho rho~ with
/// rho~ = (sy x sy) rho* (sy x sy). They are obtained as the singular values
/// of W^T (sy x sy) W for rho = W W^dagger.
double two_qubit_concurrence(const DensityMatrix& rho);

/// Concurrence between qubits i and j of a pure state.
double concurrence(const PureState& state, int i, int j);

/// 2 sqrt(1 - Tr rho^2).
double generalized_concurrence(const DensityMatrix& rho);

/// A bipartition whose reduced state is (numerically) pure.
struct SeparableCut {
  std::uint32_t subset_mask;  // qubits on side A; qubit N-1 is always on the other side
  double generalized_concurrence;
};

/// First bipartition (in mask order 1 .. 2^{N-1}-1) with C_G <= tol, if any.
std::optional<SeparableCut> find_separable_cut(const PureState& state, double tol = kGenuineTolerance);

bool is_genuinely_entangled(const PureState& state, double tol = kGenuineTolerance);

/// 1 - exp(1 - 1/c), with semi_distance(0) = 1.
double semi_distance(double c);

SemiMetricMatrix distance_matrix(const PureState& state);

}  // namespace qtop
