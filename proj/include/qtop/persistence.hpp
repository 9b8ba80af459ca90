#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "qtop/metrics.hpp"

namespace qtop {

/// Upper end of the filtration range. Simplices whose value reaches it never
/// enter, and anything still alive as the scale approaches it is infinite.
inline constexpr double kEpsilonMax = 1.0;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr int kMaxSimplexDim = 3;

struct Simplex {
  std::vector<int> vertices;  // strictly ascending
  double value = 0.0;

  int dim() const noexcept { return static_cast<int>(vertices.size()) - 1; }
};

/// Rips filtration sorted by (value, dim, lexicographic vertices).
struct Filtration {
  std::vector<Simplex> simplices;
  int n_points = 0;
  int max_dim = kMaxSimplexDim;
};

struct Bar {
  int dim = 0;
  double birth = 0.0;
  double death = kInfinity;

  bool infinite() const noexcept { return death == kInfinity; }
  bool alive_at(double eps) const noexcept { return birth <= eps && eps < death; }

  auto operator<=>(const Bar&) const = default;
};

struct Barcode {
  std::vector<Bar> bars;  // sorted by (dim, birth, death)
  int n_points = 0;

  std::vector<Bar> in_dim(int dim) const;
};

using BettiNumbers = std::array<int, 3>;

/// All simplices up to max_dim whose pairwise distances are below kEpsilonMax.
Filtration build_rips(const SemiMetricMatrix& d, int max_dim = kMaxSimplexDim);

/// Standard column reduction of the filtration boundary matrix over GF(2).
/// Reports dimensions 0..min(2, max_dim); zero-length pairs are dropped.
Barcode compute_persistence(const Filtration& f);

/// Betti numbers b0..b2 of the Rips complex at scale eps (simplices with
/// value <= eps), from GF(2) ranks of dense boundary matrices. Independent
/// of compute_persistence; used as its oracle.
BettiNumbers betti_at(const SemiMetricMatrix& d, double eps, int max_dim = kMaxSimplexDim);

/// Number of bars per dimension alive at eps.
BettiNumbers alive_counts(const Barcode& b, double eps);

}  // namespace qtop
