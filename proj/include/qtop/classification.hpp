#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "qtop/metrics.hpp"
#include "qtop/persistence.hpp"
#include "qtop/state.hpp"

namespace qtop {

inline constexpr double kPersistenceTolerance = 1e-9;

struct BarCounts {
  int finite = 0;
  int infinite = 0;

  auto operator<=>(const BarCounts&) const = default;
};

/// Per-dimension finite/infinite bar counts: the class key.
struct ClassSignature {
  std::array<BarCounts, 3> dims{};

  int n_points() const noexcept { return dims[0].finite + dims[0].infinite; }

  /// Canonical text form, e.g. "H0:1i+3f H1:1i H2:-".
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument on malformed input.
  static ClassSignature parse(std::string_view text);

  auto operator<=>(const ClassSignature&) const = default;
};

struct FrequencyTable {
  int n_qubits = 0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::map<ClassSignature, std::uint64_t> counts;
  std::uint64_t rejected = 0;

  std::uint64_t genuine() const noexcept { return n_samples - rejected; }
};

struct Classification {
  Barcode barcode;
  ClassSignature signature;
};

class NotGenuinelyEntangled : public std::runtime_error {
 public:
  explicit NotGenuinelyEntangled(const SeparableCut& cut);

  const SeparableCut& cut() const noexcept { return cut_; }

 private:
  SeparableCut cut_;
};

ClassSignature signature(const Barcode& b, double p_tol = kPersistenceTolerance);

/// Genuineness check, distances, Rips filtration, persistence, signature.
/// Throws NotGenuinelyEntangled when some bipartition has C_G <= tolerance.
Classification classify_state(const PureState& state);

/// Classifies n_samples random states; sample i draws from CounterRng(seed, i),
/// so the table is identical for every workers value.
FrequencyTable sample_frequencies(int n_qubits, std::uint64_t n_samples, std::uint64_t seed, int workers = 1);

/// sum_{d=0}^{N(N-1)/2} binom(N(N-1)/2, d) * d!
boost::multiprecision::cpp_int class_bound(int n_qubits);

/// Reference class label ("4B1" .. "4B6", "5B1" .. "5B12") carrying this
/// signature, if any. The table lists the per-dimension counts each class
/// is defined by (component, hole and persistence counts).
std::optional<std::string> reference_label(const ClassSignature& s);

/// Signature described for a labelled class; nullopt for unknown labels.
std::optional<ClassSignature> signature_for_label(std::string_view label);

}  // namespace qtop
