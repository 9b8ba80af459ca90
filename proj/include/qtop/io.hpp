#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtop/classification.hpp"
#include "qtop/metrics.hpp"
#include "qtop/persistence.hpp"
#include "qtop/state.hpp"

namespace qtop {

std::string_view version() noexcept;

// ---- presets -------------------------------------------------------------

/// Named reference states: ghz2..ghz6, w3..w6, 4b1..4b6, 5b1..5b12.
std::optional<PureState> preset(std::string_view name);
std::vector<std::string> preset_names();

// ---- state files ---------------------------------------------------------

/// Malformed or unreadable state file.
class StateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Norm slack accepted in a state file without --normalize. States inside
/// it are rescaled; states inside kNormTolerance are kept bit-for-bit.
inline constexpr double kFileNormTolerance = 1e-6;

/// {"n_qubits": int, "amplitudes": [[re, im], ...]}
PureState parse_state_json(std::string_view text, bool normalize = false);
std::string state_to_json(const PureState& state);
PureState load_state_file(const std::filesystem::path& path, bool normalize = false);

// ---- rendering -----------------------------------------------------------

/// "inf" for infinite values, otherwise up to 9 significant digits.
std::string format_scale(double v);

/// One line per distinct bar with its multiplicity, e.g. "H0: 3 × [0, 0.632120559)".
std::string format_barcode_lines(const Barcode& b);

/// Aligned ASCII rows over a [0, 1] axis of the given width.
std::string render_barcode_text(const Barcode& b, int width = 50);

/// Standalone SVG: one <line> per bar, black/red/blue for H0/H1/H2,
/// infinite bars run to the right edge and end in an arrowhead.
std::string render_barcode_svg(const Barcode& b);

/// N rows of N comma-separated entries, nine decimals.
std::string format_distances_csv(const SemiMetricMatrix& d);

// ---- frequency tables ----------------------------------------------------

struct FrequencyRow {
  ClassSignature signature;
  std::optional<std::string> label;
  std::uint64_t count = 0;
  double fraction = 0.0;
};

/// Rows sorted by descending count, ties by signature.
std::vector<FrequencyRow> frequency_rows(const FrequencyTable& t);

std::string frequency_csv(const FrequencyTable& t);
std::string frequency_json(const FrequencyTable& t);

}  // namespace qtop
