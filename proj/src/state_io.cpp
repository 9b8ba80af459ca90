#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qtop/io.hpp"

namespace qtop {

using nlohmann::json;

PureState parse_state_json(std::string_view text, bool normalize) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StateFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw StateFormatError("state file must be a JSON object");
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    throw StateFormatError("state file needs an \"amplitudes\" array");
  }
  const json& raw = doc["amplitudes"];
  const std::size_t len = raw.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw StateFormatError("amplitude list length must be a power of two (got " + std::to_string(len) + ")");
  }
  const int n = std::countr_zero(len);
  if (doc.contains("n_qubits")) {
    if (!doc["n_qubits"].is_number_integer() || doc["n_qubits"].get<int>() != n) {
      throw StateFormatError("n_qubits does not match amplitude count 2^" + std::to_string(n));
    }
  } else {
    throw StateFormatError("state file needs an integer \"n_qubits\"");
  }
  if (n > kMaxQubits) throw StateFormatError("at most " + std::to_string(kMaxQubits) + " qubits are supported");

  std::vector<cplx> amps;
  amps.reserve(len);
  for (const json& pair : raw) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw StateFormatError("each amplitude must be a [re, im] pair of numbers");
    }
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }

  double sq = 0.0;
  for (const cplx& a : amps) sq += std::norm(a);
  const double norm = std::sqrt(sq);
  try {
    if (normalize || (std::abs(norm - 1.0) > kNormTolerance && std::abs(norm - 1.0) <= kFileNormTolerance)) {
      return PureState::normalized(n, std::move(amps));
    }
    if (std::abs(norm - 1.0) > kFileNormTolerance) {
      std::ostringstream os;
      os << "state norm " << norm << " differs from 1 by more than " << kFileNormTolerance
         << " (use --normalize to rescale)";
      throw StateFormatError(os.str());
    }
    return PureState(n, std::move(amps));
  } catch (const std::invalid_argument& e) {
    throw StateFormatError(e.what());
  }
}

std::string state_to_json(const PureState& state) {
  json amps = json::array();
  for (const cplx& a : state.amplitudes()) amps.push_back(json::array({a.real(), a.imag()}));
  json doc;
  doc["n_qubits"] = state.n_qubits();
  doc["amplitudes"] = std::move(amps);
  return doc.dump(2) + "\n";
}

PureState load_state_file(const std::filesystem::path& path, bool normalize) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StateFormatError("cannot open state file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str(), normalize);
}

}  // namespace qtop
