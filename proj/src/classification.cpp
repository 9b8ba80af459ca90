#include "qtop/classification.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <thread>
#include <vector>

namespace qtop {

namespace {

struct LabelledClass {
  std::string_view label;
  ClassSignature signature;
};

constexpr ClassSignature make_sig(int f0, int i0, int f1 = 0, int i1 = 0, int f2 = 0, int i2 = 0) {
  return ClassSignature{{BarCounts{f0, i0}, BarCounts{f1, i1}, BarCounts{f2, i2}}};
}

// Counts of (finite, infinite) components, holes and voids per class.
const std::array<LabelledClass, 18> kReferenceClasses{{
    {"4B1", make_sig(3, 1)},
    {"4B2", make_sig(3, 1, 1, 0)},
    {"4B3", make_sig(3, 1, 0, 1)},
    {"4B4", make_sig(2, 2)},
    {"4B5", make_sig(1, 3)},
    {"4B6", make_sig(0, 4)},
    {"5B1", make_sig(2, 3)},
    {"5B2", make_sig(1, 4)},
    {"5B3", make_sig(3, 2)},
    {"5B4", make_sig(0, 5)},
    {"5B5", make_sig(4, 1)},
    {"5B6", make_sig(4, 1, 0, 1)},
    {"5B7", make_sig(3, 2, 0, 1)},
    {"5B8", make_sig(4, 1, 1, 0)},
    {"5B9", make_sig(4, 1, 0, 2)},
    {"5B10", make_sig(3, 2, 1, 0)},
    {"5B11", make_sig(4, 1, 1, 1)},
    {"5B12", make_sig(4, 1, 2, 0)},
}};

std::string describe_cut(const SeparableCut& cut) {
  std::ostringstream os;
  os << "state is not genuinely entangled: bipartition {";
  bool first = true;
  for (int q = 0; q < 32; ++q) {
    if (cut.subset_mask & (1u << q)) {
      os << (first ? "" : ",") << q;
      first = false;
    }
  }
  os << "} has generalized concurrence " << cut.generalized_concurrence;
  return os.str();
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
    throw std::invalid_argument("bad count in signature: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

NotGenuinelyEntangled::NotGenuinelyEntangled(const SeparableCut& cut)
    : std::runtime_error(describe_cut(cut)), cut_(cut) {}

std::string ClassSignature::to_string() const {
  std::string out;
  for (int k = 0; k < 3; ++k) {
    if (k > 0) out += ' ';
    out += "H" + std::to_string(k) + ":";
    const BarCounts& c = dims[k];
    if (c.finite == 0 && c.infinite == 0) {
      out += '-';
      continue;
    }
    if (c.infinite > 0) out += std::to_string(c.infinite) + "i";
    if (c.infinite > 0 && c.finite > 0) out += '+';
    if (c.finite > 0) out += std::to_string(c.finite) + "f";
  }
  return out;
}

ClassSignature ClassSignature::parse(std::string_view text) {
  ClassSignature sig;
  std::istringstream is{std::string(text)};
  std::string token;
  bool seen[3] = {false, false, false};
  while (is >> token) {
    if (token.size() < 4 || token[0] != 'H' || token[2] != ':' || token[1] < '0' || token[1] > '2') {
      throw std::invalid_argument("bad signature token: '" + token + "'");
    }
    const int k = token[1] - '0';
    if (seen[k]) throw std::invalid_argument("dimension repeated in signature");
    seen[k] = true;
    std::string_view body = std::string_view(token).substr(3);
    if (body == "-") continue;
    while (!body.empty()) {
      const auto plus = body.find('+');
      const std::string_view part = body.substr(0, plus);
      if (part.size() < 2) throw std::invalid_argument("bad signature part: '" + std::string(part) + "'");
      const int value = parse_int(part.substr(0, part.size() - 1));
      if (part.back() == 'i') {
        sig.dims[k].infinite = value;
      } else if (part.back() == 'f') {
        sig.dims[k].finite = value;
      } else {
        throw std::invalid_argument("bad signature suffix: '" + std::string(part) + "'");
      }
      body = plus == std::string_view::npos ? std::string_view{} : body.substr(plus + 1);
    }
  }
  if (!(seen[0] && seen[1] && seen[2])) throw std::invalid_argument("signature must list H0, H1 and H2");
  return sig;
}

ClassSignature signature(const Barcode& b, double p_tol) {
  ClassSignature sig;
  for (const Bar& bar : b.bars) {
    if (bar.dim < 0 || bar.dim > 2) continue;
    if (bar.infinite()) {
      ++sig.dims[bar.dim].infinite;
    } else if (bar.death - bar.birth >= p_tol) {
      ++sig.dims[bar.dim].finite;
    }
  }
  return sig;
}

Classification classify_state(const PureState& state) {
  if (state.n_qubits() < 2) throw std::invalid_argument("classification needs at least two qubits");
  if (auto cut = find_separable_cut(state)) throw NotGenuinelyEntangled(*cut);
  Classification out;
  out.barcode = compute_persistence(build_rips(distance_matrix(state)));
  out.signature = signature(out.barcode);
  return out;
}

FrequencyTable sample_frequencies(int n_qubits, std::uint64_t n_samples, std::uint64_t seed, int workers) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (n_qubits < 2 || n_qubits > kMaxQubits) throw std::invalid_argument("n_qubits out of range");

  struct Partial {
    std::map<ClassSignature, std::uint64_t> counts;
    std::uint64_t rejected = 0;
  };

  const auto n_workers = static_cast<std::uint64_t>(workers) < n_samples ? static_cast<std::uint64_t>(workers)
                                                                          : n_samples;
  std::vector<Partial> partials(n_workers);
  auto run = [&](std::uint64_t w) {
    const std::uint64_t begin = n_samples * w / n_workers;
    const std::uint64_t end = n_samples * (w + 1) / n_workers;
    Partial& part = partials[w];
    for (std::uint64_t i = begin; i < end; ++i) {
      CounterRng rng(seed, i);
      const PureState psi = random_state(n_qubits, rng);
      try {
        ++part.counts[classify_state(psi).signature];
      } catch (const NotGenuinelyEntangled&) {
        ++part.rejected;
      }
    }
  };

  if (n_workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(n_workers);
    for (std::uint64_t w = 0; w < n_workers; ++w) threads.emplace_back(run, w);
  }

  FrequencyTable table;
  table.n_qubits = n_qubits;
  table.n_samples = n_samples;
  table.seed = seed;
  for (const Partial& p : partials) {
    for (const auto& [sig, count] : p.counts) table.counts[sig] += count;
    table.rejected += p.rejected;
  }
  return table;
}

boost::multiprecision::cpp_int class_bound(int n_qubits) {
  if (n_qubits < 2 || n_qubits > 10) throw std::invalid_argument("class_bound needs 2 <= n_qubits <= 10");
  using boost::multiprecision::cpp_int;
  const int edges = n_qubits * (n_qubits - 1) / 2;
  // binom(m, d) * d! = m! / (m - d)!, accumulated as a falling factorial.
  cpp_int total = 0;
  cpp_int falling = 1;
  for (int d = 0; d <= edges; ++d) {
    if (d > 0) falling *= edges - d + 1;
    total += falling;
  }
  return total;
}

std::optional<std::string> reference_label(const ClassSignature& s) {
  for (const auto& c : kReferenceClasses) {
    if (c.signature == s) return std::string(c.label);
  }
  return std::nullopt;
}

std::optional<ClassSignature> signature_for_label(std::string_view label) {
  std::string upper(label);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (const auto& c : kReferenceClasses) {
    if (c.label == upper) return c.signature;
  }
  return std::nullopt;
}

}  // namespace qtop
