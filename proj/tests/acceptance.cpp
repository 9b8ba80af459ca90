// Acceptance suite. Prints one PASS/FAIL line per criterion.
//
//   qtop_acceptance                  run all criteria
//   qtop_acceptance --criterion K    run only criterion K (1..9)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "oracles.hpp"
#include "qtop/classification.hpp"
#include "qtop/io.hpp"
#include "qtop/persistence.hpp"

using namespace qtop;

namespace {

// Pinned tolerances and campaign sizes.
constexpr double kGhzTimeLimitSec = 1.0;
constexpr double kDeathTol = 1e-9;
constexpr std::uint64_t kSamples = 100000;
constexpr std::uint64_t kSeed = 7;
constexpr double kFourQubitTolPP = 1.5;
constexpr double kFiveQubitMinCoverage = 0.93;
constexpr std::size_t kFiveQubitMaxClasses = 12;
constexpr double kSixQubitTop = 0.68;
constexpr double kSixQubitTol = 0.03;
constexpr std::size_t kSixQubitMinClasses = 10;
constexpr std::size_t kSixQubitMaxClasses = 33;
constexpr int kOracleMatrices = 100;
constexpr int kOracleEps = 20;
constexpr int kOracleMaxPoints = 7;
constexpr int kConcurrenceStates = 1000;
constexpr double kConcurrenceTol = 1e-9;
constexpr std::uint64_t kDeterminismSamples = 20000;

struct Outcome {
  bool pass;
  std::string detail;
};

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::string pct(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * f);
  return buf;
}

double fraction_of(const FrequencyTable& t, const std::string& label) {
  const auto s = signature_for_label(label);
  const auto it = t.counts.find(*s);
  return it == t.counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(t.genuine());
}

Outcome ghz_presets() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream os;
  for (int n = 4; n <= 6; ++n) {
    const auto c = classify_state(*preset("ghz" + std::to_string(n)));
    ClassSignature expect;
    expect.dims[0] = {0, n};
    ok &= c.signature == expect && c.barcode.bars.size() == static_cast<std::size_t>(n);
    os << "ghz" << n << "=" << c.signature.to_string() << "; ";
  }
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok &= sec < kGhzTimeLimitSec;
  os << "time " << sec << " s";
  return {ok, os.str()};
}

Outcome w_presets() {
  bool ok = true;
  std::ostringstream os;
  os.precision(12);
  for (int n = 4; n <= 6; ++n) {
    const auto w = *preset("w" + std::to_string(n));
    const auto c = classify_state(w);
    const double expect = 1.0 - std::exp(1.0 - n / 2.0);
    // Pair reduced states of W_N are X-shaped; the closed form gives C = 2/N.
    const std::vector<int> keep{0, 1};
    const double oracle_c = oracle::x_state_concurrence(reduced_density(w, keep).entries);
    ok &= std::abs(oracle_c - 2.0 / n) < kDeathTol;
    int finite = 0, infinite = 0;
    for (const auto& b : c.barcode.bars) {
      if (b.dim != 0) {
        ok = false;
      } else if (b.infinite()) {
        ++infinite;
      } else {
        ++finite;
        ok &= std::abs(b.death - expect) < kDeathTol && b.birth == 0.0;
      }
    }
    ok &= finite == n - 1 && infinite == 1;
    os << "w" << n << " death " << c.barcode.bars.front().death << " (expect " << expect << "); ";
  }
  return {ok, os.str()};
}

Outcome representative_presets() {
  int matched = 0, total = 0;
  std::ostringstream mismatches;
  for (const auto& name : preset_names()) {
    if (name.size() < 3 || name[1] != 'b') continue;
    ++total;
    std::string label = name;
    label[1] = 'B';
    const auto expect = *signature_for_label(label);
    const auto got = classify_state(*preset(name)).signature;
    if (got == expect) {
      ++matched;
    } else {
      mismatches << " " << label << " got " << got.to_string() << " want " << expect.to_string() << ";";
    }
  }
  std::ostringstream os;
  os << matched << "/" << total << " match";
  if (matched != total) os << ";" << mismatches.str();
  return {matched == total && total == 18, os.str()};
}

Outcome four_qubit_frequencies() {
  const auto t = sample_frequencies(4, kSamples, kSeed, workers());
  bool ok = t.counts.size() == 6;
  std::ostringstream os;
  const std::pair<const char*, double> targets[] = {{"4B1", 61.70}, {"4B2", 17.31}, {"4B3", 10.60}, {"4B6", 0.52}};
  for (const auto& [label, target] : targets) {
    const double got = 100.0 * fraction_of(t, label);
    const bool hit = std::abs(got - target) <= kFourQubitTolPP;
    ok &= hit;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s %.2f%% (target %.2f%%%s); ", label, got, target, hit ? "" : ", MISS");
    os << buf;
  }
  os << t.counts.size() << " classes";
  return {ok, os.str()};
}

Outcome five_qubit_coverage() {
  const auto t = sample_frequencies(5, kSamples, kSeed, workers());
  double cover = 0.0;
  for (int k = 1; k <= 5; ++k) cover += fraction_of(t, "5B" + std::to_string(k));
  bool all_labelled = true;
  for (const auto& [s, c] : t.counts) all_labelled &= reference_label(s).has_value();
  std::ostringstream os;
  os << "H0-only classes cover " << pct(cover) << "; " << t.counts.size() << " classes"
     << (all_labelled ? ", all labelled" : ", some unlabelled");
  return {cover >= kFiveQubitMinCoverage && t.counts.size() <= kFiveQubitMaxClasses && all_labelled, os.str()};
}

Outcome six_qubit_statistics() {
  const auto t = sample_frequencies(6, kSamples, kSeed, workers());
  const auto rows = frequency_rows(t);
  const double top = rows.empty() ? 0.0 : rows.front().fraction;
  bool valid = true;
  for (const auto& [s, c] : t.counts) {
    valid &= s.dims[0].infinite >= 1 && s.n_points() == 6;
    for (const auto& d : s.dims) valid &= d.finite >= 0 && d.infinite >= 0;
  }
  const std::size_t n = t.counts.size();
  const bool top_ok = std::abs(top - kSixQubitTop) <= kSixQubitTol;
  const bool count_ok = n >= kSixQubitMinClasses && n <= kSixQubitMaxClasses;
  std::ostringstream os;
  os << "top class " << (rows.empty() ? "-" : rows.front().signature.to_string()) << " at " << pct(top)
     << " (target 68.00% +/- 3)" << (top_ok ? "" : " MISS") << "; " << n << " classes (target 10..33)"
     << (count_ok ? "" : " MISS");
  return {top_ok && count_ok && valid, os.str()};
}

Outcome persistence_oracle() {
  std::mt19937_64 gen(kSeed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checks = 0, failures = 0;
  for (int m = 0; m < kOracleMatrices; ++m) {
    const int n = 2 + m % (kOracleMaxPoints - 1);
    const auto d = oracle::random_semi_metric(n, gen);
    const auto bars = compute_persistence(build_rips(d));
    for (int e = 0; e < kOracleEps; ++e) {
      const double eps = u(gen);
      ++checks;
      failures += alive_counts(bars, eps) != betti_at(d, eps);
    }
  }
  std::ostringstream os;
  os << checks - failures << "/" << checks << " (matrix, eps) pairs agree";
  return {failures == 0, os.str()};
}

Outcome concurrence_oracle() {
  std::mt19937_64 gen(kSeed);
  double worst = 0.0;
  for (int i = 0; i < kConcurrenceStates; ++i) {
    const PureState s(2, oracle::gaussian_state(2, gen));
    worst = std::max(worst, std::abs(concurrence(s, 0, 1) - oracle::pure_two_qubit_concurrence(s.amplitudes())));
  }
  bool ghz_zero = true;
  for (int n = 3; n <= 6; ++n) {
    const auto g = *preset("ghz" + std::to_string(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) ghz_zero &= concurrence(g, i, j) == 0.0;
  }
  std::ostringstream os;
  os << "max |C - 2|ad-bc|| = " << worst << "; GHZ_3..6 pairs " << (ghz_zero ? "exactly 0" : "NOT 0");
  return {worst < kConcurrenceTol && ghz_zero, os.str()};
}

Outcome determinism() {
  const auto ref = frequency_csv(sample_frequencies(4, kDeterminismSamples, kSeed, 1));
  bool same = true;
  for (int w : {4, 8}) same &= frequency_csv(sample_frequencies(4, kDeterminismSamples, kSeed, w)) == ref;
  std::ostringstream os;
  os << "workers 1/4/8 " << (same ? "byte-identical" : "DIFFER") << " (" << ref.size() << " bytes)";
  return {same, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"GHZ presets", ghz_presets},
      {"W presets", w_presets},
      {"representative presets", representative_presets},
      {"four-qubit frequencies", four_qubit_frequencies},
      {"five-qubit coverage", five_qubit_coverage},
      {"six-qubit statistics", six_qubit_statistics},
      {"persistence oracle", persistence_oracle},
      {"concurrence oracle", concurrence_oracle},
      {"determinism", determinism},
  };

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && static_cast<std::size_t>(only) != k + 1) continue;
    Outcome o{false, ""};
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s C%zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
    std::fflush(stdout);
    all &= o.pass;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
