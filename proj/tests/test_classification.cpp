#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qtop/classification.hpp"
#include "qtop/io.hpp"

using namespace qtop;

namespace {

ClassSignature sig(std::initializer_list<BarCounts> dims) {
  ClassSignature s;
  std::copy(dims.begin(), dims.end(), s.dims.begin());
  return s;
}

}  // namespace

TEST_CASE("signature worked examples") {
  const auto ghz = classify_state(*preset("ghz4"));
  CHECK(ghz.signature == sig({{0, 4}}));
  CHECK(reference_label(ghz.signature) == "4B6");

  const auto w = classify_state(*preset("w4"));
  CHECK(w.signature == sig({{3, 1}}));
  CHECK(reference_label(w.signature) == "4B1");

  SemiMetricMatrix cyc(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) cyc.set(i, j, 1.0);
  for (int i = 0; i < 4; ++i) cyc.set(i, (i + 1) % 4, 0.3);
  const auto cs = signature(compute_persistence(build_rips(cyc)));
  CHECK(cs == sig({{3, 1}, {0, 1}}));
  CHECK(reference_label(cs) == "4B3");
}

TEST_CASE("signature drops bars shorter than the tolerance") {
  Barcode b;
  b.n_points = 2;
  b.bars = {{0, 0.0, 0.2}, {0, 0.0, kInfinity}, {1, 0.5, 0.5 + 1e-12}};
  CHECK(signature(b) == sig({{1, 1}}));
  CHECK(signature(b, 0.5) == sig({{0, 1}}));
}

TEST_CASE("signature text form round-trips") {
  const auto s = sig({{3, 1}, {1, 1}, {0, 2}});
  CHECK(s.to_string() == "H0:1i+3f H1:1i+1f H2:2i");
  CHECK(sig({{0, 4}}).to_string() == "H0:4i H1:- H2:-");
  CHECK(sig({{3, 1}, {1, 0}}).to_string() == "H0:1i+3f H1:1f H2:-");
  for (const auto& name : preset_names()) {
    const auto c = classify_state(*preset(name)).signature;
    CHECK(ClassSignature::parse(c.to_string()) == c);
  }
  CHECK_THROWS_AS(ClassSignature::parse("H0:1i H1:-"), std::invalid_argument);
  CHECK_THROWS_AS(ClassSignature::parse("H0:xi H1:- H2:-"), std::invalid_argument);
  CHECK_THROWS_AS(ClassSignature::parse("H0:1i H1:- H2:- extra"), std::invalid_argument);
}

TEST_CASE("reference table lookups") {
  CHECK(signature_for_label("4B2") == sig({{3, 1}, {1, 0}}));
  CHECK(signature_for_label("5B9") == sig({{4, 1}, {0, 2}}));
  CHECK(signature_for_label("5B11") == sig({{4, 1}, {1, 1}}));
  CHECK(signature_for_label("5B12") == sig({{4, 1}, {2, 0}}));
  CHECK_FALSE(signature_for_label("6B1").has_value());
  std::vector<ClassSignature> all;
  for (int i = 1; i <= 6; ++i) all.push_back(*signature_for_label("4B" + std::to_string(i)));
  for (int i = 1; i <= 12; ++i) all.push_back(*signature_for_label("5B" + std::to_string(i)));
  for (const auto& s : all) {
    const auto label = reference_label(s);
    REQUIRE(label.has_value());
    CHECK(signature_for_label(*label) == s);
  }
  std::sort(all.begin(), all.end());
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("product states are rejected with the failing bipartition") {
  std::vector<cplx> amps(16, 0.0);
  amps[0] = 1.0;
  try {
    classify_state(PureState(4, amps));
    FAIL("expected NotGenuinelyEntangled");
  } catch (const NotGenuinelyEntangled& e) {
    CHECK(e.cut().subset_mask == 1u);
    CHECK(e.cut().generalized_concurrence == doctest::Approx(0.0));
    CHECK(std::string(e.what()).find("bipartition") != std::string::npos);
  }
}

TEST_CASE("signature is invariant under qubit relabeling") {
  for (std::uint64_t k = 0; k < 20; ++k) {
    CounterRng rng(606, k);
    const auto s = random_state(4, rng);
    const auto base = classify_state(s).signature;
    std::vector<int> perm{0, 1, 2, 3};
    do {
      CHECK(classify_state(permute_qubits(s, perm)).signature == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("sampled tables are independent of the worker count") {
  const auto one = sample_frequencies(4, 3000, 11, 1);
  const auto eight = sample_frequencies(4, 3000, 11, 8);
  CHECK(one.counts == eight.counts);
  CHECK(one.rejected == eight.rejected);
  std::uint64_t total = one.rejected;
  for (const auto& [s, c] : one.counts) {
    total += c;
    CHECK(s.n_points() == 4);
    CHECK(s.dims[0].infinite >= 1);
    CHECK(reference_label(s).has_value());
  }
  CHECK(total == 3000);
  CHECK(sample_frequencies(4, 3000, 12, 1).counts != one.counts);
}

TEST_CASE("class_bound matches direct evaluation and brute force") {
  CHECK(class_bound(2) == 2);
  CHECK(class_bound(3) == 16);
  CHECK(class_bound(4) == 1957);
  for (int n = 2; n <= 5; ++n) CHECK(class_bound(n) == oracle::enumerate_edge_sequences(n));
  for (int n = 2; n <= 10; ++n) CHECK(class_bound(n) == oracle::arrangements(n * (n - 1) / 2));
  CHECK_THROWS_AS(class_bound(1), std::invalid_argument);
  CHECK_THROWS_AS(class_bound(11), std::invalid_argument);
}
