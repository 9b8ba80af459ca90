#include <cmath>
#include <map>
#include <utility>

#include "qtop/io.hpp"

namespace qtop {

namespace {

struct Term {
  double amplitude;
  std::string_view ket;  // leftmost character is qubit 0
};

PureState from_terms(std::initializer_list<Term> terms) {
  const int n = static_cast<int>(terms.begin()->ket.size());
  std::vector<cplx> amps(std::size_t{1} << n);
  for (const Term& t : terms) {
    std::size_t index = 0;
    for (char c : t.ket) index = (index << 1) | static_cast<std::size_t>(c == '1');
    amps[index] += t.amplitude;
  }
  return PureState(n, std::move(amps));
}

PureState ghz(int n) {
  std::vector<cplx> amps(std::size_t{1} << n);
  amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
  return PureState(n, std::move(amps));
}

PureState w(int n) {
  std::vector<cplx> amps(std::size_t{1} << n);
  for (int q = 0; q < n; ++q) amps[std::size_t{1} << q] = 1.0 / std::sqrt(static_cast<double>(n));
  return PureState(n, std::move(amps));
}

const std::map<std::string, PureState, std::less<>>& registry() {
  static const auto table = [] {
    const double r2 = std::sqrt(2.0);
    const double r3 = std::sqrt(3.0);
    const double r5 = std::sqrt(5.0);
    const double r6 = std::sqrt(6.0);
    const double r10 = std::sqrt(10.0);
    const double r11 = std::sqrt(11.0);

    std::map<std::string, PureState, std::less<>> m;
    for (int n = 2; n <= 6; ++n) m.emplace("ghz" + std::to_string(n), ghz(n));
    for (int n = 3; n <= 6; ++n) m.emplace("w" + std::to_string(n), w(n));

    m.emplace("4b1", from_terms({{0.5, "0001"}, {0.5, "0010"}, {0.5, "0100"}, {0.5, "1000"}}));
    m.emplace("4b2", from_terms({{r2 / (2 * r2), "0000"},
                                 {1 / (2 * r2), "0011"},
                                 {1 / (2 * r2), "0110"},
                                 {1 / (2 * r2), "1001"},
                                 {1 / (2 * r2), "1100"},
                                 {r2 / (2 * r2), "1111"}}));
    m.emplace("4b3", from_terms({{0.5, "0000"}, {0.5, "0011"}, {0.5, "1010"}, {0.5, "1111"}}));
    m.emplace("4b4", from_terms({{0.5, "0011"}, {0.5, "1011"}, {0.5, "1101"}, {0.5, "1110"}}));
    m.emplace("4b5", from_terms({{1 / r3, "0000"}, {1 / r3, "0111"}, {1 / r3, "1101"}}));
    m.emplace("4b6", from_terms({{1 / r2, "0000"}, {1 / r2, "1111"}}));

    m.emplace("5b1", from_terms({{1 / r5, "00001"}, {1 / r5, "00011"}, {1 / r5, "00110"},
                                 {1 / r5, "01000"}, {1 / r5, "11011"}}));
    m.emplace("5b2", from_terms({{1 / r5, "00001"}, {1 / r5, "00011"}, {1 / r5, "00100"},
                                 {1 / r5, "01100"}, {1 / r5, "11010"}}));
    m.emplace("5b3", from_terms({{1 / r5, "00001"}, {1 / r5, "00010"}, {1 / r5, "00100"},
                                 {1 / r5, "01000"}, {1 / r5, "10111"}}));
    m.emplace("5b4", from_terms({{1 / r2, "00000"}, {1 / r2, "11111"}}));
    m.emplace("5b5", from_terms({{1 / r5, "00001"}, {1 / r5, "00010"}, {1 / r5, "00100"},
                                 {1 / r5, "01000"}, {1 / r5, "10000"}}));
    m.emplace("5b6", from_terms({{1 / r6, "00000"}, {1 / r6, "11000"}, {1 / r6, "01100"},
                                 {1 / r6, "00110"}, {1 / r6, "00011"}, {1 / r6, "10001"}}));
    m.emplace("5b7", from_terms({{1 / r5, "00010"}, {1 / r5, "00011"}, {1 / r5, "00101"},
                                 {1 / r5, "10111"}, {1 / r5, "11011"}}));
    m.emplace("5b8", from_terms({{r5 / r10, "00000"}, {1 / r10, "11000"}, {1 / r10, "01100"},
                                 {1 / r10, "00110"}, {1 / r10, "00011"}, {1 / r10, "10001"}}));
    m.emplace("5b9", from_terms({{std::sqrt(2.0 / 5.0), "00000"}, {std::sqrt(2.0 / 5.0), "01010"},
                                 {1.0 / 5.0, "00011"}, {1.0 / 5.0, "00101"}, {1.0 / 5.0, "01100"},
                                 {1.0 / 5.0, "11000"}, {1.0 / 5.0, "10001"}}));
    m.emplace("5b10", from_terms({{1 / r6, "01000"}, {1 / r6, "01010"}, {1 / r6, "10000"},
                                  {1 / r6, "10001"}, {1 / r6, "10110"}, {1 / r6, "11010"}}));
    m.emplace("5b11", from_terms({{r5 / r11, "00010"}, {r2 / r11, "00100"}, {r2 / r11, "10000"},
                                  {1 / r11, "10101"}, {1 / r11, "11100"}}));
    m.emplace("5b12", from_terms({{1 / r2, "00000"}, {1 / r10, "11000"}, {1 / r10, "01100"},
                                  {1 / r10, "01010"}, {1 / r10, "00101"}, {1 / r10, "10001"}}));
    return m;
  }();
  return table;
}

}  // namespace

std::optional<PureState> preset(std::string_view name) {
  const auto& r = registry();
  if (const auto it = r.find(name); it != r.end()) return it->second;
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, state] : registry()) names.push_back(name);
  return names;
}

}  // namespace qtop
