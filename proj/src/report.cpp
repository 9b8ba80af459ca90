#include <algorithm>
#include <charconv>
#include <sstream>

#include "json.hpp"

#include "qtop/io.hpp"

#ifndef QTOP_VERSION
#define QTOP_VERSION "0.0.0"
#endif

namespace qtop {

namespace {

// Shortest text that parses back to the same double.
std::string exact(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string_view version() noexcept { return QTOP_VERSION; }

std::vector<FrequencyRow> frequency_rows(const FrequencyTable& t) {
  std::vector<FrequencyRow> rows;
  const double total = static_cast<double>(t.genuine());
  for (const auto& [sig, count] : t.counts) {
    rows.push_back(FrequencyRow{sig, reference_label(sig), count,
                                total > 0 ? static_cast<double>(count) / total : 0.0});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const FrequencyRow& a, const FrequencyRow& b) { return a.count > b.count; });
  return rows;
}

std::string frequency_csv(const FrequencyTable& t) {
  std::ostringstream os;
  os << "# qtop " << version() << " sample\n"
     << "# n_qubits=" << t.n_qubits << "\n"
     << "# n_samples=" << t.n_samples << "\n"
     << "# seed=" << t.seed << "\n"
     << "# genuine=" << t.genuine() << "\n"
     << "# rejected=" << t.rejected << "\n"
     << "signature,paper_label,count,fraction\n";
  for (const FrequencyRow& r : frequency_rows(t)) {
    os << r.signature.to_string() << ',' << r.label.value_or("") << ',' << r.count << ',' << exact(r.fraction)
       << '\n';
  }
  return os.str();
}

std::string frequency_json(const FrequencyTable& t) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["tool"] = "qtop";
  doc["version"] = std::string(version());
  doc["n_qubits"] = t.n_qubits;
  doc["n_samples"] = t.n_samples;
  doc["seed"] = t.seed;
  doc["genuine"] = t.genuine();
  doc["rejected"] = t.rejected;
  ordered_json classes = ordered_json::array();
  for (const FrequencyRow& r : frequency_rows(t)) {
    ordered_json row;
    row["signature"] = r.signature.to_string();
    row["paper_label"] = r.label ? ordered_json(*r.label) : ordered_json(nullptr);
    row["count"] = r.count;
    row["fraction"] = r.fraction;
    ordered_json dims = ordered_json::array();
    for (const BarCounts& c : r.signature.dims) dims.push_back({{"finite", c.finite}, {"infinite", c.infinite}});
    row["dims"] = std::move(dims);
    classes.push_back(std::move(row));
  }
  doc["classes"] = std::move(classes);
  return doc.dump(2) + "\n";
}

}  // namespace qtop
