#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qtop/io.hpp"

namespace qtop {

namespace {

constexpr const char* kDimColor[3] = {"black", "red", "blue"};

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

std::string format_scale(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string format_barcode_lines(const Barcode& b) {
  std::ostringstream os;
  std::size_t i = 0;
  while (i < b.bars.size()) {
    std::size_t j = i;
    while (j < b.bars.size() && b.bars[j] == b.bars[i]) ++j;
    const Bar& bar = b.bars[i];
    os << "H" << bar.dim << ": " << (j - i) << " × [" << format_scale(bar.birth) << ", "
       << format_scale(bar.death) << ")\n";
    i = j;
  }
  return os.str();
}

std::string render_barcode_text(const Barcode& b, int width) {
  width = std::max(width, 10);
  std::ostringstream os;
  const std::string pad(4, ' ');
  os << pad << "0" << std::string(static_cast<std::size_t>(width - 1), ' ') << "1\n";
  for (const Bar& bar : b.bars) {
    const int start = static_cast<int>(std::lround(bar.birth * width));
    std::string row(static_cast<std::size_t>(width), ' ');
    std::string tail = "|";
    int stop = width;
    if (!bar.infinite()) {
      stop = std::clamp(static_cast<int>(std::lround(bar.death * width)), start + 1, width);
    } else {
      tail = ">";
    }
    for (int c = start; c < stop && c < width; ++c) row[static_cast<std::size_t>(c)] = '#';
    os << "H" << bar.dim << " |" << row << tail << "  [" << format_scale(bar.birth) << ", "
       << format_scale(bar.death) << ")\n";
  }
  return os.str();
}

std::string render_barcode_svg(const Barcode& b) {
  constexpr double left = 50.0, right = 20.0, top = 20.0, row_h = 14.0, plot_w = 560.0;
  const double rows = static_cast<double>(std::max<std::size_t>(b.bars.size(), 1));
  const double axis_y = top + rows * row_h + 6.0;
  const double width = left + plot_w + right;
  const double height = axis_y + 34.0;
  auto x_of = [&](double eps) { return left + plot_w * std::clamp(eps, 0.0, 1.0); };

  std::ostringstream os;
  os << R"(<?xml version="1.0" encoding="UTF-8"?>)" << "\n"
     << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << width << R"(" height=")" << height
     << R"(" viewBox="0 0 )" << width << ' ' << height << R"(">)" << "\n";
  os << "  <defs>\n";
  for (int k = 0; k < 3; ++k) {
    os << R"(    <marker id="arrow-h)" << k
       << R"(" viewBox="0 0 10 10" refX="8" refY="5" markerWidth="4" markerHeight="4" orient="auto">)"
       << R"(<path d="M0,0 L10,5 L0,10 z" fill=")" << kDimColor[k] << R"("/></marker>)" << "\n";
  }
  os << "  </defs>\n";

  // Axis and ticks as a single path so that <line> elements are bars only.
  os << R"(  <path d="M)" << x_of(0) << ',' << axis_y << " H" << x_of(1);
  for (int t = 0; t <= 10; ++t) os << " M" << x_of(t / 10.0) << ',' << axis_y << " v4";
  os << R"(" stroke="#555" fill="none" stroke-width="1"/>)" << "\n";
  for (int t = 0; t <= 10; t += 2) {
    os << R"(  <text x=")" << x_of(t / 10.0) << R"(" y=")" << axis_y + 16
       << R"(" font-size="10" text-anchor="middle" font-family="sans-serif">)" << fixed(t / 10.0, 1)
       << "</text>\n";
  }
  os << R"(  <text x=")" << x_of(0.5) << R"(" y=")" << axis_y + 30
     << R"(" font-size="11" text-anchor="middle" font-family="sans-serif">&#949;</text>)" << "\n";

  for (std::size_t i = 0; i < b.bars.size(); ++i) {
    const Bar& bar = b.bars[i];
    const int k = std::clamp(bar.dim, 0, 2);
    const double y = top + (static_cast<double>(i) + 0.5) * row_h;
    const double x2 = bar.infinite() ? x_of(1.0) : x_of(bar.death);
    os << R"(  <line class="bar h)" << k << R"(" x1=")" << x_of(bar.birth) << R"(" y1=")" << y << R"(" x2=")"
       << x2 << R"(" y2=")" << y << R"(" stroke=")" << kDimColor[k] << R"(" stroke-width="4")";
    if (bar.infinite()) os << " marker-end=\"url(#arrow-h" << k << ")\"";
    os << "/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string format_distances_csv(const SemiMetricMatrix& d) {
  std::ostringstream os;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) {
      if (j > 0) os << ',';
      os << fixed(d(i, j), 9);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qtop
