#include "qtop/persistence.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "qtop/kernels.hpp"

namespace qtop {

namespace {

using VertexMask = std::uint64_t;

void check_max_dim(int max_dim) {
  if (max_dim < 1 || max_dim > kMaxSimplexDim) {
    throw std::invalid_argument("max_dim must be in [1, 3], got " + std::to_string(max_dim));
  }
}

VertexMask mask_of(const std::vector<int>& vertices) {
  VertexMask m = 0;
  for (int v : vertices) m |= VertexMask{1} << v;
  return m;
}

// Grows cliques of the edge graph {d < kEpsilonMax} in ascending vertex order.
void extend_cliques(const SemiMetricMatrix& d, int max_dim, std::vector<int>& current, double value,
                    std::vector<Simplex>& out) {
  out.push_back(Simplex{current, value});
  if (static_cast<int>(current.size()) > max_dim) return;
  for (int next = current.back() + 1; next < d.size(); ++next) {
    double grown = value;
    bool admissible = true;
    for (int v : current) {
      const double dv = d(v, next);
      if (!(dv < kEpsilonMax)) {
        admissible = false;
        break;
      }
      grown = std::max(grown, dv);
    }
    if (!admissible) continue;
    current.push_back(next);
    extend_cliques(d, max_dim, current, grown, out);
    current.pop_back();
  }
}

bool filtration_order(const Simplex& a, const Simplex& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  return a.vertices < b.vertices;
}

// Symmetric difference of two ascending index lists, written into a.
void add_column(std::vector<int>& a, const std::vector<int>& b, std::vector<int>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(scratch));
  a.swap(scratch);
}

// Rank over GF(2) of a set of bit-packed rows. Rows are consumed.
int gf2_rank(std::vector<std::vector<std::uint64_t>>& rows) {
  int rank = 0;
  const auto& table = kernels::active();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    std::size_t word = 0;
    while (word < row.size() && row[word] == 0) ++word;
    if (word == row.size()) continue;
    ++rank;
    const std::uint64_t pivot_bit = row[word] & (~row[word] + 1);
    for (std::size_t s = r + 1; s < rows.size(); ++s) {
      if (rows[s][word] & pivot_bit) table.xor_words(rows[s].data(), row.data(), row.size());
    }
  }
  return rank;
}

}  // namespace

std::vector<Bar> Barcode::in_dim(int dim) const {
  std::vector<Bar> out;
  for (const Bar& b : bars) {
    if (b.dim == dim) out.push_back(b);
  }
  return out;
}

Filtration build_rips(const SemiMetricMatrix& d, int max_dim) {
  check_max_dim(max_dim);
  if (d.size() > 64) throw std::invalid_argument("Rips construction supports at most 64 points");
  Filtration f;
  f.n_points = d.size();
  f.max_dim = max_dim;
  std::vector<int> current;
  for (int v = 0; v < d.size(); ++v) {
    current.assign(1, v);
    extend_cliques(d, max_dim, current, 0.0, f.simplices);
  }
  std::sort(f.simplices.begin(), f.simplices.end(), filtration_order);
  return f;
}

Barcode compute_persistence(const Filtration& f) {
  const auto& cells = f.simplices;
  const int n = static_cast<int>(cells.size());

  std::unordered_map<VertexMask, int> position;
  position.reserve(cells.size() * 2);
  for (int i = 0; i < n; ++i) position.emplace(mask_of(cells[i].vertices), i);

  // Boundary columns as ascending lists of filtration positions.
  std::vector<std::vector<int>> columns(n);
  for (int j = 0; j < n; ++j) {
    const auto& verts = cells[j].vertices;
    if (verts.size() < 2) continue;
    const VertexMask m = mask_of(verts);
    auto& col = columns[j];
    for (int v : verts) {
      const auto it = position.find(m & ~(VertexMask{1} << v));
      if (it == position.end()) throw std::invalid_argument("filtration is not closed under faces");
      if (it->second >= j) throw std::invalid_argument("face appears after its coface");
      col.push_back(it->second);
    }
    std::sort(col.begin(), col.end());
  }

  std::vector<int> pivot_owner(n, -1);  // row -> column whose lowest one is that row
  std::vector<bool> paired(n, false);
  std::vector<int> scratch;
  Barcode out;
  out.n_points = f.n_points;
  const int top_dim = std::min(2, f.max_dim);

  for (int j = 0; j < n; ++j) {
    auto& col = columns[j];
    while (!col.empty() && pivot_owner[col.back()] != -1) add_column(col, columns[pivot_owner[col.back()]], scratch);
    if (col.empty()) continue;
    const int low = col.back();
    pivot_owner[low] = j;
    paired[low] = paired[j] = true;
    const double birth = cells[low].value;
    const double death = cells[j].value;
    if (death > birth && cells[low].dim() <= top_dim) out.bars.push_back(Bar{cells[low].dim(), birth, death});
  }
  for (int i = 0; i < n; ++i) {
    if (!paired[i] && cells[i].dim() <= top_dim) out.bars.push_back(Bar{cells[i].dim(), cells[i].value, kInfinity});
  }
  std::sort(out.bars.begin(), out.bars.end());
  return out;
}

BettiNumbers betti_at(const SemiMetricMatrix& d, double eps, int max_dim) {
  check_max_dim(max_dim);
  if (!(eps >= 0.0 && eps < kEpsilonMax)) throw std::invalid_argument("eps must be in [0, 1)");
  const int n = d.size();
  if (n > 20) throw std::invalid_argument("betti_at enumerates subsets; use at most 20 points");

  // simplices[k] = vertex masks of the k-simplices present at eps.
  std::vector<std::vector<std::uint32_t>> simplices(max_dim + 1);
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    const int k = std::popcount(m) - 1;
    if (k > max_dim) continue;
    bool present = true;
    for (int a = 0; a < n && present; ++a) {
      if (!(m & (1u << a))) continue;
      for (int b = a + 1; b < n; ++b) {
        if ((m & (1u << b)) && !(d(a, b) <= eps)) {
          present = false;
          break;
        }
      }
    }
    if (present) simplices[k].push_back(m);
  }

  // rank_boundary[k] = rank of the map from k-simplices to (k-1)-simplices.
  std::vector<int> rank_boundary(max_dim + 2, 0);
  for (int k = 1; k <= max_dim; ++k) {
    const auto& faces = simplices[k - 1];
    std::unordered_map<std::uint32_t, std::size_t> face_index;
    for (std::size_t i = 0; i < faces.size(); ++i) face_index.emplace(faces[i], i);
    const std::size_t words = (faces.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(simplices[k].size());
    for (std::uint32_t s : simplices[k]) {
      std::vector<std::uint64_t> row(words, 0);
      for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
        const std::size_t idx = face_index.at(s & ~(rest & (~rest + 1)));
        row[idx / 64] |= std::uint64_t{1} << (idx % 64);
      }
      rows.push_back(std::move(row));
    }
    rank_boundary[k] = gf2_rank(rows);
  }

  BettiNumbers betti{0, 0, 0};
  for (int k = 0; k <= std::min(2, max_dim); ++k) {
    const int count = static_cast<int>(simplices[k].size());
    betti[k] = count - rank_boundary[k] - rank_boundary[k + 1];
  }
  return betti;
}

BettiNumbers alive_counts(const Barcode& b, double eps) {
  BettiNumbers counts{0, 0, 0};
  for (const Bar& bar : b.bars) {
    if (bar.dim >= 0 && bar.dim <= 2 && bar.alive_at(eps)) ++counts[bar.dim];
  }
  return counts;
}

}  // namespace qtop
