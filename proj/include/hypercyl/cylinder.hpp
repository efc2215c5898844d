#ifndef HYPERCYL_CYLINDER_HPP
#define HYPERCYL_CYLINDER_HPP

// The host graph C_{2^{n1}} x P_{2^{n2}} drawn as a 2^{n1} x 2^{n2} grid with
// a wraparound edge in each column, labelled 1..2^n in snake order:
//
//   row 1:  1           2             ...  2^{n2}
//   row 2:  2*2^{n2}    2*2^{n2} - 1  ...  2^{n2} + 1
//   ...
//
// n1 = 0 gives the path P_{2^n} (one row) and n2 = 0 the cycle C_{2^n}
// (one column). n1 = 1 is rejected: C_2 would be a doubled edge.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypercyl/hypercube.hpp"

namespace hypercyl {

using Label = std::int64_t;

enum class HostKind { cylinder, path, cycle };

inline const char* to_string(HostKind kind) {
  switch (kind) {
    case HostKind::cylinder: return "cylinder";
    case HostKind::path: return "path";
    case HostKind::cycle: return "cycle";
  }
  return "?";
}

struct GridPosition {
  std::int64_t row = 0;     // 1..2^{n1}
  std::int64_t column = 0;  // 1..2^{n2}
  friend bool operator==(const GridPosition&, const GridPosition&) = default;
};

/// Host edge between two labels, stored with a < b.
struct HostEdge {
  Label a = 0;
  Label b = 0;
  HostEdge() = default;
  HostEdge(Label x, Label y) : a(std::min(x, y)), b(std::max(x, y)) {}
  friend bool operator==(const HostEdge&, const HostEdge&) = default;
  friend auto operator<=>(const HostEdge&, const HostEdge&) = default;
};

class HostGraph {
 public:
  HostGraph(int n1, int n2) : n1_(n1), n2_(n2) {
    if (n1 < 0 || n2 < 0 || n1 + n2 > kMaxDimension) {
      throw std::invalid_argument("host exponents out of range");
    }
    if (n1 + n2 < 1) throw std::invalid_argument("host needs n1 + n2 >= 1");
    if (n1 == 1) {
      throw std::invalid_argument(
          "n1 = 1 makes C_2 a doubled edge; cylinder hosts need n1 >= 2");
    }
    kind_ = n1 == 0 ? HostKind::path
            : n2 == 0 ? HostKind::cycle
                      : HostKind::cylinder;
  }

  [[nodiscard]] int n1() const { return n1_; }
  [[nodiscard]] int n2() const { return n2_; }
  [[nodiscard]] int n() const { return n1_ + n2_; }
  [[nodiscard]] HostKind kind() const { return kind_; }
  [[nodiscard]] std::int64_t rows() const { return detail::pow2(n1_); }
  [[nodiscard]] std::int64_t columns() const { return detail::pow2(n2_); }
  [[nodiscard]] std::int64_t vertex_count() const { return detail::pow2(n()); }

  /// a_{i,j}: odd rows run left to right, even rows right to left.
  [[nodiscard]] Label label(std::int64_t i, std::int64_t j) const {
    if (i < 1 || i > rows() || j < 1 || j > columns()) {
      throw std::out_of_range("grid position (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") outside host");
    }
    return i % 2 == 1 ? (i - 1) * columns() + j : i * columns() + 1 - j;
  }

  [[nodiscard]] GridPosition position(Label x) const {
    check_label(x);
    const std::int64_t row = (x - 1) / columns() + 1;
    const std::int64_t offset = (x - 1) % columns();
    return {row, row % 2 == 1 ? offset + 1 : columns() - offset};
  }

  /// Cyclic distance along the column direction plus path distance along
  /// rows. One-row and one-column hosts fall out of the same formula.
  [[nodiscard]] std::int64_t distance(Label x, Label y) const {
    const auto p = position(x);
    const auto q = position(y);
    const std::int64_t dr = std::abs(p.row - q.row);
    return std::min(dr, rows() - dr) + std::abs(p.column - q.column);
  }

  [[nodiscard]] bool has_cycle_edges() const { return rows() >= 3; }

  /// Edges are numbered: row edges (i, j)-(i, j+1) first, then column edges
  /// (i, j)-(i+1 mod R, j) when the column direction is a cycle.
  [[nodiscard]] std::int64_t edge_count() const {
    const std::int64_t row_edges = rows() * (columns() - 1);
    return row_edges + (has_cycle_edges() ? rows() * columns() : 0);
  }

  [[nodiscard]] HostEdge edge(std::int64_t id) const {
    const std::int64_t row_edges = rows() * (columns() - 1);
    if (id < 0 || id >= edge_count()) {
      throw std::out_of_range("edge id out of range");
    }
    if (id < row_edges) {
      const std::int64_t i = id / (columns() - 1) + 1;
      const std::int64_t j = id % (columns() - 1) + 1;
      return {label(i, j), label(i, j + 1)};
    }
    id -= row_edges;
    const std::int64_t i = id / columns() + 1;
    const std::int64_t j = id % columns() + 1;
    return {label(i, j), label(i % rows() + 1, j)};
  }

  /// Id of the edge joining adjacent labels x and y.
  [[nodiscard]] std::int64_t edge_id(Label x, Label y) const {
    auto p = position(x);
    auto q = position(y);
    if (p.row == q.row && std::abs(p.column - q.column) == 1) {
      return (p.row - 1) * (columns() - 1) + std::min(p.column, q.column) - 1;
    }
    if (p.column == q.column && has_cycle_edges()) {
      if ((p.row % rows()) + 1 == q.row) std::swap(p, q);
      if ((q.row % rows()) + 1 == p.row) {
        return rows() * (columns() - 1) + (q.row - 1) * columns() +
               (q.column - 1);
      }
    }
    throw std::invalid_argument("labels " + std::to_string(x) + " and " +
                                std::to_string(y) + " are not adjacent");
  }

  [[nodiscard]] std::vector<HostEdge> edges() const {
    std::vector<HostEdge> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (std::int64_t id = 0; id < edge_count(); ++id) out.push_back(edge(id));
    return out;
  }

  friend bool operator==(const HostGraph& a, const HostGraph& b) {
    return a.n1_ == b.n1_ && a.n2_ == b.n2_;
  }

 private:
  void check_label(Label x) const {
    if (x < 1 || x > vertex_count()) {
      throw std::out_of_range("host label " + std::to_string(x) +
                              " outside [1, " +
                              std::to_string(vertex_count()) + "]");
    }
  }

  int n1_;
  int n2_;
  HostKind kind_;
};

inline Label boustrophedon_label(const HostGraph& host, std::int64_t i,
                                 std::int64_t j) {
  return host.label(i, j);
}

inline GridPosition label_position(const HostGraph& host, Label x) {
  return host.position(x);
}

inline std::int64_t host_distance(const HostGraph& host, Label x, Label y) {
  return host.distance(x, y);
}

/// Number of cuts X_i: 2^{n1-1}, none for a path.
inline std::int64_t cycle_cut_count(const HostGraph& host) {
  return host.n1() == 0 ? 0 : detail::pow2(host.n1() - 1);
}

/// Number of cuts Y_j: 2^{n2} - 1.
inline std::int64_t path_cut_count(const HostGraph& host) {
  return host.columns() - 1;
}

/// A_i: the 2^{n-1} consecutive labels starting at (i-1) 2^{n2} + 1, i.e.
/// rows i .. i + 2^{n1-1} - 1. Sorted.
inline std::vector<Label> region_A(const HostGraph& host, std::int64_t i) {
  if (i < 1 || i > cycle_cut_count(host)) {
    throw std::out_of_range("region_A index " + std::to_string(i) +
                            " outside [1, 2^{n1-1}]");
  }
  std::vector<Label> out;
  const Label first = (i - 1) * host.columns() + 1;
  const std::int64_t half = detail::pow2(host.n() - 1);
  out.reserve(static_cast<std::size_t>(half));
  for (Label x = first; x < first + half; ++x) out.push_back(x);
  return out;
}

/// B_j: labels in the first j columns. Sorted.
inline std::vector<Label> region_B(const HostGraph& host, std::int64_t j) {
  if (j < 1 || j > path_cut_count(host)) {
    throw std::out_of_range("region_B index " + std::to_string(j) +
                            " outside [1, 2^{n2}-1]");
  }
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(j * host.rows()));
  for (std::int64_t i = 1; i <= host.rows(); ++i) {
    for (std::int64_t k = 1; k <= j; ++k) out.push_back(host.label(i, k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class CutFamily { cycle /* X_i */, path /* Y_j */ };

struct EdgeCut {
  CutFamily family;
  std::int64_t index;             // i for X_i, j for Y_j
  std::vector<HostEdge> edges;    // sorted
  std::vector<Label> region;      // induced vertex set: A_i or B_j

  [[nodiscard]] std::string name() const {
    return (family == CutFamily::cycle ? "X" : "Y") + std::to_string(index);
  }
};

/// X_1 cuts rows R|1 and R/2|R/2+1; X_i (i > 1) cuts rows i-1|i and
/// i-1+R/2|i+R/2, each across every column. Y_j cuts columns j|j+1 in every
/// row. Together they partition the host's edges.
inline std::vector<EdgeCut> cut_partition(const HostGraph& host) {
  std::vector<EdgeCut> cuts;
  const std::int64_t R = host.rows();
  const std::int64_t C = host.columns();
  for (std::int64_t i = 1; i <= cycle_cut_count(host); ++i) {
    EdgeCut cut{CutFamily::cycle, i, {}, region_A(host, i)};
    const std::int64_t upper = i == 1 ? R : i - 1;
    const std::int64_t opposite = (upper - 1 + R / 2) % R + 1;
    for (std::int64_t row : {upper, opposite}) {
      for (std::int64_t j = 1; j <= C; ++j) {
        cut.edges.emplace_back(host.label(row, j), host.label(row % R + 1, j));
      }
    }
    std::sort(cut.edges.begin(), cut.edges.end());
    cuts.push_back(std::move(cut));
  }
  for (std::int64_t j = 1; j <= path_cut_count(host); ++j) {
    EdgeCut cut{CutFamily::path, j, {}, region_B(host, j)};
    for (std::int64_t i = 1; i <= R; ++i) {
      cut.edges.emplace_back(host.label(i, j), host.label(i, j + 1));
    }
    std::sort(cut.edges.begin(), cut.edges.end());
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

}  // namespace hypercyl

#endif  // HYPERCYL_CYLINDER_HPP
