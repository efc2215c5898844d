#ifndef HYPERCYL_EMBEDDING_HPP
#define HYPERCYL_EMBEDDING_HPP

// Embeddings of Q_n into a host graph and three independent ways to total
// their wirelength:
//
//   direct      sum over cube edges of the host distance between images
//   congestion  route every cube edge along a shortest host path, sum the
//               load on every host edge
//   cuts        sum of boundary_theta over the preimages of the induced
//               regions A_i and B_j of the cut partition

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercyl/cylinder.hpp"
#include "hypercyl/graycode.hpp"
#include "hypercyl/hypercube.hpp"

namespace hypercyl {

/// Malformed embedding file or non-bijective assignment.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmbeddingMap {
 public:
  /// labels[v] is the host label (1..2^n) of the vertex with word v.
  EmbeddingMap(HostGraph host, std::vector<Label> labels)
      : host_(host), label_of_(std::move(labels)) {
    const std::int64_t size = host_.vertex_count();
    if (static_cast<std::int64_t>(label_of_.size()) != size) {
      throw FormatError("expected " + std::to_string(size) + " labels, got " +
                        std::to_string(label_of_.size()));
    }
    vertex_of_.assign(static_cast<std::size_t>(size), kUnassigned);
    for (std::size_t v = 0; v < label_of_.size(); ++v) {
      const Label x = label_of_[v];
      if (x < 1 || x > size) {
        throw FormatError("label " + std::to_string(x) + " at vertex " +
                          std::to_string(v) + " outside [1, " +
                          std::to_string(size) + "]");
      }
      auto& slot = vertex_of_[static_cast<std::size_t>(x - 1)];
      if (slot != kUnassigned) {
        throw FormatError("duplicate label " + std::to_string(x) +
                          " (vertices " + std::to_string(slot) + " and " +
                          std::to_string(v) + ")");
      }
      slot = static_cast<Word>(v);
    }
  }

  [[nodiscard]] const HostGraph& host() const { return host_; }
  [[nodiscard]] int n() const { return host_.n(); }
  [[nodiscard]] int n1() const { return host_.n1(); }
  [[nodiscard]] int n2() const { return host_.n2(); }

  [[nodiscard]] Label label(Word v) const { return label_of_.at(v); }
  [[nodiscard]] Word vertex(Label x) const {
    return vertex_of_.at(static_cast<std::size_t>(x - 1));
  }
  [[nodiscard]] const std::vector<Label>& labels() const { return label_of_; }

  /// f^{-1}(labels).
  template <typename Range>
  [[nodiscard]] VertexSubset preimage(const Range& host_labels) const {
    VertexSubset s(n());
    for (Label x : host_labels) s.insert(vertex(x));
    return s;
  }

  friend bool operator==(const EmbeddingMap& a, const EmbeddingMap& b) {
    return a.host_ == b.host_ && a.label_of_ == b.label_of_;
  }

 private:
  static constexpr Word kUnassigned = ~Word{0};

  HostGraph host_;
  std::vector<Label> label_of_;
  std::vector<Word> vertex_of_;
};

/// Builds an embedding from the inverse listing: vertices[x - 1] is the
/// vertex placed at label x. Entries are vertex words 0..2^n - 1.
inline EmbeddingMap embedding_from_vertex_order(
    const HostGraph& host, const std::vector<Word>& vertices) {
  const std::int64_t size = host.vertex_count();
  if (static_cast<std::int64_t>(vertices.size()) != size) {
    throw FormatError("expected " + std::to_string(size) + " vertices, got " +
                      std::to_string(vertices.size()));
  }
  std::vector<Label> labels(static_cast<std::size_t>(size), 0);
  for (std::size_t x = 0; x < vertices.size(); ++x) {
    const Word v = vertices[x];
    if (v >= static_cast<Word>(size)) {
      throw FormatError("vertex " + std::to_string(v) + " outside Q_" +
                        std::to_string(host.n()));
    }
    if (labels[v] != 0) {
      throw FormatError("vertex " + std::to_string(v) + " listed twice");
    }
    labels[v] = static_cast<Label>(x + 1);
  }
  return EmbeddingMap(host, std::move(labels));
}

inline EmbeddingMap gray_embedding(int n1, int n2) {
  HostGraph host(n1, n2);
  std::vector<Label> labels(static_cast<std::size_t>(host.vertex_count()));
  for (std::size_t v = 0; v < labels.size(); ++v) {
    labels[v] = gray_rank(CubeVertex(static_cast<Word>(v), host.n()));
  }
  return EmbeddingMap(host, std::move(labels));
}

/// Identity on numeric order: vertex v goes to label v + 1.
inline EmbeddingMap lexicographic_embedding(int n1, int n2) {
  HostGraph host(n1, n2);
  std::vector<Label> labels(static_cast<std::size_t>(host.vertex_count()));
  std::iota(labels.begin(), labels.end(), Label{1});
  return EmbeddingMap(host, std::move(labels));
}

/// Calls fn(u, v) once for every edge {u, v} of Q_n with u < v.
template <typename Fn>
void for_each_cube_edge(int n, Fn&& fn) {
  const Word size = Word{1} << n;
  for (Word u = 0; u < size; ++u) {
    for (int b = 0; b < n; ++b) {
      const Word v = u ^ (Word{1} << b);
      if (u < v) fn(u, v);
    }
  }
}

inline std::int64_t wirelength_direct(const EmbeddingMap& f) {
  std::int64_t total = 0;
  for_each_cube_edge(f.n(), [&](Word u, Word v) {
    total += f.host().distance(f.label(u), f.label(v));
  });
  return total;
}

struct CutWirelength {
  std::int64_t cycle_part = 0;  // sum over X_i of theta(n, f^{-1}(A_i))
  std::int64_t path_part = 0;   // sum over Y_j of theta(n, f^{-1}(B_j))
  std::vector<std::int64_t> cycle_terms;
  std::vector<std::int64_t> path_terms;
  [[nodiscard]] std::int64_t total() const { return cycle_part + path_part; }
};

inline CutWirelength wirelength_cut_terms(const EmbeddingMap& f) {
  const HostGraph& host = f.host();
  CutWirelength out;
  for (std::int64_t i = 1; i <= cycle_cut_count(host); ++i) {
    const auto term = boundary_theta(f.preimage(region_A(host, i)));
    out.cycle_terms.push_back(term);
    out.cycle_part += term;
  }
  for (std::int64_t j = 1; j <= path_cut_count(host); ++j) {
    const auto term = boundary_theta(f.preimage(region_B(host, j)));
    out.path_terms.push_back(term);
    out.path_part += term;
  }
  return out;
}

inline std::int64_t wirelength_via_cuts(const EmbeddingMap& f) {
  return wirelength_cut_terms(f).total();
}

/// Dimension-ordered shortest-path routing. cycle_first moves along the
/// cyclic direction first, taking the shorter arc (ties toward increasing
/// row index), then along the row; path_first does the row leg first.
enum class RoutingRule { cycle_first, path_first };

/// Host edge ids along the routed walk from x to y.
inline std::vector<std::int64_t> route(const HostGraph& host, Label x, Label y,
                                       RoutingRule rule = RoutingRule::cycle_first) {
  std::vector<std::int64_t> walk;
  auto pos = host.position(x);
  const auto target = host.position(y);
  const std::int64_t R = host.rows();

  auto step_to = [&](GridPosition next) {
    walk.push_back(host.edge_id(host.label(pos.row, pos.column),
                                host.label(next.row, next.column)));
    pos = next;
  };
  auto cycle_leg = [&] {
    const std::int64_t forward = ((target.row - pos.row) % R + R) % R;
    const std::int64_t backward = (R - forward) % R;
    const bool up = forward <= backward;
    const std::int64_t steps = up ? forward : backward;
    for (std::int64_t s = 0; s < steps; ++s) {
      const std::int64_t row = up ? pos.row % R + 1 : (pos.row + R - 2) % R + 1;
      step_to({row, pos.column});
    }
  };
  auto path_leg = [&] {
    while (pos.column != target.column) {
      step_to({pos.row, pos.column + (target.column > pos.column ? 1 : -1)});
    }
  };

  if (rule == RoutingRule::cycle_first) {
    cycle_leg();
    path_leg();
  } else {
    path_leg();
    cycle_leg();
  }
  return walk;
}

/// EC_f(e') for every host edge id.
inline std::vector<std::int64_t> edge_congestion(
    const EmbeddingMap& f, RoutingRule rule = RoutingRule::cycle_first) {
  std::vector<std::int64_t> load(static_cast<std::size_t>(f.host().edge_count()), 0);
  for_each_cube_edge(f.n(), [&](Word u, Word v) {
    for (auto id : route(f.host(), f.label(u), f.label(v), rule)) {
      ++load[static_cast<std::size_t>(id)];
    }
  });
  return load;
}

inline std::int64_t wirelength_via_congestion(
    const EmbeddingMap& f, RoutingRule rule = RoutingRule::cycle_first) {
  const auto load = edge_congestion(f, rule);
  return std::accumulate(load.begin(), load.end(), std::int64_t{0});
}

struct ClosedForm {
  std::int64_t cycle_part = 0;  // 2^{n2} (3 * 2^{2 n1 - 3} - 2^{n1 - 1})
  std::int64_t path_part = 0;   // 2^{n1} (2^{2 n2 - 1} - 2^{n2 - 1})
  [[nodiscard]] std::int64_t total() const { return cycle_part + path_part; }
};

/// Both parts of the optimal wirelength, computed in exact integers.
/// n1 = 0 (path) keeps only the path part and n2 = 0 (cycle) only the cycle
/// part. n1 = 1 evaluates the same arithmetic, but no host realises it.
inline ClosedForm closed_form_parts(int n1, int n2) {
  if (n1 < 0 || n2 < 0 || n1 + n2 > 30) {
    throw std::invalid_argument("closed form exponents out of range");
  }
  if (n1 + n2 < 1) throw std::invalid_argument("closed form needs n1 + n2 >= 1");
  if (n2 == 0 && n1 < 2) {
    throw std::invalid_argument("cycle closed form needs n >= 2");
  }
  using detail::pow2;
  ClosedForm out;
  if (n1 > 0) {
    // 2^{n2} * 3 * 2^{2n1-3} with 2n1 + n2 - 3 >= 0 whenever it is reached.
    out.cycle_part = 3 * pow2(2 * n1 + n2 - 3) - pow2(n1 + n2 - 1);
  }
  if (n2 > 0) {
    out.path_part = pow2(n1 + 2 * n2 - 1) - pow2(n1 + n2 - 1);
  }
  return out;
}

inline std::int64_t closed_form_wirelength(int n1, int n2) {
  return closed_form_parts(n1, n2).total();
}

// Embedding file format:
//   # comment lines
//   n n1 n2
//   2^n host labels, whitespace separated, for vertices 0..2^n-1 in
//   numeric (lexicographic bit-string) order.
// Files that use 0..2^n-1 (0 present, 2^n absent) are shifted by +1.

namespace detail {

inline std::vector<std::string> significant_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

inline std::int64_t parse_integer(const std::string& token, const char* what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw FormatError(std::string("malformed ") + what + ": '" + token + "'");
  }
  return value;
}

}  // namespace detail

inline EmbeddingMap load_embedding(std::istream& in) {
  const auto lines = detail::significant_lines(in);
  if (lines.empty()) throw FormatError("empty embedding file");

  std::istringstream header(lines.front());
  std::vector<std::int64_t> dims;
  for (std::string tok; header >> tok;) {
    dims.push_back(detail::parse_integer(tok, "header field"));
  }
  if (dims.size() != 3) {
    throw FormatError("header must be 'n n1 n2', got '" + lines.front() + "'");
  }
  const auto n = dims[0];
  const auto n1 = dims[1];
  const auto n2 = dims[2];
  if (n1 < 0 || n2 < 0 || n != n1 + n2) {
    throw FormatError("header requires n = n1 + n2 with n1, n2 >= 0");
  }
  std::optional<HostGraph> host;
  try {
    host.emplace(static_cast<int>(n1), static_cast<int>(n2));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid host in header: ") + e.what());
  }

  std::vector<Label> labels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream body(lines[i]);
    for (std::string tok; body >> tok;) {
      labels.push_back(detail::parse_integer(tok, "label"));
    }
  }
  const std::int64_t size = host->vertex_count();
  if (static_cast<std::int64_t>(labels.size()) != size) {
    throw FormatError("expected " + std::to_string(size) + " labels, got " +
                      std::to_string(labels.size()));
  }
  const bool has_zero = std::find(labels.begin(), labels.end(), 0) != labels.end();
  const bool has_top = std::find(labels.begin(), labels.end(), size) != labels.end();
  if (has_zero && !has_top) {
    for (auto& x : labels) ++x;
  }

  std::vector<std::int64_t> seen(static_cast<std::size_t>(size) + 1, -1);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const Label x = labels[v];
    if (x < 1 || x > size) {
      throw FormatError("label " + std::to_string(x) + " out of range [1, " +
                        std::to_string(size) + "]");
    }
    if (seen[static_cast<std::size_t>(x)] >= 0) {
      throw FormatError("duplicate label " + std::to_string(x) +
                        " at vertices " +
                        std::to_string(seen[static_cast<std::size_t>(x)]) +
                        " and " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(x)] = static_cast<std::int64_t>(v);
  }
  return EmbeddingMap(*host, std::move(labels));
}

inline EmbeddingMap load_embedding_string(const std::string& text) {
  std::istringstream in(text);
  return load_embedding(in);
}

inline void save_embedding(const EmbeddingMap& f, std::ostream& out) {
  out << f.n() << ' ' << f.n1() << ' ' << f.n2() << '\n';
  const auto& labels = f.labels();
  for (std::size_t v = 0; v < labels.size(); ++v) {
    out << labels[v] << ((v + 1) % 16 == 0 || v + 1 == labels.size() ? '\n' : ' ');
  }
}

inline std::string save_embedding_string(const EmbeddingMap& f) {
  std::ostringstream out;
  save_embedding(f, out);
  return out.str();
}

}  // namespace hypercyl

#endif  // HYPERCYL_EMBEDDING_HPP
