#ifndef HYPERCYL_HYPERCUBE_HPP
#define HYPERCYL_HYPERCUBE_HPP

// Combinatorics of the hypercube Q_n: vertex subsets, boundary edges,
// cubals, the Type of a subset and the closed-form edge-isoperimetric values.
//
// Vertices are n-bit words. Coordinate u_1 is the most significant bit, so
// coordinate j (1-based) lives at bit position n - j.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercyl {

using Word = std::uint32_t;

/// Largest cube dimension backed by an explicit vertex set.
inline constexpr int kMaxDimension = 24;

/// Largest dimension accepted by the formula-only paths.
inline constexpr int kMaxFormulaDimension = 40;

namespace detail {

inline void require_dimension(int n, int max = kMaxDimension) {
  if (n < 0 || n > max) {
    throw std::invalid_argument("cube dimension " + std::to_string(n) +
                                " outside [0, " + std::to_string(max) + "]");
  }
}

constexpr std::int64_t pow2(int e) { return std::int64_t{1} << e; }

}  // namespace detail

struct CubeVertex {
  Word bits = 0;
  int dim = 0;

  CubeVertex() = default;
  CubeVertex(Word value, int n) : bits(value), dim(n) {
    detail::require_dimension(n);
    if (n < 32 && (value >> n) != 0) {
      throw std::out_of_range("vertex " + std::to_string(value) +
                              " does not fit in " + std::to_string(n) +
                              " bits");
    }
  }

  /// Coordinate u_j, 1-based, u_1 most significant.
  [[nodiscard]] int coordinate(int j) const { return (bits >> (dim - j)) & 1U; }

  [[nodiscard]] std::string to_string() const {
    std::string s(static_cast<std::size_t>(dim), '0');
    for (int j = 1; j <= dim; ++j) {
      if (coordinate(j) != 0) s[static_cast<std::size_t>(j - 1)] = '1';
    }
    return s;
  }

  friend bool operator==(const CubeVertex&, const CubeVertex&) = default;
};

/// Parses a bit string such as "01101" into a vertex of Q_{length}.
inline CubeVertex parse_vertex(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty bit string");
  Word bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("not a bit string: '" + text + "'");
    }
    bits = (bits << 1) | static_cast<Word>(c - '0');
  }
  return CubeVertex(bits, static_cast<int>(text.size()));
}

/// Dense subset of V(Q_n), one bit per vertex.
class VertexSubset {
 public:
  VertexSubset() = default;

  explicit VertexSubset(int n)
      : dim_(n), blocks_(block_count(n), 0) {
    detail::require_dimension(n);
  }

  VertexSubset(int n, const std::vector<Word>& members) : VertexSubset(n) {
    for (Word v : members) insert(v);
  }

  static VertexSubset full(int n) {
    VertexSubset s(n);
    for (Word v = 0; v < universe_size(n); ++v) s.insert(v);
    return s;
  }

  [[nodiscard]] int dimension() const { return dim_; }

  [[nodiscard]] static Word universe_size(int n) { return Word{1} << n; }
  [[nodiscard]] Word universe_size() const { return universe_size(dim_); }

  void insert(Word v) {
    check(v);
    blocks_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(Word v) {
    check(v);
    blocks_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  [[nodiscard]] bool contains(Word v) const {
    if (v >= universe_size()) return false;
    return ((blocks_[v >> 6] >> (v & 63)) & 1U) != 0;
  }

  [[nodiscard]] std::int64_t size() const {
    std::int64_t total = 0;
    for (auto b : blocks_) total += std::popcount(b);
    return total;
  }

  [[nodiscard]] bool empty() const { return size() == 0; }

  [[nodiscard]] VertexSubset complement() const {
    VertexSubset c(dim_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) c.blocks_[i] = ~blocks_[i];
    c.blocks_.back() &= tail_mask(dim_);
    return c;
  }

  [[nodiscard]] std::vector<Word> members() const {
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      auto b = blocks_[i];
      while (b != 0) {
        out.push_back(static_cast<Word>(i * 64 + std::countr_zero(b)));
        b &= b - 1;
      }
    }
    return out;
  }

  [[nodiscard]] const std::vector<std::uint64_t>& blocks() const {
    return blocks_;
  }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  static std::size_t block_count(int n) {
    return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
  }
  static std::uint64_t tail_mask(int n) {
    return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << n)) - 1;
  }
  void check(Word v) const {
    if (v >= universe_size()) {
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " outside Q_" + std::to_string(dim_));
    }
  }

  int dim_ = 0;
  std::vector<std::uint64_t> blocks_ = std::vector<std::uint64_t>(1, 0);
};

namespace detail {

// Vertices whose bit b is 0, within one 64-bit block (b < 6).
inline constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};

// Block of neighbours across bit b: bit v of the result is bit (v ^ 2^b).
inline std::uint64_t flip_within_block(std::uint64_t x, int b) {
  const int s = 1 << b;
  return ((x & kLowHalf[b]) << s) | ((x >> s) & kLowHalf[b]);
}

inline std::uint64_t universe_mask(int n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << n)) - 1;
}

}  // namespace detail

/// Number of edges of Q_n with exactly one endpoint in s.
inline std::int64_t boundary_theta(const VertexSubset& s) {
  const int n = s.dimension();
  const auto& blk = s.blocks();
  const std::uint64_t live = detail::universe_mask(n);
  std::int64_t total = 0;
  for (int b = 0; b < n; ++b) {
    for (std::size_t i = 0; i < blk.size(); ++i) {
      std::uint64_t partner;
      if (b < 6) {
        partner = detail::flip_within_block(blk[i], b);
      } else {
        partner = blk[i ^ (std::size_t{1} << (b - 6))];
      }
      total += std::popcount(blk[i] & ~partner & live);
    }
  }
  return total;
}

/// E(k): internal edge count of a k-cubal, the maximum over all k-subsets.
/// With k = 2^{c_1} + ... + 2^{c_N}, c_1 < ... < c_N,
/// E(k) = sum_i (N - i) 2^{c_i} + c_i 2^{c_i - 1}.
inline std::int64_t cubal_edge_count(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("cubal size must be non-negative");
  const int terms = std::popcount(static_cast<std::uint64_t>(k));
  std::int64_t total = 0;
  int i = 0;
  for (int c = 0; c < 63; ++c) {
    if (((k >> c) & 1) == 0) continue;
    ++i;
    total += (terms - i) * detail::pow2(c);
    if (c > 0) total += c * detail::pow2(c - 1);
  }
  return total;
}

/// theta(n, k) = n k - 2 E(k), the minimum boundary of a k-subset of Q_n.
inline std::int64_t theta_min(int n, std::int64_t k) {
  detail::require_dimension(n, kMaxFormulaDimension);
  if (k < 0 || k > detail::pow2(n)) {
    throw std::out_of_range("theta(" + std::to_string(n) + ", " +
                            std::to_string(k) + "): k outside [0, 2^n]");
  }
  return n * k - 2 * cubal_edge_count(k);
}

/// The first k vertices of Q_n in numeric order; a k-cubal.
inline VertexSubset make_cubal(int n, std::int64_t k) {
  detail::require_dimension(n);
  if (k < 0 || k > detail::pow2(n)) {
    throw std::out_of_range("cubal size outside [0, 2^n]");
  }
  VertexSubset s(n);
  for (Word v = 0; v < static_cast<Word>(k); ++v) s.insert(v);
  return s;
}

/// True iff s attains theta(n, |s|); by Harper's theorem, iff s is a cubal.
inline bool is_min_boundary(const VertexSubset& s) {
  return boundary_theta(s) == theta_min(s.dimension(), s.size());
}

/// |s ∩ H| for the half-plane H = {u : u_j = value}, j 1-based.
inline std::int64_t half_plane_count(const VertexSubset& s, int j, int value) {
  const int n = s.dimension();
  if (j < 1 || j > n) throw std::out_of_range("coordinate index out of range");
  const int b = n - j;
  const auto& blk = s.blocks();
  std::int64_t ones = 0;
  for (std::size_t i = 0; i < blk.size(); ++i) {
    if (b < 6) {
      ones += std::popcount(blk[i] & ~detail::kLowHalf[b]);
    } else if (((i >> (b - 6)) & 1U) != 0) {
      ones += std::popcount(blk[i]);
    }
  }
  return value != 0 ? ones : s.size() - ones;
}

/// Type(s): the minimum of |s ∩ H| over the 2n half-planes of Q_n.
inline std::int64_t type_of(const VertexSubset& s) {
  const int n = s.dimension();
  if (n < 1) throw std::invalid_argument("Type needs n >= 1");
  const std::int64_t total = s.size();
  std::int64_t best = total;
  for (int j = 1; j <= n; ++j) {
    const std::int64_t ones = half_plane_count(s, j, 1);
    best = std::min({best, ones, total - ones});
  }
  return best;
}

/// Largest small type for half-size subsets of Q_n: floor(2^{n-3}).
inline std::int64_t small_type_bound(int n) {
  if (n < 2) throw std::invalid_argument("small types need n >= 2");
  return n >= 3 ? detail::pow2(n - 3) : 0;
}

/// theta(n, 2^{n-1}, t) = 2 theta(n-2, t) + 2^{n-1} for small types
/// t <= 2^{n-3}. At n = 2 only t = 0 qualifies.
inline std::int64_t theta_small_type(int n, std::int64_t t) {
  detail::require_dimension(n, kMaxFormulaDimension);
  if (n < 2) throw std::invalid_argument("theta_small_type needs n >= 2");
  if (t < 0 || t > small_type_bound(n)) {
    throw std::out_of_range("type " + std::to_string(t) +
                            " is not small at n = " + std::to_string(n) +
                            "; use theta_type_lower_bound");
  }
  return 2 * theta_min(n - 2, t) + detail::pow2(n - 1);
}

/// Exact theta(n, 2^{n-1}, t) for small t, the big-type lower bound
/// theta(n, 2^{n-1}, 2^{n-3}) otherwise.
inline std::int64_t theta_type_lower_bound(int n, std::int64_t t) {
  detail::require_dimension(n, kMaxFormulaDimension);
  if (n < 2) throw std::invalid_argument("theta_type_lower_bound needs n >= 2");
  if (t < 0 || t > detail::pow2(n - 2)) {
    throw std::out_of_range("type outside [0, 2^{n-2}]");
  }
  return theta_small_type(n, std::min(t, small_type_bound(n)));
}

}  // namespace hypercyl

#endif  // HYPERCYL_HYPERCUBE_HPP
