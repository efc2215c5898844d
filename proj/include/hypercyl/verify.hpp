#ifndef HYPERCYL_VERIFY_HPP
#define HYPERCYL_VERIFY_HPP

// Exhaustive oracles and end-to-end checks at desk scale. The brute-force
// routines deliberately avoid the word-parallel paths of hypercube.hpp so
// they can certify them.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hypercyl/cylinder.hpp"
#include "hypercyl/embedding.hpp"
#include "hypercyl/graycode.hpp"
#include "hypercyl/hypercube.hpp"
#include "hypercyl/typeseq.hpp"

namespace hypercyl {

struct SearchReport {
  std::string kind;  // "embedding" or "sequence"
  int n = 0;
  int n1 = 0;
  int n2 = 0;
  std::int64_t minimum = 0;
  std::int64_t optima_count = 0;
  std::optional<EmbeddingMap> witness_embedding;
  std::optional<TypeSeq> witness_sequence;
  std::int64_t nodes_explored = 0;
  double elapsed_ms = 0.0;
  std::int64_t expected = 0;  // closed form the search is compared against
  bool pruned = false;

  [[nodiscard]] bool matches_expected() const { return minimum == expected; }
};

namespace detail {

class Stopwatch {
 public:
  [[nodiscard]] double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Boundary of a subset of Q_n (n <= 5) held as a bitmask over vertices.
inline std::int64_t naive_boundary(int n, std::uint64_t mask) {
  std::int64_t count = 0;
  for (Word v = 0; v < (Word{1} << n); ++v) {
    if (((mask >> v) & 1U) == 0) continue;
    for (int b = 0; b < n; ++b) {
      if (((mask >> (v ^ (Word{1} << b))) & 1U) == 0) ++count;
    }
  }
  return count;
}

inline std::int64_t naive_type(int n, std::uint64_t mask) {
  std::int64_t best = std::popcount(mask);
  for (int b = 0; b < n; ++b) {
    std::int64_t ones = 0;
    std::int64_t zeros = 0;
    for (Word v = 0; v < (Word{1} << n); ++v) {
      if (((mask >> v) & 1U) == 0) continue;
      (((v >> b) & 1U) != 0 ? ones : zeros) += 1;
    }
    best = std::min({best, ones, zeros});
  }
  return best;
}

// Calls fn(mask) for every k-subset of an m-element ground set (m <= 32).
template <typename Fn>
void for_each_k_subset(int m, int k, Fn&& fn) {
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << m;
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  while (mask < limit) {
    fn(mask);
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

inline void require_small_cube(int n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument(
        "exhaustive subset search supports 1 <= n <= 4 (n = 5 would need "
        "2^32 subsets)");
  }
}

}  // namespace detail

/// Exact minimum wirelength over all (2^n)! bijections, n <= 3. With
/// prune_symmetry, vertex 0...0 is pinned to label 1: composing with a
/// hypercube translation maps every embedding onto one of these with the
/// same wirelength, and each class has exactly 2^n members.
inline SearchReport brute_force_min_wirelength(int n1, int n2,
                                               bool prune_symmetry = false) {
  detail::Stopwatch clock;
  HostGraph host(n1, n2);
  const int n = host.n();
  if (n > 3) {
    throw std::invalid_argument("exhaustive embedding search needs n <= 3 (got " +
                                std::to_string(n) + ")");
  }
  const auto N = static_cast<std::size_t>(host.vertex_count());
  std::vector<std::int64_t> dist(N * N);
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      dist[x * N + y] = host.distance(static_cast<Label>(x + 1),
                                      static_cast<Label>(y + 1));
    }
  }
  std::vector<std::pair<Word, Word>> cube_edges;
  for_each_cube_edge(n, [&](Word u, Word v) { cube_edges.emplace_back(u, v); });

  std::vector<Label> labels(N);
  std::iota(labels.begin(), labels.end(), Label{1});
  const auto first = prune_symmetry ? labels.begin() + 1 : labels.begin();

  SearchReport report;
  report.kind = "embedding";
  report.n = n;
  report.n1 = n1;
  report.n2 = n2;
  report.pruned = prune_symmetry;
  report.expected = closed_form_wirelength(n1, n2);
  std::optional<std::vector<Label>> best_labels;
  do {
    ++report.nodes_explored;
    std::int64_t wl = 0;
    for (auto [u, v] : cube_edges) {
      wl += dist[static_cast<std::size_t>(labels[u] - 1) * N +
                 static_cast<std::size_t>(labels[v] - 1)];
    }
    if (!best_labels || wl < report.minimum) {
      report.minimum = wl;
      report.optima_count = 1;
      best_labels = labels;
    } else if (wl == report.minimum) {
      ++report.optima_count;
    }
  } while (std::next_permutation(first, labels.end()));

  report.witness_embedding.emplace(host, *best_labels);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

/// min boundary_theta over every k-subset of Q_n, n <= 4.
inline std::int64_t brute_force_theta(int n, std::int64_t k) {
  detail::require_small_cube(n);
  const int size = 1 << n;
  if (k < 0 || k > size) throw std::out_of_range("k outside [0, 2^n]");
  std::int64_t best = -1;
  detail::for_each_k_subset(size, static_cast<int>(k), [&](std::uint64_t mask) {
    const auto b = detail::naive_boundary(n, mask);
    if (best < 0 || b < best) best = b;
  });
  return best;
}

/// min boundary over half-size subsets of Q_n with Type t, n <= 4;
/// nullopt when no subset has that type.
inline std::optional<std::int64_t> brute_force_theta_type(int n, std::int64_t t) {
  detail::require_small_cube(n);
  const int size = 1 << n;
  if (t < 0 || t > size / 4) throw std::out_of_range("type outside [0, 2^{n-2}]");
  std::optional<std::int64_t> best;
  detail::for_each_k_subset(size, size / 2, [&](std::uint64_t mask) {
    if (detail::naive_type(n, mask) != t) return;
    const auto b = detail::naive_boundary(n, mask);
    if (!best || b < *best) best = b;
  });
  return best;
}

/// Minimum theta-sum over every sequence with CONDITION C_{n,n2}, entries
/// 0..2^{n-3}. The witness is the lexicographically least optimum.
inline SearchReport sequence_lower_bound_search(
    int n1, int n2, std::int64_t max_candidates = 50'000'000) {
  detail::Stopwatch clock;
  const int n = n1 + n2;
  if (n1 < 2 || n2 < 0 || n < 3) {
    throw std::invalid_argument("sequence search needs n1 >= 2 and n >= 3");
  }
  const std::int64_t cap = small_type_bound(n);
  const auto L = static_cast<std::size_t>(detail::pow2(n1 - 1));
  double space = 1.0;
  for (std::size_t i = 0; i < L; ++i) space *= static_cast<double>(cap + 1);
  if (space > static_cast<double>(max_candidates)) {
    throw std::invalid_argument("sequence space too large to enumerate");
  }

  std::vector<std::int64_t> cost(static_cast<std::size_t>(cap + 1));
  for (std::int64_t t = 0; t <= cap; ++t) {
    cost[static_cast<std::size_t>(t)] = theta_small_type(n, t);
  }
  const std::int64_t step = detail::pow2(n2);
  const std::int64_t doubled_bound = detail::pow2(n - 2) - detail::pow2(n2);

  SearchReport report;
  report.kind = "sequence";
  report.n = n;
  report.n1 = n1;
  report.n2 = n2;
  report.expected = closed_form_parts(n1, n2).cycle_part;

  std::vector<std::int64_t> x(L, 0);
  std::optional<std::vector<std::int64_t>> best;
  while (true) {
    ++report.nodes_explored;
    bool ok = true;
    int large = 0;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < L && ok; ++i) {
      if (std::abs(x[i] - x[(i + 1) % L]) > step) ok = false;
      if (2 * x[i] >= doubled_bound) ++large;
      sum += cost[static_cast<std::size_t>(x[i])];
    }
    if (ok && large >= 2) {
      if (!best || sum < report.minimum) {
        report.minimum = sum;
        report.optima_count = 1;
        best = x;
      } else if (sum == report.minimum) {
        ++report.optima_count;
      }
    }
    // Odometer with the last entry fastest, so the first optimum found is
    // the lexicographically least.
    std::size_t pos = L;
    while (pos > 0) {
      --pos;
      if (x[pos] < cap) {
        ++x[pos];
        break;
      }
      x[pos] = 0;
      if (pos == 0) {
        pos = L + 1;
        break;
      }
    }
    if (pos == L + 1) break;
  }
  if (!best) throw std::logic_error("no sequence satisfies CONDITION");
  report.witness_sequence.emplace(n, n2, *best);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

/// Exact minimum theta-sum over CONDITION C_{n,n2} sequences by dynamic
/// programming over (first entry, current entry, large entries seen), which
/// reaches sizes the odometer cannot. Returns the least sum and one optimum.
inline std::pair<std::int64_t, TypeSeq> condition_sequence_minimum(int n, int n2) {
  const int n1 = n - n2;
  if (n1 < 2 || n2 < 0 || n < 2) {
    throw std::invalid_argument("condition_sequence_minimum needs n1 >= 2");
  }
  const auto L = static_cast<std::size_t>(detail::pow2(n1 - 1));
  const std::int64_t cap = small_type_bound(n);
  const std::int64_t step = detail::pow2(n2);
  const std::int64_t doubled_bound = detail::pow2(n - 2) - detail::pow2(n2);
  const auto V = static_cast<std::size_t>(cap + 1);
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

  std::optional<std::pair<std::int64_t, std::vector<std::int64_t>>> best;
  for (std::int64_t first = 0; first <= cap; ++first) {
    // cost[pos][value][large], parent pointers for the witness.
    std::vector<std::vector<std::array<std::int64_t, 3>>> cost(
        L, std::vector<std::array<std::int64_t, 3>>(V, {kInf, kInf, kInf}));
    std::vector<std::vector<std::array<std::pair<std::int64_t, int>, 3>>> from(
        L, std::vector<std::array<std::pair<std::int64_t, int>, 3>>(V));
    auto large = [&](std::int64_t v) { return 2 * v >= doubled_bound ? 1 : 0; };
    cost[0][static_cast<std::size_t>(first)][large(first)] = theta_small_type(n, first);
    for (std::size_t i = 1; i < L; ++i) {
      for (std::int64_t c = 0; c <= cap; ++c) {
        for (int k = 0; k < 3; ++k) {
          const auto here = cost[i - 1][static_cast<std::size_t>(c)][k];
          if (here == kInf) continue;
          for (std::int64_t v = std::max<std::int64_t>(0, c - step);
               v <= std::min(cap, c + step); ++v) {
            const int nk = std::min(2, k + large(v));
            auto& slot = cost[i][static_cast<std::size_t>(v)][nk];
            const auto total = here + theta_small_type(n, v);
            if (total < slot) {
              slot = total;
              from[i][static_cast<std::size_t>(v)][nk] = {c, k};
            }
          }
        }
      }
    }
    for (std::int64_t c = 0; c <= cap; ++c) {
      const auto total = cost[L - 1][static_cast<std::size_t>(c)][2];
      if (total == kInf || std::abs(c - first) > step) continue;
      if (best && total >= best->first) continue;
      std::vector<std::int64_t> seq(L);
      std::int64_t v = c;
      int k = 2;
      for (std::size_t i = L; i-- > 0;) {
        seq[i] = v;
        if (i > 0) std::tie(v, k) = from[i][static_cast<std::size_t>(v)][k];
      }
      best.emplace(total, std::move(seq));
    }
  }
  if (!best) throw std::logic_error("no sequence satisfies CONDITION");
  return {best->first, TypeSeq(n, n2, std::move(best->second))};
}

inline EmbeddingMap random_embedding(const HostGraph& host, std::mt19937_64& rng) {
  std::vector<Label> labels(static_cast<std::size_t>(host.vertex_count()));
  std::iota(labels.begin(), labels.end(), Label{1});
  std::shuffle(labels.begin(), labels.end(), rng);
  return EmbeddingMap(host, std::move(labels));
}

/// Random sequence satisfying CONDITION C_{n,n2} by construction: two random
/// positions get values at or above the C2 bound, then the rest are filled in
/// random order, each drawn from the interval its assigned neighbours allow
/// under the circular Lipschitz constraint of C1.
inline TypeSeq random_condition_sequence(int n, int n2, std::mt19937_64& rng) {
  const int n1 = n - n2;
  if (n1 < 2) throw std::invalid_argument("random sequences need n1 >= 2");
  const auto L = static_cast<std::int64_t>(detail::pow2(n1 - 1));
  const std::int64_t cap = small_type_bound(n);
  const std::int64_t step = detail::pow2(n2);
  const std::int64_t doubled_bound = detail::pow2(n - 2) - detail::pow2(n2);
  const std::int64_t low = std::max<std::int64_t>(0, (doubled_bound + 1) / 2);

  std::vector<std::int64_t> x(static_cast<std::size_t>(L), -1);
  auto circ = [&](std::int64_t a, std::int64_t b) {
    const auto d = std::abs(a - b);
    return std::min(d, L - d);
  };
  auto draw = [&](std::int64_t i, std::int64_t lo, std::int64_t hi) {
    for (std::int64_t j = 0; j < L; ++j) {
      const auto v = x[static_cast<std::size_t>(j)];
      if (v < 0) continue;
      lo = std::max(lo, v - step * circ(i, j));
      hi = std::min(hi, v + step * circ(i, j));
    }
    std::uniform_int_distribution<std::int64_t> pick(lo, hi);
    x[static_cast<std::size_t>(i)] = pick(rng);
  };

  std::vector<std::int64_t> order(static_cast<std::size_t>(L));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  draw(order[0], low, cap);
  draw(order[1], low, cap);
  for (std::size_t k = 2; k < order.size(); ++k) draw(order[k], 0, cap);
  return TypeSeq(n, n2, std::move(x));
}

struct TheoremBReport {
  int n1 = 0;
  int n2 = 0;
  std::vector<std::int64_t> gray_terms;     // theta(n, xi^{-1}(B_j))
  std::vector<std::int64_t> optimal_terms;  // theta(n, j 2^{n1})
  std::int64_t gray_sum = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t violations = 0;
  std::string first_violation;

  [[nodiscard]] bool gray_attains() const { return gray_terms == optimal_terms; }
  [[nodiscard]] bool passed() const { return gray_attains() && violations == 0; }
};

/// Gray minimises every path-cut term: its B_j preimages attain
/// theta(n, j 2^{n1}), and random embeddings never beat it term by term.
inline TheoremBReport verify_theorem_B(int n1, int n2, std::int64_t trials,
                                       std::uint64_t seed) {
  TheoremBReport r;
  r.n1 = n1;
  r.n2 = n2;
  r.trials = trials;
  r.seed = seed;
  const auto gray = gray_embedding(n1, n2);
  const HostGraph& host = gray.host();
  for (std::int64_t j = 1; j <= path_cut_count(host); ++j) {
    r.gray_terms.push_back(boundary_theta(gray.preimage(region_B(host, j))));
    r.optimal_terms.push_back(theta_min(host.n(), j * host.rows()));
  }
  r.gray_sum = std::accumulate(r.gray_terms.begin(), r.gray_terms.end(),
                               std::int64_t{0});
  std::mt19937_64 rng(seed);
  for (std::int64_t t = 0; t < trials; ++t) {
    const auto f = random_embedding(host, rng);
    for (std::int64_t j = 1; j <= path_cut_count(host); ++j) {
      const auto term = boundary_theta(f.preimage(region_B(host, j)));
      if (term < r.gray_terms[static_cast<std::size_t>(j - 1)]) {
        if (r.violations == 0) {
          r.first_violation = "trial " + std::to_string(t) + ", j = " +
                              std::to_string(j) + ": " + std::to_string(term);
        }
        ++r.violations;
      }
    }
  }
  return r;
}

struct AgreementReport {
  int n1 = 0;
  int n2 = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t disagreements = 0;
  std::vector<EmbeddingMap> counterexamples;  // first few, verbatim
  std::int64_t gray_wirelength = 0;
  bool gray_agrees = false;

  [[nodiscard]] bool passed() const { return disagreements == 0 && gray_agrees; }
};

struct EngineTotals {
  std::int64_t direct = 0;
  std::int64_t cuts = 0;
  std::int64_t congestion = 0;        // cycle-first routing
  std::int64_t congestion_alt = 0;    // path-first routing

  [[nodiscard]] bool agree() const {
    return direct == cuts && direct == congestion && direct == congestion_alt;
  }
};

inline EngineTotals all_engines(const EmbeddingMap& f) {
  return {wirelength_direct(f), wirelength_via_cuts(f),
          wirelength_via_congestion(f, RoutingRule::cycle_first),
          wirelength_via_congestion(f, RoutingRule::path_first)};
}

inline AgreementReport verify_engine_agreement(int n1, int n2, std::int64_t trials,
                                               std::uint64_t seed,
                                               std::size_t keep = 3) {
  AgreementReport r;
  r.n1 = n1;
  r.n2 = n2;
  r.trials = trials;
  r.seed = seed;
  HostGraph host(n1, n2);
  if (host.n() > 10) throw std::invalid_argument("engine agreement needs n <= 10");
  const auto gray = all_engines(gray_embedding(n1, n2));
  r.gray_wirelength = gray.direct;
  r.gray_agrees = gray.agree();
  std::mt19937_64 rng(seed);
  for (std::int64_t t = 0; t < trials; ++t) {
    auto f = random_embedding(host, rng);
    if (!all_engines(f).agree()) {
      ++r.disagreements;
      if (r.counterexamples.size() < keep) r.counterexamples.push_back(std::move(f));
    }
  }
  return r;
}

struct GrayOptimumRow {
  int n1 = 0;
  int n2 = 0;
  std::int64_t gray_wirelength = 0;
  std::int64_t closed_form = 0;
  [[nodiscard]] bool matches() const { return gray_wirelength == closed_form; }
};

/// Gray wirelength against the closed form for 2 <= n1, 1 <= n2, n <= max_n
/// (and n1, n2 <= 6 as in the default sweep).
inline std::vector<GrayOptimumRow> verify_gray_optimum(int max_n1 = 6, int max_n2 = 6,
                                                       int max_n = 12) {
  std::vector<GrayOptimumRow> rows;
  for (int n1 = 2; n1 <= max_n1; ++n1) {
    for (int n2 = 1; n2 <= max_n2 && n1 + n2 <= max_n; ++n2) {
      rows.push_back({n1, n2, wirelength_direct(gray_embedding(n1, n2)),
                      closed_form_wirelength(n1, n2)});
    }
  }
  return rows;
}

struct IdentityResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;

  [[nodiscard]] bool passed() const { return cases > 0 && failures == 0; }
};

namespace detail {

inline void tally(IdentityResult& r, bool ok, const std::string& where) {
  ++r.cases;
  if (!ok) {
    if (r.failures == 0) r.first_failure = where;
    ++r.failures;
  }
}

}  // namespace detail

/// The isoperimetric recurrences, cubal edge-count recurrences and the
/// odd-type identity over the given ranges.
inline std::vector<IdentityResult> identity_suite(int max_n = 16,
                                                  std::int64_t max_k = 1 << 20) {
  using detail::pow2;
  using detail::tally;
  std::vector<IdentityResult> out;

  IdentityResult drop{"theta(n,k) = theta(n-1,k) + k, 0 <= k <= 2^{n-1}", 0, 0, {}};
  for (int n = 1; n <= max_n; ++n) {
    for (std::int64_t k = 0; k <= pow2(n - 1); ++k) {
      tally(drop, theta_min(n, k) == theta_min(n - 1, k) + k,
            "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  out.push_back(drop);

  IdentityResult dbl{"theta(n+1,2k) = 2 theta(n,k), 0 <= k <= 2^n", 0, 0, {}};
  for (int n = 0; n <= max_n; ++n) {
    for (std::int64_t k = 0; k <= pow2(n); ++k) {
      tally(dbl, theta_min(n + 1, 2 * k) == 2 * theta_min(n, k),
            "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  out.push_back(dbl);

  IdentityResult tdbl{"theta(n,2^{n-1},2t) = 2 theta(n-1,2^{n-2},t), 0 <= t <= 2^{n-4}", 0, 0, {}};
  for (int n = 4; n <= max_n; ++n) {
    for (std::int64_t t = 0; t <= pow2(n - 4); ++t) {
      tally(tdbl, theta_small_type(n, 2 * t) == 2 * theta_small_type(n - 1, t),
            "n=" + std::to_string(n) + " t=" + std::to_string(t));
    }
  }
  out.push_back(tdbl);

  IdentityResult e_odd{"E(2k+1) = E(2k) + popcount(k)", 0, 0, {}};
  IdentityResult e_even{"E(2k+2) = E(2k+1) + popcount(k) + 1", 0, 0, {}};
  IdentityResult e_mid{"2E(2k+1) = E(2k) + E(2k+2) - 1", 0, 0, {}};
  for (std::int64_t k = 0; k <= max_k; ++k) {
    const auto N = std::popcount(static_cast<std::uint64_t>(k));
    const auto e0 = cubal_edge_count(2 * k);
    const auto e1 = cubal_edge_count(2 * k + 1);
    const auto e2 = cubal_edge_count(2 * k + 2);
    const auto where = "k=" + std::to_string(k);
    tally(e_odd, e1 == e0 + N, where);
    tally(e_even, e2 == e1 + N + 1, where);
    tally(e_mid, 2 * e1 == e0 + e2 - 1, where);
  }
  out.push_back(e_odd);
  out.push_back(e_even);
  out.push_back(e_mid);

  IdentityResult odd{"2 theta(n,2^{n-1},2k+1) = theta(..,2k) + theta(..,2k+2) + 4", 0, 0, {}};
  for (int n = 5; n <= max_n; ++n) {
    for (std::int64_t k = 1; k <= pow2(n - 4) - 1; ++k) {
      tally(odd,
            2 * theta_small_type(n, 2 * k + 1) ==
                theta_small_type(n, 2 * k) + theta_small_type(n, 2 * k + 2) + 4,
            "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  out.push_back(odd);
  return out;
}

/// Path sum sum_{i=1}^{2^n-1} theta(n,i) = 2^{2n-1} - 2^{n-1} and circular
/// sum sum_{i=1}^{2^{n-1}} theta(n,2^{n-1},g_i^n) = 3 2^{2n-3} - 2^{n-1}.
inline std::vector<IdentityResult> degenerate_sum_suite(int max_n = 12) {
  using detail::pow2;
  IdentityResult path{"sum theta(n,i) = 2^{2n-1} - 2^{n-1}", 0, 0, {}};
  for (int n = 1; n <= max_n; ++n) {
    std::int64_t sum = 0;
    for (std::int64_t i = 1; i <= pow2(n) - 1; ++i) sum += theta_min(n, i);
    detail::tally(path, sum == pow2(2 * n - 1) - pow2(n - 1), "n=" + std::to_string(n));
  }
  IdentityResult cycle{"sum theta(n,2^{n-1},g_i^n) = 3 2^{2n-3} - 2^{n-1}", 0, 0, {}};
  for (int n = 2; n <= max_n; ++n) {
    std::int64_t sum = 0;
    for (std::int64_t i = 1; i <= pow2(n - 1); ++i) {
      sum += theta_small_type(n, g_value(n, i));
    }
    // 3 * 2^{2n-3} stays integral for n >= 2.
    detail::tally(cycle, sum == 3 * pow2(2 * n - 3) - pow2(n - 1), "n=" + std::to_string(n));
  }
  return {path, cycle};
}

}  // namespace hypercyl

#endif  // HYPERCYL_VERIFY_HPP
