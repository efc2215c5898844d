#ifndef HYPERCYL_TYPESEQ_HPP
#define HYPERCYL_TYPESEQ_HPP

// Type sequences of an embedding and the reduction that lowers a sequence at
// level (n, n2) to level (n1, 0) without increasing its theta-sum:
//
//   clamp    cap big types at 2^{n-3}
//   evenize  shift odd runs by +-1 (two steps when n2 = 1)
//   halve    divide an even sequence by two, moving to (n - 1, n2 - 1)
//
// CONDITION C_{n,n2} on a sequence (x_i) of length 2^{n1-1}:
//   C1  circular neighbours differ by at most 2^{n2}
//   C2  at least two entries >= 2^{n-3} - 2^{n2-1}
//   C3  every entry <= 2^{n-3}
// Fractional bounds (n2 = 0, n < 3) are compared in doubled units.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercyl/cylinder.hpp"
#include "hypercyl/embedding.hpp"
#include "hypercyl/graycode.hpp"
#include "hypercyl/hypercube.hpp"

namespace hypercyl {

class TypeSeq {
 public:
  TypeSeq(int n, int n2, std::vector<std::int64_t> entries)
      : n_(n), n2_(n2), entries_(std::move(entries)) {
    if (n2 < 0 || n - n2 < 1 || n > kMaxFormulaDimension) {
      throw std::invalid_argument("type sequence needs 0 <= n2 < n");
    }
    if (n < 2) throw std::invalid_argument("type sequence needs n >= 2");
    const auto expected = static_cast<std::size_t>(detail::pow2(n - n2 - 1));
    if (entries_.size() != expected) {
      throw std::invalid_argument(
          "type sequence at (n=" + std::to_string(n) + ", n2=" +
          std::to_string(n2) + ") needs " + std::to_string(expected) +
          " entries, got " + std::to_string(entries_.size()));
    }
    for (auto x : entries_) {
      if (x < 0) throw std::invalid_argument("type entries must be >= 0");
    }
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int n1() const { return n_ - n2_; }
  [[nodiscard]] int n2() const { return n2_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const std::vector<std::int64_t>& entries() const { return entries_; }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const TypeSeq&, const TypeSeq&) = default;

 private:
  int n_;
  int n2_;
  std::vector<std::int64_t> entries_;
};

/// s_i = Type(f^{-1}(A_i)) for i = 1..2^{n1-1}.
inline TypeSeq extract_type_sequence(const EmbeddingMap& f) {
  const HostGraph& host = f.host();
  if (host.kind() != HostKind::cylinder && host.kind() != HostKind::cycle) {
    throw std::invalid_argument("type sequences need a host with cycle cuts");
  }
  std::vector<std::int64_t> entries;
  for (std::int64_t i = 1; i <= cycle_cut_count(host); ++i) {
    entries.push_back(type_of(f.preimage(region_A(host, i))));
  }
  return TypeSeq(f.n(), f.n2(), std::move(entries));
}

/// The Gray embedding's sequence, 2^{n2} g_i^{n1}.
inline TypeSeq gray_type_sequence(int n1, int n2) {
  std::vector<std::int64_t> entries;
  for (std::int64_t i = 1; i <= detail::pow2(n1 - 1); ++i) {
    entries.push_back(detail::pow2(n2) * g_value(n1, i));
  }
  return TypeSeq(n1 + n2, n2, std::move(entries));
}

struct ConditionReport {
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  bool c2_vacuous = false;  // bound 2^{n-3} - 2^{n2-1} <= 0

  [[nodiscard]] bool holds() const { return c1 && c2 && c3; }

  [[nodiscard]] std::string describe() const {
    auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
    return std::string("C1 ") + mark(c1) + ", C2 " + mark(c2) +
           (c2_vacuous ? " (vacuous)" : "") + ", C3 " + mark(c3);
  }
};

inline ConditionReport check_condition(const TypeSeq& seq) {
  const auto& x = seq.entries();
  const std::size_t L = x.size();
  ConditionReport r;

  const std::int64_t step = detail::pow2(seq.n2());
  r.c1 = true;
  for (std::size_t i = 0; i < L; ++i) {
    if (std::abs(x[i] - x[(i + 1) % L]) > step) r.c1 = false;
  }

  // 2 x >= 2^{n-2} - 2^{n2}
  const std::int64_t doubled_bound = detail::pow2(seq.n() - 2) - detail::pow2(seq.n2());
  r.c2_vacuous = doubled_bound <= 0;
  const auto large = std::count_if(x.begin(), x.end(), [&](std::int64_t v) {
    return 2 * v >= doubled_bound;
  });
  r.c2 = large >= 2;

  const std::int64_t cap = small_type_bound(seq.n());
  r.c3 = std::all_of(x.begin(), x.end(), [&](std::int64_t v) { return v <= cap; });
  return r;
}

inline TypeSeq clamp_big_type(const TypeSeq& seq) {
  const std::int64_t cap = small_type_bound(seq.n());
  auto entries = seq.entries();
  for (auto& v : entries) v = std::min(v, cap);
  return TypeSeq(seq.n(), seq.n2(), std::move(entries));
}

/// sum_i theta(n, 2^{n-1}, x_i); every entry must be a small type.
inline std::int64_t theta_sum(int n, const std::vector<std::int64_t>& x) {
  std::int64_t total = 0;
  for (auto v : x) total += theta_small_type(n, v);
  return total;
}

inline std::int64_t theta_sum(const TypeSeq& seq) {
  return theta_sum(seq.n(), seq.entries());
}

/// Same sum with big types replaced by their lower bound.
inline std::int64_t theta_sum_lower_bound(const TypeSeq& seq) {
  std::int64_t total = 0;
  for (auto v : seq.entries()) total += theta_type_lower_bound(seq.n(), v);
  return total;
}

/// Maximal circular blocks of odd entries, each listed in circular order.
/// An all-odd sequence is a single block starting at index 0.
inline std::vector<std::vector<std::size_t>> odd_runs(
    const std::vector<std::int64_t>& x) {
  const std::size_t L = x.size();
  auto odd = [&](std::size_t i) { return x[i] % 2 != 0; };
  std::vector<std::vector<std::size_t>> runs;
  std::size_t anchor = L;
  for (std::size_t i = 0; i < L; ++i) {
    if (!odd(i)) {
      anchor = i;
      break;
    }
  }
  if (anchor == L) {
    if (L == 0) return runs;
    std::vector<std::size_t> all(L);
    for (std::size_t i = 0; i < L; ++i) all[i] = i;
    runs.push_back(std::move(all));
    return runs;
  }
  std::vector<std::size_t> current;
  for (std::size_t k = 1; k <= L; ++k) {
    const std::size_t i = (anchor + k) % L;
    if (odd(i)) {
      current.push_back(i);
    } else if (!current.empty()) {
      runs.push_back(std::move(current));
      current.clear();
    }
  }
  return runs;
}

/// One shifted block of entries, with the theta-sums that justified it.
struct RunDecision {
  std::string step;                    // "case1", "step1" or "step2"
  std::vector<std::size_t> indices;    // 0-based
  int shift = 0;                       // -1 or +1
  std::int64_t sum_before = 0;
  std::optional<std::int64_t> sum_minus;
  std::optional<std::int64_t> sum_plus;

  [[nodiscard]] std::int64_t sum_after() const {
    return shift < 0 ? *sum_minus : *sum_plus;
  }
};

struct EvenizeResult {
  std::vector<TypeSeq> steps;  // one sequence for n2 > 1, two for n2 = 1
  std::vector<RunDecision> runs;
  bool step1_skipped = false;

  [[nodiscard]] const TypeSeq& result() const { return steps.back(); }
};

namespace detail {

inline std::int64_t run_sum(int n, const std::vector<std::int64_t>& x,
                            const std::vector<std::size_t>& run, int shift) {
  std::int64_t total = 0;
  for (auto i : run) total += theta_small_type(n, x[i] + shift);
  return total;
}

// Every maximal odd run moves uniformly by -1 or +1, whichever gives the
// smaller theta-sum; -1 on ties and whenever +1 would leave the small types.
inline TypeSeq shift_odd_runs(const TypeSeq& seq, const std::string& step,
                              std::vector<RunDecision>& log) {
  const int n = seq.n();
  const auto& x = seq.entries();
  const std::int64_t cap = small_type_bound(n);
  auto y = x;
  for (auto& run : odd_runs(x)) {
    RunDecision d;
    d.step = step;
    d.indices = run;
    d.sum_before = run_sum(n, x, run, 0);
    d.sum_minus = run_sum(n, x, run, -1);
    const bool plus_ok = std::all_of(run.begin(), run.end(),
                                     [&](std::size_t i) { return x[i] + 1 <= cap; });
    if (plus_ok) d.sum_plus = run_sum(n, x, run, +1);
    d.shift = (!d.sum_plus || *d.sum_minus <= *d.sum_plus) ? -1 : +1;
    for (auto i : run) y[i] = x[i] + d.shift;
    log.push_back(std::move(d));
  }
  return TypeSeq(seq.n(), seq.n2(), std::move(y));
}

// Property U: x_j = 2^{n-3} - 1 (odd) with a neighbour >= 2^{n-3} - 1.
inline bool has_property_u(const std::vector<std::int64_t>& x, std::size_t j,
                           std::int64_t top) {
  const std::size_t L = x.size();
  if (x[j] != top || top % 2 == 0) return false;
  const auto prev = x[(j + L - 1) % L];
  const auto next = x[(j + 1) % L];
  return std::max(prev, next) >= top;
}

}  // namespace detail

/// Number of entries with property U (x_j = 2^{n-3} - 1 odd and a neighbour
/// at least as large).
inline std::size_t property_u_count(const TypeSeq& seq) {
  const std::int64_t top = small_type_bound(seq.n()) - 1;
  std::size_t count = 0;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (detail::has_property_u(seq.entries(), j, top)) ++count;
  }
  return count;
}

/// Structure that step 1 of the n2 = 1 evenization relies on: two entries at
/// 2^{n-3}, or one such entry and a U element, or none and two U elements.
/// Sequences read off embeddings always have it; CONDITION alone does not
/// imply it.
inline bool has_peak_premise(const TypeSeq& seq) {
  const std::int64_t cap = small_type_bound(seq.n());
  const auto peaks = std::count(seq.entries().begin(), seq.entries().end(), cap);
  const auto u = property_u_count(seq);
  return peaks >= 2 || (peaks == 1 && u >= 1) || (peaks == 0 && u >= 2);
}

/// Makes every entry even without increasing the theta-sum. Does not check
/// CONDITION on input or output; see evenize.
inline EvenizeResult evenize_traced(const TypeSeq& seq) {
  if (seq.n2() < 1) throw std::invalid_argument("evenize needs n2 >= 1");
  EvenizeResult out;
  if (seq.n2() > 1) {
    out.steps.push_back(detail::shift_odd_runs(seq, "case1", out.runs));
    return out;
  }

  // n2 = 1. Step 1 lifts the strictly monotone odd runs that climb to a
  // U element, unless two entries already sit at 2^{n-3}.
  const auto& x = seq.entries();
  const std::size_t L = x.size();
  const std::int64_t cap = small_type_bound(seq.n());
  const std::int64_t top = cap - 1;
  auto y = x;
  if (std::count(x.begin(), x.end(), cap) >= 2) {
    out.step1_skipped = true;
  } else {
    std::vector<bool> claimed(L, false);
    for (std::size_t j = 0; j < L; ++j) {
      if (claimed[j] || !detail::has_property_u(x, j, top)) continue;
      std::vector<std::size_t> run{j};
      claimed[j] = true;
      for (int dir : {-1, +1}) {
        std::size_t cur = j;
        for (std::size_t steps = 1; steps < L; ++steps) {
          const std::size_t next = (cur + L + static_cast<std::size_t>(dir)) % L;
          if (claimed[next] || x[next] % 2 == 0 || x[next] >= x[cur]) break;
          run.push_back(next);
          claimed[next] = true;
          cur = next;
        }
      }
      RunDecision d;
      d.step = "step1";
      d.indices = run;
      d.shift = +1;
      d.sum_before = detail::run_sum(seq.n(), x, run, 0);
      d.sum_plus = detail::run_sum(seq.n(), x, run, +1);
      for (auto i : run) y[i] = x[i] + 1;
      out.runs.push_back(std::move(d));
    }
  }
  out.steps.emplace_back(seq.n(), seq.n2(), std::move(y));
  out.steps.push_back(detail::shift_odd_runs(out.steps.front(), "step2", out.runs));
  return out;
}

/// Even sequence with theta-sum no larger than the input's. Requires
/// CONDITION C_{n,n2} on the input.
inline TypeSeq evenize(const TypeSeq& seq) {
  if (!check_condition(seq).holds()) {
    throw std::invalid_argument("evenize: input violates CONDITION (" +
                                check_condition(seq).describe() + ")");
  }
  return evenize_traced(seq).result();
}

inline TypeSeq halve(const TypeSeq& seq) {
  if (seq.n2() < 1) throw std::invalid_argument("halve needs n2 >= 1");
  auto entries = seq.entries();
  for (auto& v : entries) {
    if (v % 2 != 0) {
      throw std::invalid_argument("halve: odd entry " + std::to_string(v));
    }
    v /= 2;
  }
  return TypeSeq(seq.n() - 1, seq.n2() - 1, std::move(entries));
}

struct ReductionStage {
  std::string name;
  TypeSeq seq;
  std::int64_t theta_sum = 0;     // at the stage's own level n
  bool theta_exact = true;        // false while big types are present
  std::int64_t multiplier = 1;    // 2^{halvings so far}
  ConditionReport condition;

  [[nodiscard]] std::int64_t scaled_sum() const { return theta_sum * multiplier; }
};

struct ReductionCertificate {
  std::vector<ReductionStage> stages;
  std::vector<RunDecision> runs;
  std::int64_t multiplier = 1;      // 2^{n2} of the input
  std::int64_t gray_bound = 0;      // 2^{n2} sum_i theta(n1, 2^{n1-1}, g_i^{n1})
  bool conditions_held = true;      // CONDITION at every stage after clamp
  bool monotone = true;             // scaled sums never increase

  [[nodiscard]] const TypeSeq& base() const { return stages.back().seq; }
  [[nodiscard]] std::int64_t base_scaled_sum() const {
    return stages.back().scaled_sum();
  }
  /// The final inequality of the chain; not implied by the reduction itself.
  [[nodiscard]] bool meets_gray_bound() const {
    return base_scaled_sum() >= gray_bound;
  }
};

/// clamp once, then (evenize, halve) n2 times. Requires C1 and C2 on the
/// input; C3 is established by the clamp.
inline ReductionCertificate reduce_to_base(const TypeSeq& input) {
  const auto first = check_condition(input);
  if (!first.c1 || !first.c2) {
    throw std::invalid_argument("reduce_to_base: input violates CONDITION (" +
                                first.describe() + ")");
  }
  ReductionCertificate cert;
  std::int64_t multiplier = 1;

  auto push = [&](std::string name, const TypeSeq& seq, bool exact) {
    ReductionStage st{std::move(name), seq,
                      exact ? theta_sum(seq) : theta_sum_lower_bound(seq),
                      exact, multiplier, check_condition(seq)};
    if (!cert.stages.empty() &&
        st.scaled_sum() > cert.stages.back().scaled_sum()) {
      cert.monotone = false;
    }
    if (!cert.stages.empty() && !st.condition.holds()) cert.conditions_held = false;
    cert.stages.push_back(std::move(st));
  };

  push("input", input, first.c3);
  TypeSeq current = clamp_big_type(input);
  push("clamp", current, true);

  while (current.n2() > 0) {
    auto ev = evenize_traced(current);
    if (ev.steps.size() == 1) {
      push("evenize", ev.steps[0], true);
    } else {
      push("evenize.step1", ev.steps[0], true);
      push("evenize.step2", ev.steps[1], true);
    }
    cert.runs.insert(cert.runs.end(), ev.runs.begin(), ev.runs.end());
    current = halve(ev.result());
    multiplier *= 2;
    push("halve", current, true);
  }

  cert.multiplier = multiplier;
  std::int64_t gray = 0;
  const int n1 = input.n1();
  if (n1 >= 2) {
    for (std::int64_t i = 1; i <= detail::pow2(n1 - 1); ++i) {
      gray += theta_small_type(n1, g_value(n1, i));
    }
  }
  cert.gray_bound = multiplier * gray;
  return cert;
}

}  // namespace hypercyl

#endif  // HYPERCYL_TYPESEQ_HPP
