#ifndef HYPERCYL_SERIALIZE_HPP
#define HYPERCYL_SERIALIZE_HPP

// Tabular views of results. One Table renders as a JSON array of records, as
// CSV (array cells spread over numbered columns) or as aligned text, so every
// format carries the same numbers.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypercyl/embedding.hpp"
#include "hypercyl/typeseq.hpp"
#include "hypercyl/verify.hpp"

namespace hypercyl {

using Json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;

  void add(std::vector<Json> row) { rows.push_back(std::move(row)); }
};

inline Json to_json(const Table& t) {
  Json out = Json::array();
  for (const auto& row : t.rows) {
    Json record = Json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c) record[t.columns[c]] = row.at(c);
    out.push_back(std::move(record));
  }
  return out;
}

namespace detail {

inline std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Width of each column once array cells are spread out.
inline std::vector<std::size_t> spread_widths(const Table& t) {
  std::vector<std::size_t> w(t.columns.size(), 1);
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c].is_array()) w[c] = std::max<std::size_t>(w[c], row[c].size());
    }
  }
  return w;
}

}  // namespace detail

inline std::string to_csv(const Table& t) {
  const auto widths = detail::spread_widths(t);
  std::vector<bool> is_array(t.columns.size(), false);
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c].is_array()) is_array[c] = true;
    }
  }
  std::ostringstream out;
  std::vector<std::string> header;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (!is_array[c]) {
      header.push_back(t.columns[c]);
      continue;
    }
    for (std::size_t k = 1; k <= widths[c]; ++k) {
      header.push_back(t.columns[c] + std::to_string(k));
    }
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << detail::csv_escape(header[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!is_array[c]) {
        cells.push_back(detail::csv_escape(detail::cell_text(row[c])));
        continue;
      }
      for (std::size_t k = 0; k < widths[c]; ++k) {
        cells.push_back(k < row[c].size() ? detail::cell_text(row[c][k]) : "");
      }
    }
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  }
  return out.str();
}

inline std::string to_text(const Table& t) {
  auto render = [](const Json& v) {
    if (!v.is_array()) return detail::cell_text(v);
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + detail::cell_text(e);
    return s;
  };
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : t.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(render(row[c]));
      width[c] = std::max(width[c], line.back().size());
    }
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s;
    for (std::size_t c = 0; c < line.size(); ++c) {
      std::string cell = line[c];
      if (c + 1 < line.size()) cell.resize(width[c], ' ');
      s += (c ? "  " : "") + cell;
    }
    out << s << '\n';
  };
  emit(t.columns);
  for (const auto& line : cells) emit(line);
  return out.str();
}

inline Json entries_json(const std::vector<std::int64_t>& v) {
  return Json(v);
}

inline Table engine_table(const EmbeddingMap& f) {
  Table t{{"engine", "n", "n1", "n2", "wirelength"}, {}};
  auto row = [&](const char* engine, std::int64_t wl) {
    t.add({engine, f.n(), f.n1(), f.n2(), wl});
  };
  row("direct", wirelength_direct(f));
  row("cuts", wirelength_via_cuts(f));
  row("congestion", wirelength_via_congestion(f, RoutingRule::cycle_first));
  return t;
}

inline Table closed_form_table(int n1, int n2) {
  const auto parts = closed_form_parts(n1, n2);
  Table t{{"n", "n1", "n2", "cycle_part", "path_part", "wirelength"}, {}};
  t.add({n1 + n2, n1, n2, parts.cycle_part, parts.path_part, parts.total()});
  return t;
}

inline Table sequence_table(const TypeSeq& seq) {
  const auto c = check_condition(seq);
  Table t{{"n", "n2", "entries", "c1", "c2", "c3", "c2_vacuous", "condition"}, {}};
  t.add({seq.n(), seq.n2(), entries_json(seq.entries()), c.c1, c.c2, c.c3,
         c.c2_vacuous, c.holds()});
  return t;
}

inline Table certificate_table(const ReductionCertificate& cert) {
  Table t{{"stage_name", "n", "n2", "entries", "theta_sum", "exact", "multiplier",
           "scaled_sum", "condition"},
          {}};
  for (const auto& st : cert.stages) {
    t.add({st.name, st.seq.n(), st.seq.n2(), entries_json(st.seq.entries()),
           st.theta_sum, st.theta_exact, st.multiplier, st.scaled_sum(),
           st.condition.holds()});
  }
  return t;
}

inline Table runs_table(const ReductionCertificate& cert) {
  Table t{{"step", "indices", "shift", "sum_before", "sum_minus", "sum_plus"}, {}};
  for (const auto& r : cert.runs) {
    std::vector<std::int64_t> one_based;
    for (auto i : r.indices) one_based.push_back(static_cast<std::int64_t>(i) + 1);
    t.add({r.step, Json(one_based), r.shift, r.sum_before,
           r.sum_minus ? Json(*r.sum_minus) : Json(nullptr),
           r.sum_plus ? Json(*r.sum_plus) : Json(nullptr)});
  }
  return t;
}

inline Table search_table(const SearchReport& r) {
  Table t{{"kind", "n", "n1", "n2", "minimum", "expected", "optima_count",
           "nodes_explored", "pruned", "witness"},
          {}};
  Json witness = nullptr;
  if (r.witness_sequence) witness = entries_json(r.witness_sequence->entries());
  if (r.witness_embedding) witness = Json(r.witness_embedding->labels());
  t.add({r.kind, r.n, r.n1, r.n2, r.minimum, r.expected, r.optima_count,
         r.nodes_explored, r.pruned, witness});
  return t;
}

inline Table theorem_b_table(const TheoremBReport& r) {
  Table t{{"j", "gray_term", "optimal_term"}, {}};
  for (std::size_t j = 0; j < r.gray_terms.size(); ++j) {
    t.add({static_cast<std::int64_t>(j + 1), r.gray_terms[j], r.optimal_terms[j]});
  }
  return t;
}

inline Table agreement_table(const AgreementReport& r) {
  Table t{{"n1", "n2", "trials", "seed", "disagreements", "gray_wirelength",
           "gray_agrees"},
          {}};
  t.add({r.n1, r.n2, r.trials, r.seed, r.disagreements, r.gray_wirelength,
         r.gray_agrees});
  return t;
}

inline Table gray_optimum_table(const std::vector<GrayOptimumRow>& rows) {
  Table t{{"n1", "n2", "gray_wirelength", "closed_form", "match"}, {}};
  for (const auto& r : rows) {
    t.add({r.n1, r.n2, r.gray_wirelength, r.closed_form, r.matches()});
  }
  return t;
}

inline Table identity_table(const std::vector<IdentityResult>& results) {
  Table t{{"identity", "cases", "failures", "passed"}, {}};
  for (const auto& r : results) t.add({r.name, r.cases, r.failures, r.passed()});
  return t;
}

}  // namespace hypercyl

#endif  // HYPERCYL_SERIALIZE_HPP
