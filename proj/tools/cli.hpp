#ifndef HYPERCYL_TOOLS_CLI_HPP
#define HYPERCYL_TOOLS_CLI_HPP

// hypercyl command line. run() is separate from main() so tests can drive it
// in-process. Exit status: 0 ok, 1 verification failure, 2 usage or format
// error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypercyl/hypercyl.hpp"
#include "hypercyl/serialize.hpp"

namespace hypercyl::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string output;
  std::string input;
  int n1 = -1;
  int n2 = -1;
  std::uint64_t seed = 1;
  std::int64_t trials = 1000;
  bool prune_symmetry = false;
  std::int64_t pos_n = -1;
  std::int64_t pos_k = -1;
  std::optional<std::int64_t> type;
  int max_n = 16;
};

namespace detail {

struct Emitter {
  const Options& opt;
  std::ostream& out;

  // Writes the table to --output when given, otherwise to out. scalar, when
  // set, replaces the table in text mode.
  void table(const Table& t, const std::optional<std::string>& scalar = {}) const {
    std::string body;
    if (opt.format == "json") {
      body = to_json(t).dump(2) + "\n";
    } else if (opt.format == "csv") {
      body = to_csv(t);
    } else {
      body = scalar ? *scalar + "\n" : to_text(t);
    }
    if (opt.output.empty()) {
      out << body;
    } else {
      write_file(opt.output, body);
    }
  }

  static void write_file(const std::string& path, const std::string& body) {
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write " + path);
    file << body;
  }
};

inline void require_host(const Options& o) {
  if (o.n1 < 0 || o.n2 < 0) throw UsageError("--n1 and --n2 are required");
}

inline EmbeddingMap read_input(const Options& o) {
  if (o.input.empty()) throw UsageError("--input is required");
  std::ifstream file(o.input);
  if (!file) throw UsageError("cannot open " + o.input);
  return load_embedding(file);
}

inline void add_host(CLI::App* sub, Options& o) {
  sub->add_option("--n1", o.n1, "cycle exponent (C_{2^n1})")->required();
  sub->add_option("--n2", o.n2, "path exponent (P_{2^n2})")->required();
}

inline void add_random(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "seed for the random embeddings");
  sub->add_option("--trials", o.trials, "number of random embeddings");
}

inline ExitCode status(bool ok) { return ok ? kOk : kVerificationFailed; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  Options opt;
  ExitCode code = kOk;
  std::function<ExitCode()> action;

  CLI::App app{"Hypercube embeddings into cycle x path cylinders", "hypercyl"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", opt.output, "write the result to this file");

  detail::Emitter emit{opt, out};

  auto* wl = app.add_subcommand("wirelength", "three-engine wirelength of an embedding file");
  wl->add_option("--input", opt.input, "embedding file")->required();
  wl->callback([&] {
    action = [&] {
      const auto f = detail::read_input(opt);
      const auto t = engine_table(f);
      emit.table(t);
      return detail::status(t.rows[0][4] == t.rows[1][4] && t.rows[0][4] == t.rows[2][4]);
    };
  });

  auto* gray = app.add_subcommand(
      "gray", "Gray embedding wirelength; --output writes the embedding file");
  detail::add_host(gray, opt);
  gray->callback([&] {
    action = [&] {
      const auto f = gray_embedding(opt.n1, opt.n2);
      if (!opt.output.empty()) {
        detail::Emitter::write_file(opt.output, save_embedding_string(f));
      }
      const auto wl_direct = wirelength_direct(f);
      const auto closed = closed_form_wirelength(opt.n1, opt.n2);
      Table t{{"n", "n1", "n2", "wirelength", "closed_form"}, {}};
      t.add({f.n(), opt.n1, opt.n2, wl_direct, closed});
      Options to_stdout = opt;
      to_stdout.output.clear();
      detail::Emitter{to_stdout, out}.table(t, std::to_string(wl_direct));
      return detail::status(wl_direct == closed);
    };
  });

  auto* formula = app.add_subcommand("formula", "closed-form optimal wirelength");
  detail::add_host(formula, opt);
  formula->callback([&] {
    action = [&] {
      emit.table(closed_form_table(opt.n1, opt.n2),
                 std::to_string(closed_form_wirelength(opt.n1, opt.n2)));
      return kOk;
    };
  });

  auto* theta = app.add_subcommand("theta", "theta(n,k), or theta(n,2^{n-1},t) with --type");
  theta->add_option("n", opt.pos_n, "cube dimension")->required();
  theta->add_option("k", opt.pos_k, "subset size")->required();
  theta->add_option("--type", opt.type, "type t (needs k = 2^{n-1})");
  theta->callback([&] {
    action = [&] {
      const int n = static_cast<int>(opt.pos_n);
      if (n < 0 || n > kMaxFormulaDimension) throw UsageError("n out of range");
      Table t{{"n", "k", "type", "theta", "exact"}, {}};
      std::int64_t value = 0;
      bool exact = true;
      if (opt.type) {
        if (n < 2 || opt.pos_k != hypercyl::detail::pow2(n - 1)) {
          throw UsageError("--type needs n >= 2 and k = 2^{n-1}");
        }
        exact = *opt.type <= small_type_bound(n);
        value = theta_type_lower_bound(n, *opt.type);
        t.add({n, opt.pos_k, *opt.type, value, exact});
      } else {
        value = theta_min(n, opt.pos_k);
        t.add({n, opt.pos_k, nullptr, value, exact});
      }
      emit.table(t, std::to_string(value) + (exact ? "" : " (lower bound)"));
      return kOk;
    };
  });

  auto* typeseq = app.add_subcommand("typeseq", "type sequence and CONDITION report");
  typeseq->add_option("--input", opt.input, "embedding file")->required();
  typeseq->callback([&] {
    action = [&] {
      const auto seq = extract_type_sequence(detail::read_input(opt));
      emit.table(sequence_table(seq));
      return kOk;
    };
  });

  auto* reduce = app.add_subcommand("reduce", "reduction certificate of an embedding's sequence");
  reduce->add_option("--input", opt.input, "embedding file")->required();
  reduce->callback([&] {
    action = [&] {
      const auto seq = extract_type_sequence(detail::read_input(opt));
      const auto c = check_condition(seq);
      if (!c.c1 || !c.c2) {
        err << "sequence violates CONDITION: " << c.describe() << '\n';
        return kVerificationFailed;
      }
      const auto cert = reduce_to_base(seq);
      std::ostringstream text;
      text << to_text(certificate_table(cert)) << '\n' << to_text(runs_table(cert))
           << "\nbase scaled sum " << cert.base_scaled_sum() << ", Gray bound "
           << cert.gray_bound << (cert.meets_gray_bound() ? " (met)" : " (NOT met)")
           << "\nmonotone " << (cert.monotone ? "yes" : "no") << ", CONDITION at every stage "
           << (cert.conditions_held ? "yes" : "no");
      emit.table(certificate_table(cert), text.str());
      return detail::status(cert.monotone && cert.conditions_held);
    };
  });

  auto* brute = app.add_subcommand("brute-force", "exhaustive searches");
  brute->require_subcommand(1, 1);
  auto* bf_emb = brute->add_subcommand("embedding", "minimum wirelength over all bijections (n <= 3)");
  detail::add_host(bf_emb, opt);
  bf_emb->add_flag("--prune-symmetry", opt.prune_symmetry, "pin vertex 0...0 to label 1");
  bf_emb->callback([&] {
    action = [&] {
      const auto r = brute_force_min_wirelength(opt.n1, opt.n2, opt.prune_symmetry);
      if (!opt.output.empty()) {
        detail::Emitter::write_file(opt.output, save_embedding_string(*r.witness_embedding));
      }
      Options to_stdout = opt;
      to_stdout.output.clear();
      detail::Emitter{to_stdout, out}.table(search_table(r));
      return detail::status(r.matches_expected());
    };
  });
  auto* bf_theta = brute->add_subcommand("theta", "min boundary over all k-subsets (n <= 4)");
  bf_theta->add_option("n", opt.pos_n)->required();
  bf_theta->add_option("k", opt.pos_k)->required();
  bf_theta->callback([&] {
    action = [&] {
      const int n = static_cast<int>(opt.pos_n);
      const auto brute_value = brute_force_theta(n, opt.pos_k);
      const auto formula_value = theta_min(n, opt.pos_k);
      Table t{{"n", "k", "brute_force", "formula"}, {}};
      t.add({n, opt.pos_k, brute_value, formula_value});
      emit.table(t, std::to_string(brute_value));
      return detail::status(brute_value == formula_value);
    };
  });
  auto* bf_type = brute->add_subcommand("theta-type", "min boundary over half-size subsets of a type (n <= 4)");
  bf_type->add_option("n", opt.pos_n)->required();
  bf_type->add_option("t", opt.pos_k, "type")->required();
  bf_type->callback([&] {
    action = [&] {
      const int n = static_cast<int>(opt.pos_n);
      const auto value = brute_force_theta_type(n, opt.pos_k);
      Table t{{"n", "type", "brute_force", "formula"}, {}};
      Json formula_value = nullptr;
      bool ok = true;
      if (n >= 2 && opt.pos_k <= small_type_bound(n)) {
        formula_value = theta_small_type(n, opt.pos_k);
        ok = value && *value == formula_value.get<std::int64_t>();
      }
      t.add({n, opt.pos_k, value ? Json(*value) : Json(nullptr), formula_value});
      emit.table(t, value ? std::to_string(*value) : "none");
      return detail::status(ok);
    };
  });
  auto* bf_seq = brute->add_subcommand("sequence", "minimum theta-sum over CONDITION sequences");
  detail::add_host(bf_seq, opt);
  bf_seq->callback([&] {
    action = [&] {
      const auto r = sequence_lower_bound_search(opt.n1, opt.n2);
      emit.table(search_table(r));
      return detail::status(r.matches_expected());
    };
  });

  auto* verify = app.add_subcommand("verify", "theorem and agreement suites");
  verify->require_subcommand(1, 1);
  auto* v_opt = verify->add_subcommand("gray-optimum", "Gray wirelength = closed form, 2 <= n1,n2 <= 6, n <= 12");
  v_opt->callback([&] {
    action = [&] {
      const auto rows = verify_gray_optimum();
      emit.table(gray_optimum_table(rows));
      bool ok = true;
      for (const auto& r : rows) ok = ok && r.matches();
      return detail::status(ok);
    };
  });
  auto* v_b = verify->add_subcommand("theorem-b", "Gray minimises every path-cut term");
  detail::add_host(v_b, opt);
  detail::add_random(v_b, opt);
  v_b->callback([&] {
    action = [&] {
      const auto r = verify_theorem_B(opt.n1, opt.n2, opt.trials, opt.seed);
      emit.table(theorem_b_table(r));
      if (r.violations > 0) err << "violation: " << r.first_violation << '\n';
      return detail::status(r.passed());
    };
  });
  auto* v_agree = verify->add_subcommand("agreement", "three engines agree on random embeddings");
  detail::add_host(v_agree, opt);
  detail::add_random(v_agree, opt);
  v_agree->callback([&] {
    action = [&] {
      const auto r = verify_engine_agreement(opt.n1, opt.n2, opt.trials, opt.seed);
      emit.table(agreement_table(r));
      for (const auto& f : r.counterexamples) err << save_embedding_string(f);
      return detail::status(r.passed());
    };
  });
  auto* v_id = verify->add_subcommand("identities", "recurrence and closed-sum identities");
  v_id->add_option("--max-n", opt.max_n, "largest cube dimension checked")
      ->check(CLI::Range(4, 20));
  v_id->callback([&] {
    action = [&] {
      auto results = identity_suite(opt.max_n);
      for (auto& r : degenerate_sum_suite(std::min(opt.max_n, 16))) results.push_back(r);
      emit.table(identity_table(results));
      bool ok = true;
      for (const auto& r : results) ok = ok && r.passed();
      return detail::status(ok);
    };
  });
  auto* v_seq = verify->add_subcommand("sequence-bound", "exhaustive sequence bound against the closed form");
  detail::add_host(v_seq, opt);
  v_seq->callback([&] {
    action = [&] {
      const auto r = sequence_lower_bound_search(opt.n1, opt.n2);
      emit.table(search_table(r));
      if (!r.matches_expected()) {
        err << "minimum " << r.minimum << " differs from " << r.expected << '\n';
      }
      return detail::status(r.matches_expected());
    };
  });

  auto* fixtures_cmd = app.add_subcommand("fixtures", "bundled Q_7 reference embedding");
  fixtures_cmd->require_subcommand(1, 1);
  auto* table1 = fixtures_cmd->add_subcommand("table1", "reduce the reference embedding and diff against the bundled table");
  table1->callback([&] {
    action = [&] {
      const auto cert = reduce_to_base(extract_type_sequence(fixtures::reference_embedding()));
      const auto expected = fixtures::reference_reduction_rows();
      Table t{{"row", "stage_name", "n", "n2", "entries", "theta_sum", "matches"}, {}};
      bool ok = cert.stages.size() == expected.size();
      for (std::size_t r = 0; r < cert.stages.size(); ++r) {
        const auto& st = cert.stages[r];
        const bool match = r < expected.size() && st.seq == expected[r];
        ok = ok && match;
        t.add({r == 0 ? "s" : "s" + std::to_string(r), st.name, st.seq.n(), st.seq.n2(),
               entries_json(st.seq.entries()), st.theta_sum, match});
      }
      emit.table(t);
      return detail::status(ok);
    };
  });
  auto* emb = fixtures_cmd->add_subcommand("embedding", "reference embedding in the embedding file format");
  emb->callback([&] {
    action = [&] {
      const auto body = save_embedding_string(fixtures::reference_embedding());
      if (opt.output.empty()) {
        out << body;
      } else {
        detail::Emitter::write_file(opt.output, body);
      }
      return kOk;
    };
  });

  std::vector<std::string> argv_store{"hypercyl"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  try {
    code = action ? action() : kUsageError;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << e.what() << '\n';
    return kUsageError;
  }
  return code;
}

}  // namespace hypercyl::cli

#endif  // HYPERCYL_TOOLS_CLI_HPP
