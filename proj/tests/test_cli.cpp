#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hypercyl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Every integer that appears in the text, in order.
std::vector<std::int64_t> integers(const std::string& text) {
  static const std::regex number(R"(-?\d+)");
  std::vector<std::int64_t> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number);
       it != std::sregex_iterator(); ++it) {
    out.push_back(std::stoll(it->str()));
  }
  return out;
}

// Integers in the CSV body (header skipped, header names contain digits).
std::vector<std::int64_t> csv_integers(const std::string& csv) {
  return integers(csv.substr(csv.find('\n') + 1));
}

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, FormulaPrintsClosedForm) {
  const auto r = call({"formula", "--n1", "2", "--n2", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "12\n");
}

TEST(Cli, ThetaWithType) {
  const auto r = call({"theta", "7", "64", "--type", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "94\n");
  EXPECT_EQ(call({"theta", "3", "3"}).out, "5\n");
  EXPECT_EQ(call({"theta", "5", "16", "--type", "7"}).out, "24 (lower bound)\n");
  EXPECT_EQ(call({"theta", "7", "10", "--type", "5"}).code, 2);
}

TEST(Cli, FixturesTable1MatchesBundledTable) {
  const auto r = call({"fixtures", "table1", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_NE(line.find(",true"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 7);
  EXPECT_NE(r.out.find("s,input,7,2,5,9,13,15,13,10,6,3,5,9,13,17,14,10,6,3"), std::string::npos);
  EXPECT_NE(r.out.find("s6,halve,5,0,1,2,3,4,3,2,1,0,1,2,3,4,4,3,2,1"), std::string::npos);
}

TEST(Cli, FixturesTable1IsPure) {
  EXPECT_EQ(call({"fixtures", "table1", "--format", "json"}).out,
            call({"fixtures", "table1", "--format", "json"}).out);
}

TEST(Cli, CsvAndJsonCarryTheSameNumbers) {
  const auto path = temp_path("gray_3_2.emb");
  ASSERT_EQ(call({"gray", "--n1", "3", "--n2", "2", "--output", path}).code, 0);
  const std::vector<std::vector<std::string>> invocations = {
      {"formula", "--n1", "3", "--n2", "2"},
      {"theta", "7", "64", "--type", "5"},
      {"wirelength", "--input", path},
      {"typeseq", "--input", path},
      {"reduce", "--input", path},
      {"fixtures", "table1"},
      {"brute-force", "embedding", "--n1", "2", "--n2", "1", "--prune-symmetry"},
      {"brute-force", "sequence", "--n1", "3", "--n2", "1"},
      {"verify", "agreement", "--n1", "2", "--n2", "2", "--trials", "20", "--seed", "4"},
      {"verify", "theorem-b", "--n1", "3", "--n2", "2", "--trials", "20"},
  };
  for (auto args : invocations) {
    auto csv_args = args;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    auto json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto csv = call(csv_args);
    const auto json = call(json_args);
    EXPECT_EQ(csv.code, json.code) << args[0];
    // JSON keys carry no digits except the record values.
    auto parsed = hypercyl::Json::parse(json.out);
    EXPECT_TRUE(parsed.is_array()) << args[0];
    std::vector<std::int64_t> from_json;
    for (const auto& record : parsed) {
      for (const auto& [key, value] : record.items()) {
        if (value.is_number_integer()) from_json.push_back(value.get<std::int64_t>());
        if (value.is_array()) {
          for (const auto& e : value) from_json.push_back(e.get<std::int64_t>());
        }
        if (value.is_string()) {
          for (auto v : integers(value.get<std::string>())) from_json.push_back(v);
        }
      }
    }
    EXPECT_EQ(csv_integers(csv.out), from_json) << args[0];
  }
}

TEST(Cli, GrayWritesEmbeddingFile) {
  const auto path = temp_path("gray_2_1.emb");
  const auto r = call({"gray", "--n1", "2", "--n2", "1", "--output", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "12\n");
  EXPECT_EQ(slurp(path), "3 2 1\n1 2 4 3 8 7 5 6\n");
  const auto wl = call({"wirelength", "--input", path, "--format", "csv"});
  EXPECT_EQ(wl.code, 0);
  EXPECT_EQ(wl.out,
            "engine,n,n1,n2,wirelength\n"
            "direct,3,2,1,12\n"
            "cuts,3,2,1,12\n"
            "congestion,3,2,1,12\n");
}

TEST(Cli, ReduceReferenceFixture) {
  const auto path = temp_path("reference.emb");
  ASSERT_EQ(call({"fixtures", "embedding", "--output", path}).code, 0);
  const auto r = call({"reduce", "--input", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("base scaled sum 1504, Gray bound 1472 (met)"), std::string::npos);
  const auto seq = call({"typeseq", "--input", path, "--format", "json"});
  const auto parsed = hypercyl::Json::parse(seq.out);
  EXPECT_EQ(parsed[0]["entries"][11], 17);
  EXPECT_EQ(parsed[0]["c3"], false);
}

TEST(Cli, BruteForceWitnessIsAnEmbeddingFile) {
  const auto path = temp_path("witness.emb");
  const auto r = call({"brute-force", "embedding", "--n1", "2", "--n2", "1",
                       "--prune-symmetry", "--output", path});
  EXPECT_EQ(r.code, 0);
  const auto f = hypercyl::load_embedding_string(slurp(path));
  EXPECT_EQ(hypercyl::wirelength_direct(f), 12);
}

TEST(Cli, VerificationFailureExitsOne) {
  const auto r = call({"verify", "sequence-bound", "--n1", "4", "--n2", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("minimum 160 differs from 176"), std::string::npos);
  EXPECT_EQ(call({"verify", "sequence-bound", "--n1", "3", "--n2", "1"}).code, 0);
}

TEST(Cli, VerifySuitesPass) {
  EXPECT_EQ(call({"verify", "gray-optimum"}).code, 0);
  EXPECT_EQ(call({"verify", "identities", "--max-n", "10"}).code, 0);
  EXPECT_EQ(call({"verify", "theorem-b", "--n1", "2", "--n2", "3", "--trials", "50"}).code, 0);
  EXPECT_EQ(call({"brute-force", "theta", "4", "6"}).out, "10\n");
  EXPECT_EQ(call({"brute-force", "theta-type", "4", "2"}).out, "12\n");
}

TEST(Cli, UsageAndFormatErrorsExitTwo) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"formula", "--n1", "2"}).code, 2);
  EXPECT_EQ(call({"formula", "--n1", "2", "--n2", "1", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"wirelength", "--input", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(call({"brute-force", "embedding", "--n1", "3", "--n2", "2"}).code, 2);
  const auto bad = temp_path("bad.emb");
  std::ofstream(bad) << "3 2 1\n1 2 3 4 5 6 7 7\n";
  const auto r = call({"wirelength", "--input", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("duplicate label 7"), std::string::npos);
}
