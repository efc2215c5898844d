#include <gtest/gtest.h>

#include <random>

#include "hypercyl/embedding.hpp"
#include "hypercyl/verify.hpp"
#include "oracles.hpp"

using namespace hypercyl;

TEST(GrayEmbedding, SpecExamples) {
  const auto f = gray_embedding(2, 1);
  EXPECT_EQ(f.label(parse_vertex("000").bits), 1);
  EXPECT_EQ(f.label(parse_vertex("010").bits), 4);
}

TEST(GrayEmbedding, RegionAPreimagesAreGraySegments) {
  for (int n1 = 2; n1 <= 5; ++n1) {
    for (int n2 = 0; n2 <= 3; ++n2) {
      const auto f = gray_embedding(n1, n2);
      for (std::int64_t i = 1; i <= cycle_cut_count(f.host()); ++i) {
        EXPECT_EQ(f.preimage(region_A(f.host(), i)),
                  segment_set(f.n(), 1 + (std::int64_t{1} << n2) * (i - 1)));
      }
    }
  }
}

TEST(GrayEmbedding, RegionBPreimagesAreCubals) {
  for (int n1 = 0; n1 <= 5; ++n1) {
    if (n1 == 1) continue;
    for (int n2 = 1; n2 <= 4; ++n2) {
      const auto f = gray_embedding(n1, n2);
      for (std::int64_t j = 1; j <= path_cut_count(f.host()); ++j) {
        EXPECT_TRUE(is_min_boundary(f.preimage(region_B(f.host(), j))))
            << "(" << n1 << "," << n2 << ") j=" << j;
      }
    }
  }
}

TEST(WirelengthDirect, SpecExamples) {
  EXPECT_EQ(wirelength_direct(gray_embedding(2, 1)), 12);
  EXPECT_EQ(wirelength_direct(gray_embedding(3, 2)), 128);
  EXPECT_EQ(wirelength_direct(lexicographic_embedding(0, 1)), 1);
}

TEST(WirelengthDirect, MatchesBreadthFirstOracle) {
  std::mt19937_64 rng(3);
  for (auto [n1, n2] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {0, 4}, {4, 0}, {3, 3}}) {
    HostGraph host(n1, n2);
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = random_embedding(host, rng);
      EXPECT_EQ(wirelength_direct(f), oracle::wirelength(n1, n2, f.labels()));
    }
    const auto g = gray_embedding(n1, n2);
    EXPECT_EQ(wirelength_direct(g), oracle::wirelength(n1, n2, g.labels()));
  }
}

TEST(WirelengthViaCuts, SpecExamples) {
  const auto w21 = wirelength_cut_terms(gray_embedding(2, 1));
  EXPECT_EQ(w21.cycle_part, 8);
  EXPECT_EQ(w21.path_part, 4);
  EXPECT_EQ(w21.total(), 12);
  const auto w32 = wirelength_cut_terms(gray_embedding(3, 2));
  EXPECT_EQ(w32.cycle_part, 80);
  EXPECT_EQ(w32.path_part, 48);
}

TEST(Engines, AgreeOnGrayLexicographicAndRandomUpToEight) {
  std::mt19937_64 rng(2024);
  for (int n1 : {0, 2, 3, 4, 5, 6}) {
    for (int n2 = 0; n2 <= 6; ++n2) {
      const int n = n1 + n2;
      if (n < 1 || n > 8) continue;
      HostGraph host(n1, n2);
      for (const auto& f : {gray_embedding(n1, n2), lexicographic_embedding(n1, n2)}) {
        EXPECT_TRUE(all_engines(f).agree()) << "(" << n1 << "," << n2 << ")";
      }
      const int trials = n <= 5 ? 1000 : 50;
      for (int t = 0; t < trials; ++t) {
        const auto e = all_engines(random_embedding(host, rng));
        ASSERT_TRUE(e.agree()) << "(" << n1 << "," << n2 << ") trial " << t;
      }
    }
  }
}

TEST(Routing, WalksAreShortestAndConnected) {
  for (auto [n1, n2] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 0}, {0, 3}, {2, 3}}) {
    HostGraph h(n1, n2);
    for (Label x = 1; x <= h.vertex_count(); ++x) {
      for (Label y = 1; y <= h.vertex_count(); ++y) {
        for (auto rule : {RoutingRule::cycle_first, RoutingRule::path_first}) {
          const auto walk = route(h, x, y, rule);
          ASSERT_EQ(static_cast<std::int64_t>(walk.size()), h.distance(x, y));
          Label at = x;
          for (auto id : walk) {
            const auto e = h.edge(id);
            ASSERT_TRUE(e.a == at || e.b == at);
            at = e.a == at ? e.b : e.a;
          }
          ASSERT_EQ(at, y);
        }
      }
    }
  }
}

TEST(Congestion, CutCongestionEqualsBoundaryOfRegionPreimage) {
  std::mt19937_64 rng(5);
  for (auto [n1, n2] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 1}, {2, 3}}) {
    HostGraph host(n1, n2);
    const auto f = random_embedding(host, rng);
    const auto load = edge_congestion(f);
    for (const auto& cut : cut_partition(host)) {
      std::int64_t sum = 0;
      for (const auto& e : cut.edges) sum += load[static_cast<std::size_t>(host.edge_id(e.a, e.b))];
      EXPECT_EQ(sum, boundary_theta(f.preimage(cut.region))) << cut.name();
    }
  }
}

TEST(Congestion, UnusedEdgeCarriesNothing) {
  // Gray maps the 4-cycle Q_2 onto C_4 edge for edge.
  const auto load = edge_congestion(gray_embedding(2, 0));
  for (auto c : load) EXPECT_EQ(c, 1);
  // Identity on P_4: 0-1 and 2-3 are single hops, 0-2 and 1-3 span two.
  const auto path = edge_congestion(lexicographic_embedding(0, 2));
  EXPECT_EQ(path, (std::vector<std::int64_t>{2, 2, 2}));
  // One route with nothing else: edges off the route stay at zero.
  HostGraph h(2, 1);
  const auto walk = route(h, 1, 2);
  std::vector<std::int64_t> single(static_cast<std::size_t>(h.edge_count()), 0);
  for (auto id : walk) ++single[static_cast<std::size_t>(id)];
  EXPECT_EQ(std::count(single.begin(), single.end(), 0), h.edge_count() - 1);
}

TEST(ClosedForm, SpecExamples) {
  EXPECT_EQ(closed_form_wirelength(2, 1), 12);
  EXPECT_EQ(closed_form_wirelength(3, 2), 128);
  for (int n = 2; n <= 20; ++n) {
    EXPECT_EQ(closed_form_wirelength(n, 0), 3 * (std::int64_t{1} << (2 * n - 3)) - (std::int64_t{1} << (n - 1)));
  }
  for (int n = 1; n <= 20; ++n) {
    EXPECT_EQ(closed_form_wirelength(0, n), (std::int64_t{1} << (2 * n - 1)) - (std::int64_t{1} << (n - 1)));
  }
  EXPECT_THROW(closed_form_wirelength(0, 0), std::invalid_argument);
}

TEST(ClosedForm, GrayAttainsItOnEverySweepHost) {
  for (const auto& row : verify_gray_optimum(6, 6, 12)) {
    EXPECT_TRUE(row.matches()) << "(" << row.n1 << "," << row.n2 << ")";
  }
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(wirelength_direct(gray_embedding(n, 0)), closed_form_wirelength(n, 0));
    EXPECT_EQ(wirelength_direct(gray_embedding(0, n)), closed_form_wirelength(0, n));
  }
}

TEST(EmbeddingMap, RejectsNonBijections) {
  HostGraph h(2, 1);
  EXPECT_THROW(EmbeddingMap(h, {1, 2, 3}), FormatError);
  EXPECT_THROW(EmbeddingMap(h, {1, 2, 3, 4, 5, 6, 7, 7}), FormatError);
  EXPECT_THROW(EmbeddingMap(h, {1, 2, 3, 4, 5, 6, 7, 9}), FormatError);
  const auto f = gray_embedding(2, 1);
  for (Label x = 1; x <= 8; ++x) EXPECT_EQ(f.label(f.vertex(x)), x);
}

TEST(EmbeddingFile, GrayRoundTrip) {
  const auto f = gray_embedding(2, 1);
  const auto text = save_embedding_string(f);
  EXPECT_EQ(text, "3 2 1\n1 2 4 3 8 7 5 6\n");
  EXPECT_EQ(load_embedding_string(text), f);
  const auto big = gray_embedding(4, 3);
  EXPECT_EQ(load_embedding_string(save_embedding_string(big)), big);
}

TEST(EmbeddingFile, CommentsAndZeroBasedShift) {
  const auto f = load_embedding_string("# comment\n3 2 1\n# another\n0 1 3 2\n7 6 4 5\n");
  EXPECT_EQ(f, gray_embedding(2, 1));
  // 1..2^n with 0 absent is left alone.
  EXPECT_EQ(load_embedding_string("2 2 0\n1 2 4 3\n"), gray_embedding(2, 0));
}

TEST(EmbeddingFile, Diagnostics) {
  auto message = [](const std::string& text) {
    try {
      load_embedding_string(text);
    } catch (const FormatError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("3 2 1\n1 2 3 4 5 6 7 7\n").find("duplicate label 7"), std::string::npos);
  EXPECT_NE(message("3 2 1\n1 2 3 4 5 6 7\n").find("expected 8 labels"), std::string::npos);
  EXPECT_NE(message("3 2 1\n1 2 3 4 5 6 7 99\n").find("out of range"), std::string::npos);
  EXPECT_NE(message("3 2\n1 2 3 4 5 6 7 8\n").find("header"), std::string::npos);
  EXPECT_NE(message("4 2 1\n1 2 3 4 5 6 7 8\n").find("header"), std::string::npos);
  EXPECT_NE(message("3 2 1\n1 2 x 4 5 6 7 8\n").find("malformed"), std::string::npos);
  EXPECT_NE(message("3 1 2\n1 2 3 4 5 6 7 8\n").find("invalid host"), std::string::npos);
  EXPECT_NE(message("").find("empty"), std::string::npos);
}
