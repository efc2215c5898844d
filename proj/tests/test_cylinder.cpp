#include <gtest/gtest.h>

#include <set>

#include "hypercyl/cylinder.hpp"
#include "oracles.hpp"

using namespace hypercyl;

TEST(HostGraph, KindsAndRejections) {
  EXPECT_EQ(HostGraph(2, 1).kind(), HostKind::cylinder);
  EXPECT_EQ(HostGraph(0, 3).kind(), HostKind::path);
  EXPECT_EQ(HostGraph(3, 0).kind(), HostKind::cycle);
  EXPECT_THROW(HostGraph(1, 2), std::invalid_argument);
  EXPECT_THROW(HostGraph(0, 0), std::invalid_argument);
  EXPECT_THROW(HostGraph(-1, 2), std::invalid_argument);
}

TEST(Labelling, SpecExamples) {
  EXPECT_EQ(boustrophedon_label(HostGraph(2, 3), 1, 5), 5);
  EXPECT_EQ(boustrophedon_label(HostGraph(2, 3), 2, 1), 16);
  EXPECT_EQ(boustrophedon_label(HostGraph(3, 2), 4, 2), 15);
  EXPECT_THROW(boustrophedon_label(HostGraph(2, 1), 5, 1), std::out_of_range);

  EXPECT_EQ(label_position(HostGraph(2, 3), 1), (GridPosition{1, 1}));
  EXPECT_EQ(label_position(HostGraph(2, 3), 16), (GridPosition{2, 1}));
  EXPECT_EQ(label_position(HostGraph(3, 2), 15), (GridPosition{4, 2}));
  EXPECT_THROW(label_position(HostGraph(2, 1), 9), std::out_of_range);
}

TEST(Labelling, BijectiveAndInverse) {
  for (int n1 : {0, 2, 3, 4}) {
    for (int n2 : {0, 1, 2, 3}) {
      if (n1 + n2 == 0) continue;
      HostGraph h(n1, n2);
      std::set<Label> seen;
      for (std::int64_t i = 1; i <= h.rows(); ++i) {
        for (std::int64_t j = 1; j <= h.columns(); ++j) {
          const auto x = h.label(i, j);
          seen.insert(x);
          EXPECT_EQ(h.position(x), (GridPosition{i, j}));
        }
      }
      EXPECT_EQ(static_cast<std::int64_t>(seen.size()), h.vertex_count());
      EXPECT_EQ(*seen.begin(), 1);
      EXPECT_EQ(*seen.rbegin(), h.vertex_count());
    }
  }
}

TEST(Distance, SpecExamples) {
  HostGraph h32(3, 2);
  EXPECT_EQ(host_distance(h32, 7, 7), 0);
  EXPECT_EQ(host_distance(h32, h32.label(1, 3), h32.label(8, 3)), 1);
  HostGraph h23(2, 3);
  EXPECT_EQ(host_distance(h23, h23.label(1, 1), h23.label(3, 3)), 4);
  // Label 11 sits at (2,6) under the snake labelling: 1 + 5.
  EXPECT_EQ(h23.position(11).row, 2);
  EXPECT_EQ(h23.position(11).column, 6);
  EXPECT_EQ(host_distance(h23, 1, 11), 6);
}

TEST(Distance, EqualsBreadthFirstSearchOnExplicitGraph) {
  for (int n1 : {0, 2, 3, 4}) {
    for (int n2 : {0, 1, 2, 3}) {
      if (n1 + n2 == 0 || n1 + n2 > 7) continue;
      HostGraph h(n1, n2);
      const auto g = oracle::make_grid(n1, n2);
      for (Label x = 1; x <= h.vertex_count(); ++x) {
        const auto d = oracle::bfs(g, static_cast<int>(x));
        for (Label y = 1; y <= h.vertex_count(); ++y) {
          ASSERT_EQ(h.distance(x, y), d[static_cast<std::size_t>(y - 1)])
              << "(" << n1 << "," << n2 << ") " << x << "-" << y;
        }
      }
    }
  }
}

TEST(Edges, MatchExplicitGraphAndIdsRoundTrip) {
  for (int n1 : {0, 2, 3}) {
    for (int n2 : {0, 1, 2}) {
      if (n1 + n2 == 0) continue;
      HostGraph h(n1, n2);
      const auto g = oracle::make_grid(n1, n2);
      std::set<HostEdge> expected;
      for (std::size_t a = 0; a < g.adj.size(); ++a) {
        for (int b : g.adj[a]) expected.emplace(static_cast<Label>(a + 1), b);
      }
      const auto edges = h.edges();
      EXPECT_EQ(std::set<HostEdge>(edges.begin(), edges.end()), expected);
      EXPECT_EQ(static_cast<std::size_t>(h.edge_count()), expected.size());
      for (std::int64_t id = 0; id < h.edge_count(); ++id) {
        const auto e = h.edge(id);
        EXPECT_EQ(h.edge_id(e.a, e.b), id);
        EXPECT_EQ(h.edge_id(e.b, e.a), id);
      }
    }
  }
  EXPECT_THROW(static_cast<void>(HostGraph(2, 1).edge_id(1, 5)), std::invalid_argument);
}

TEST(Regions, SpecExamples) {
  const auto a1 = region_A(HostGraph(3, 2), 1);
  EXPECT_EQ(a1.front(), 1);
  EXPECT_EQ(a1.back(), 16);
  const auto a2 = region_A(HostGraph(3, 2), 2);
  EXPECT_EQ(a2.size(), 16U);
  EXPECT_EQ(a2.front(), 5);
  EXPECT_EQ(a2.back(), 20);
  EXPECT_EQ(region_B(HostGraph(2, 2), 1), (std::vector<Label>{1, 8, 9, 16}));
  for (std::int64_t j = 1; j <= 3; ++j) {
    EXPECT_EQ(static_cast<std::int64_t>(region_B(HostGraph(3, 2), j).size()), j * 8);
  }
  EXPECT_THROW(region_A(HostGraph(3, 2), 5), std::out_of_range);
  EXPECT_THROW(region_B(HostGraph(3, 2), 4), std::out_of_range);
}

TEST(CutPartition, SpecExamples) {
  HostGraph h21(2, 1);
  const auto cuts21 = cut_partition(h21);
  ASSERT_EQ(cuts21.size(), 3U);  // X_1, X_2, Y_1
  EXPECT_EQ(cuts21[0].edges.size(), 4U);
  EXPECT_EQ(cuts21[2].name(), "Y1");
  EXPECT_EQ(cuts21[2].edges.size(), 4U);

  HostGraph h32(3, 2);
  const auto cuts = cut_partition(h32);
  const auto& x2 = cuts[1];
  EXPECT_EQ(x2.name(), "X2");
  std::vector<HostEdge> expected;
  for (std::int64_t j = 1; j <= 4; ++j) {
    expected.emplace_back(h32.label(1, j), h32.label(2, j));
    expected.emplace_back(h32.label(5, j), h32.label(6, j));
  }
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(x2.edges, expected);

  const auto& y3 = cuts[4 + 2];
  EXPECT_EQ(y3.name(), "Y3");
  ASSERT_EQ(y3.edges.size(), 8U);
  for (const auto& e : y3.edges) {
    const auto p = h32.position(e.a);
    const auto q = h32.position(e.b);
    EXPECT_EQ(p.row, q.row);
    EXPECT_EQ(std::min(p.column, q.column), 3);
    EXPECT_EQ(std::max(p.column, q.column), 4);
  }
  EXPECT_EQ(y3.region, region_B(h32, 3));
}

TEST(CutPartition, DisjointAndCoversEveryEdge) {
  for (int n1 = 2; n1 <= 5; ++n1) {
    for (int n2 = 1; n2 <= 5; ++n2) {
      HostGraph h(n1, n2);
      std::multiset<HostEdge> used;
      for (const auto& cut : cut_partition(h)) {
        const auto expected_size = cut.family == CutFamily::cycle ? 2 * h.columns() : h.rows();
        EXPECT_EQ(static_cast<std::int64_t>(cut.edges.size()), expected_size);
        used.insert(cut.edges.begin(), cut.edges.end());
      }
      const auto edges = h.edges();
      EXPECT_EQ(used, std::multiset<HostEdge>(edges.begin(), edges.end()))
          << "(" << n1 << "," << n2 << ")";
    }
  }
}

TEST(CutPartition, EachCutSplitsHostIntoItsRegionAndComplement) {
  for (int n1 = 2; n1 <= 4; ++n1) {
    for (int n2 = 0; n2 <= 3; ++n2) {
      HostGraph h(n1, n2);
      std::vector<std::pair<std::int64_t, std::int64_t>> edges;
      for (const auto& e : h.edges()) edges.emplace_back(e.a, e.b);
      for (const auto& cut : cut_partition(h)) {
        std::set<std::pair<std::int64_t, std::int64_t>> removed;
        for (const auto& e : cut.edges) removed.emplace(e.a, e.b);
        EXPECT_EQ(oracle::components_without(static_cast<int>(h.vertex_count()), edges, removed), 2)
            << "(" << n1 << "," << n2 << ") " << cut.name();
        // Every cut edge has exactly one endpoint in the region.
        std::set<Label> region(cut.region.begin(), cut.region.end());
        for (const auto& e : cut.edges) {
          EXPECT_NE(region.count(e.a), region.count(e.b)) << cut.name();
        }
      }
    }
  }
}

TEST(CutPartition, DistanceEqualsNumberOfSeparatingCuts) {
  for (int n1 : {0, 2, 3, 4, 5}) {
    for (int n2 = 0; n2 <= 5; ++n2) {
      if (n1 + n2 < 1 || n1 + n2 > 10) continue;
      HostGraph h(n1, n2);
      const auto cuts = cut_partition(h);
      std::vector<std::vector<bool>> inside;
      for (const auto& cut : cuts) {
        std::vector<bool> in(static_cast<std::size_t>(h.vertex_count()) + 1, false);
        for (auto x : cut.region) in[static_cast<std::size_t>(x)] = true;
        inside.push_back(std::move(in));
      }
      for (Label x = 1; x <= h.vertex_count(); ++x) {
        for (Label y = x; y <= h.vertex_count(); ++y) {
          std::int64_t separating = 0;
          for (const auto& in : inside) {
            separating += in[static_cast<std::size_t>(x)] != in[static_cast<std::size_t>(y)];
          }
          ASSERT_EQ(h.distance(x, y), separating)
              << "(" << n1 << "," << n2 << ") " << x << "-" << y;
        }
      }
    }
  }
}

TEST(CutCounts, FamiliesSizes) {
  EXPECT_EQ(cycle_cut_count(HostGraph(3, 2)), 4);
  EXPECT_EQ(path_cut_count(HostGraph(3, 2)), 3);
  EXPECT_EQ(cycle_cut_count(HostGraph(0, 3)), 0);
  EXPECT_EQ(path_cut_count(HostGraph(4, 0)), 0);
}
