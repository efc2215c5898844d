#ifndef HYPERCYL_FIXTURES_HPP
#define HYPERCYL_FIXTURES_HPP

// Reference embedding of Q_7 into C_32 x P_4 and its reduction table.
// The same data ships as text under data/; a test keeps the copies in sync.
//
// The raw list is 0-based and is read as the inverse map: entry x (0-based)
// is the vertex word placed at host label x + 1. Read the other way round
// (entry v as the label of vertex v) the type sequence does not match the
// reduction table; this orientation reproduces it exactly.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hypercyl/cylinder.hpp"
#include "hypercyl/embedding.hpp"
#include "hypercyl/typeseq.hpp"

namespace hypercyl::fixtures {

inline constexpr int kReferenceN1 = 5;
inline constexpr int kReferenceN2 = 2;

inline constexpr std::array<Word, 128> kReferenceRaw = {
    3,   2,   6,   7,   5,   4,   12,  13,  11,  9,   8,   24,  25,  27,  26,  30,
    31,  29,  28,  20,  21,  23,  22,  18,  19,  17,  16,  48,  49,  51,  50,  54,
    55,  53,  52,  60,  61,  63,  62,  58,  59,  57,  56,  40,  41,  43,  42,  46,
    47,  45,  44,  36,  37,  39,  38,  34,  35,  33,  32,  96,  97,  99,  98,  102,
    103, 101, 100, 108, 109, 111, 110, 106, 107, 105, 104, 120, 121, 123, 15,  14,
    10,  122, 126, 127, 125, 124, 116, 117, 119, 118, 114, 115, 113, 112, 80,  81,
    83,  82,  86,  87,  85,  84,  92,  93,  95,  94,  90,  91,  89,  88,  72,  73,
    75,  74,  78,  79,  77,  76,  68,  69,  71,  70,  66,  67,  65,  64,  0,   1};

/// Rows: s, then s^(1) .. s^(6).
inline constexpr std::array<std::array<std::int64_t, 16>, 7> kReductionTable = {{
    {5, 9, 13, 15, 13, 10, 6, 3, 5, 9, 13, 17, 14, 10, 6, 3},
    {5, 9, 13, 15, 13, 10, 6, 3, 5, 9, 13, 16, 14, 10, 6, 3},
    {4, 8, 12, 14, 12, 10, 6, 2, 4, 8, 12, 16, 14, 10, 6, 2},
    {2, 4, 6, 7, 6, 5, 3, 1, 2, 4, 6, 8, 7, 5, 3, 1},
    {2, 4, 6, 7, 6, 5, 3, 1, 2, 4, 6, 8, 8, 6, 4, 2},
    {2, 4, 6, 8, 6, 4, 2, 0, 2, 4, 6, 8, 8, 6, 4, 2},
    {1, 2, 3, 4, 3, 2, 1, 0, 1, 2, 3, 4, 4, 3, 2, 1},
}};

/// (n, n2) of each table row.
inline constexpr std::array<std::array<int, 2>, 7> kReductionLevels = {{
    {7, 2}, {7, 2}, {7, 2}, {6, 1}, {6, 1}, {6, 1}, {5, 0},
}};

inline std::vector<Word> reference_vertex_order() {
  return {kReferenceRaw.begin(), kReferenceRaw.end()};
}

inline EmbeddingMap reference_embedding() {
  return embedding_from_vertex_order(HostGraph(kReferenceN1, kReferenceN2),
                                     reference_vertex_order());
}

inline std::vector<TypeSeq> reference_reduction_rows() {
  std::vector<TypeSeq> rows;
  for (std::size_t r = 0; r < kReductionTable.size(); ++r) {
    rows.emplace_back(kReductionLevels[r][0], kReductionLevels[r][1],
                      std::vector<std::int64_t>(kReductionTable[r].begin(),
                                                kReductionTable[r].end()));
  }
  return rows;
}

}  // namespace hypercyl::fixtures

#endif  // HYPERCYL_FIXTURES_HPP
