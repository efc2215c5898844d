#ifndef HYPERCYL_GRAYCODE_HPP
#define HYPERCYL_GRAYCODE_HPP

// Reflected Gray code labelling of Q_n with 1-based labels 1..2^n.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hypercyl/hypercube.hpp"

namespace hypercyl {

/// Label of a vertex: prefix parities u'_i = u_1 ^ ... ^ u_i read as a
/// binary number, plus one.
inline std::int64_t gray_rank(const CubeVertex& u) {
  Word prefix = u.bits;
  for (int shift = 1; shift < u.dim; shift <<= 1) prefix ^= prefix >> shift;
  return static_cast<std::int64_t>(prefix) + 1;
}

/// Inverse of gray_rank: u_i = u'_{i-1} ^ u'_i with u'_0 = 0.
inline CubeVertex gray_unrank(int n, std::int64_t label) {
  detail::require_dimension(n);
  if (label < 1 || label > detail::pow2(n)) {
    throw std::out_of_range("Gray label " + std::to_string(label) +
                            " outside [1, 2^" + std::to_string(n) + "]");
  }
  const auto binary = static_cast<Word>(label - 1);
  return CubeVertex(binary ^ (binary >> 1), n);
}

/// G_i: preimage under gray_rank of the window {i, ..., i + 2^{n-1} - 1}.
inline VertexSubset segment_set(int n, std::int64_t i) {
  detail::require_dimension(n);
  if (n < 1) throw std::invalid_argument("segment_set needs n >= 1");
  const std::int64_t half = detail::pow2(n - 1);
  if (i < 1 || i > half) {
    throw std::out_of_range("segment index " + std::to_string(i) +
                            " outside [1, 2^{n-1}]");
  }
  VertexSubset s(n);
  for (std::int64_t label = i; label < i + half; ++label) {
    s.insert(gray_unrank(n, label).bits);
  }
  return s;
}

/// g_i^n = Type(G_i). Closed form for n >= 3: i - 1 up to 2^{n-3}, then
/// 2^{n-2} - (i - 1) up to 2^{n-2}, periodic with period 2^{n-2}.
/// The closed form presumes n >= 3, so n = 2 is computed directly.
inline std::int64_t g_value(int n, std::int64_t i) {
  detail::require_dimension(n, kMaxFormulaDimension);
  if (n < 2) throw std::invalid_argument("g_value needs n >= 2");
  if (i < 1 || i > detail::pow2(n - 1)) {
    throw std::out_of_range("g index " + std::to_string(i) +
                            " outside [1, 2^{n-1}]");
  }
  if (n == 2) return type_of(segment_set(2, i));
  const std::int64_t period = detail::pow2(n - 2);
  const std::int64_t r = (i - 1) % period + 1;
  return r <= detail::pow2(n - 3) ? r - 1 : period - (r - 1);
}

}  // namespace hypercyl

#endif  // HYPERCYL_GRAYCODE_HPP
