#pragma once

#include "zimin/core.hpp"

#include <cstddef>
#include <optional>
#include <string_view>

namespace zimin {

/// A factor w[start..end] (1-based, inclusive) that is h(Z_rank).
struct Occurrence {
  std::size_t start = 0;
  std::size_t end = 0;
  int rank = 0;
  Morphism witness;
};

/// Finds a factor of Zimin type >= k, scanning suffixes left to right with the
/// online tracker: O(|w|^2) time, O(|w|) space. The result has the smallest
/// start and, for that start, the smallest end.
[[nodiscard]] std::optional<Occurrence> search_zimin(std::string_view w, int k);

struct MaxFactor {
  int rank = 0;
  std::optional<Occurrence> occurrence;
};

/// Largest Zimin type over all factors of `w`, with the first witness in
/// (start, end) order.
[[nodiscard]] MaxFactor max_factor_ztype(std::string_view w);

}  // namespace zimin
