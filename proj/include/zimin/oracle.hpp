#pragma once

#include "zimin/core.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

// Brute-force reference answers, independent of the short-border recurrence.
// Exponential or high-polynomial; desk-scale inputs only.
namespace zimin::oracle {

inline constexpr std::size_t kMaxTypeLength = 64;
inline constexpr std::size_t kMaxEmbedLength = 40;
inline constexpr std::size_t kMaxPatternWordLength = 30;
inline constexpr std::size_t kMaxPatternLength = 15;

/// Zimin type by definition: 1 + max ztype(z) over every decomposition
/// w = z v z with v non-empty (z may be empty), memoized per prefix.
[[nodiscard]] int ztype_brute(std::string_view w);

/// Ztype of every prefix w[1..j], j = 0..|w|, by the same exhaustive recursion.
[[nodiscard]] std::vector<int> ztype_brute_prefixes(std::string_view w);

/// True iff some factor of w has ztype_brute >= k.
[[nodiscard]] bool embeds_zimin_brute(std::string_view w, int k);

/// h with h(pattern) == w exactly. Image-length vectors are tried in
/// non-decreasing total length, ties broken lexicographically.
[[nodiscard]] std::optional<Morphism> pattern_match_brute(std::span<const int> pattern, std::string_view w);

struct PatternOccurrence {
  std::size_t start = 0;  // 1-based
  std::size_t end = 0;
  Morphism witness;
};

/// First factor w[start..end] = h(pattern): length vectors in the order of
/// `pattern_match_brute`, then leftmost start.
[[nodiscard]] std::optional<PatternOccurrence> pattern_embeds_brute(std::span<const int> pattern,
                                                                    std::string_view w);

}  // namespace zimin::oracle
