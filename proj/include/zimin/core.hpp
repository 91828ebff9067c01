#pragma once

#include "zimin/borders.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zimin {

/// Z_k = Z_{k-1} x_k Z_{k-1}, Z_1 = x_1, stored as variable indices 1..k.
struct ZiminPattern {
  int rank = 0;
  std::vector<int> symbols;

  /// "x1x2x1x3x1x2x1"
  [[nodiscard]] std::string to_string() const;
};

/// Non-erasing morphism from variables x_1..x_n to words; images[j - 1] is
/// the image of x_j.
struct Morphism {
  std::vector<Word> images;

  [[nodiscard]] int size() const noexcept { return static_cast<int>(images.size()); }
  [[nodiscard]] const Word& image(int variable) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Largest rank `zimin_word` will materialize.
inline constexpr int kMaxPatternRank = 24;

[[nodiscard]] ZiminPattern zimin_word(int k);

/// Zimin type of `w`: the largest k with w = h(Z_k), 0 for the empty word.
[[nodiscard]] int ztype(std::string_view w);

/// Ztype[0..|w|] of all prefixes in one left-to-right pass.
[[nodiscard]] std::vector<int> ztype_prefixes(std::string_view w);

/// Builds h with h(Z_k) = w by walking the short-border chain of w.
///
/// The chain w = L_0 > L_1 > ... (L_{t+1} = SB[L_t]) gives the nested borders
/// used at each level. x_1 maps to w[1..L_{k-1}] and x_j (j >= 2) maps to the
/// middle of w[1..L_{k-j}] between its two copies of w[1..L_{k-j+1}].
/// Requires 1 <= k <= ztype(w).
[[nodiscard]] Morphism decompose(std::string_view w, int k);

/// Concatenates the images of `pattern`'s variables in order.
[[nodiscard]] Word apply_morphism(std::span<const int> pattern, const Morphism& h);
[[nodiscard]] Word apply_morphism(const ZiminPattern& pattern, const Morphism& h);

/// i-th term of 1^2 2^4 3^8 ... n^(2^n) ..., the pointwise upper bound of every
/// prefix Zimin-type sequence.
[[nodiscard]] int max_sequence_value(std::uint64_t i);

/// Length-`len` prefix of the fixed point of a prolongable, non-erasing
/// morphism on letters.
[[nodiscard]] Word iterate_morphism(const std::map<char, Word>& rules, char seed, std::size_t len);

}  // namespace zimin
