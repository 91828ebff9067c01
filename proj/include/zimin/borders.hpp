#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zimin {

/// Words are byte strings; symbols compare by equality only.
using Word = std::string;

/// Online border, short-border and Zimin-type arrays of a growing word.
///
/// After `size()` pushes the tracker holds, with 1-based positions j:
///   B[j]     length of the longest border of x[1..j], B[0] = -1
///   SB[j]    length of the longest border of x[1..j] shorter than j/2
///   Ztype[j] Zimin type of x[1..j], Ztype[0] = 0
///
/// Each push costs O(1) amortized. The cursor counters make that claim
/// checkable: `decrements() <= increments() <= 2 * size()`.
class BorderTracker {
 public:
  struct Step {
    std::int64_t border;
    std::int64_t short_border;
    int ztype;
  };

  /// Largest word length a tracker accepts.
  static constexpr std::size_t kMaxLength = 0x7ffffffe;

  BorderTracker();

  /// Appends `c` and returns (B, SB, Ztype) of the new prefix.
  Step push(char c);

  /// Forgets all symbols but keeps allocated storage.
  void reset() noexcept;
  void reserve(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return text_.size(); }
  [[nodiscard]] std::string_view text() const noexcept { return text_; }

  /// B[j] for 0 <= j <= size().
  [[nodiscard]] std::int64_t border(std::size_t j) const;
  /// SB[j] for 1 <= j <= size().
  [[nodiscard]] std::int64_t short_border(std::size_t j) const;
  /// Ztype[j] for 0 <= j <= size().
  [[nodiscard]] int ztype(std::size_t j) const;
  /// Ztype of the whole word consumed so far.
  [[nodiscard]] int ztype() const noexcept { return ztype_.back(); }

  /// Raw arrays indexed by position; entry 0 of the short-border array is a
  /// placeholder 0.
  [[nodiscard]] std::span<const std::int32_t> borders() const noexcept { return border_; }
  [[nodiscard]] std::span<const std::int32_t> short_borders() const noexcept { return short_border_; }
  [[nodiscard]] std::span<const std::uint8_t> ztypes() const noexcept { return ztype_; }

  /// Border cursors: the current values of t and s.
  [[nodiscard]] std::int64_t border_cursor() const noexcept { return t_; }
  [[nodiscard]] std::int64_t short_border_cursor() const noexcept { return s_; }

  /// Number of `t := t+1` / `s := s+1` steps and of `t := B[t]` / `s := B[s]`
  /// steps executed since construction or the last reset.
  [[nodiscard]] std::uint64_t increments() const noexcept { return increments_; }
  [[nodiscard]] std::uint64_t decrements() const noexcept { return decrements_; }

 private:
  std::string text_;
  std::vector<std::int32_t> border_;
  std::vector<std::int32_t> short_border_;
  std::vector<std::uint8_t> ztype_;
  std::int64_t t_ = 0;
  std::int64_t s_ = 0;
  std::uint64_t increments_ = 0;
  std::uint64_t decrements_ = 0;
};

/// Morris-Pratt border array B[0..|w|], B[0] = -1.
[[nodiscard]] std::vector<std::int64_t> border_array(std::string_view w);

/// SB[1..|w|] stored at indices 0..|w|-1.
[[nodiscard]] std::vector<std::int64_t> short_border_array(std::string_view w);

}  // namespace zimin
