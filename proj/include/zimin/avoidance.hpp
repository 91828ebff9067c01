#pragma once

#include "zimin/borders.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace zimin {

// f(n,k): least length such that every k-ary word that long has a factor of
// Zimin type >= n. m(n,k): number of k-ary minimal words of type n, counted
// over the labeled alphabet a, b, c, ...

/// Budgets for the exhaustive searches.
struct SearchLimits {
  std::size_t length_cap = 64;
  std::uint64_t node_cap = 1'000'000'000;
  /// Worker threads; the subtrees below `split_depth` are distributed.
  unsigned threads = 1;
  std::size_t split_depth = 8;
};

/// How a value was obtained.
enum class Method { exact, recursion, formula };

[[nodiscard]] const char* to_string(Method m) noexcept;

struct AvoidanceStats {
  int rank = 0;
  int alphabet = 0;
  std::uint64_t f_value = 0;
  /// false when f_value is only an upper bound.
  bool exact = true;
  Method method = Method::exact;
  std::optional<std::uint64_t> m_value;
  /// Longest avoiding word (length f_value - 1), lexicographically least.
  std::optional<Word> witness;
};

/// Full result of one exhaustive walk over the avoiding words.
struct ExploreResult {
  std::size_t longest_avoiding = 0;
  Word witness;
  std::uint64_t minimal_count = 0;
  std::size_t longest_minimal = 0;
  std::uint64_t nodes = 0;
};

/// Receives minimal words in lexicographic order.
using MinimalSink = std::function<void(std::string_view)>;

/// Depth-first walk over every word with no factor of type >= n, extending one
/// letter at a time and testing only the factors that end at the new letter.
/// Without a sink the walk covers only words whose letters first appear in
/// alphabetical order and weights each minimal word by its number of
/// relabelings; with a sink it walks all labeled words and emits each minimal
/// word. Results do not depend on `limits.threads`.
[[nodiscard]] ExploreResult explore_avoiding(int n, int k, const SearchLimits& limits = {},
                                             const MinimalSink& sink = {});

/// ztype(w) >= n while w minus its first or last letter has no factor of
/// type >= n.
[[nodiscard]] bool is_minimal(std::string_view w, int n);

/// m(n,k) by enumeration; `emit` (optional) gets every minimal word.
[[nodiscard]] std::uint64_t enumerate_minimal(int n, int k, const MinimalSink& emit = {},
                                              const SearchLimits& limits = {});

/// m(2,k) = k! * sum_{i<k} 2^(k-1-i) / i!, in exact integer arithmetic.
[[nodiscard]] std::uint64_t m2_formula(int k);

/// Exact f(n,k) by exhaustive search.
[[nodiscard]] AvoidanceStats f_exact(int n, int k, const SearchLimits& limits = {});

/// f(2,k) = 2k+1 with witness a1 a1 a2 a2 ... ak ak.
[[nodiscard]] AvoidanceStats f2_closed(int k);

/// f(n+1,k) <= (f(n,k) + 1) * m(n,k) + f(n,k).
[[nodiscard]] std::uint64_t f_upper_bound(int n_next, std::uint64_t f_prev, std::uint64_t m_prev);

/// ceil(sqrt(e) * 2^r * (r+1)! + 2r + 1), an upper bound on f(3,r).
[[nodiscard]] std::uint64_t f3_general_bound(int r);

/// Best known value for f(n,k): closed forms, exact search where feasible,
/// and the recursion on top of exact values otherwise.
[[nodiscard]] AvoidanceStats f_bound(int n, int k, const SearchLimits& limits = {});

}  // namespace zimin
