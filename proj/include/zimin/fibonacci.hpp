#pragma once

#include "zimin/core.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <string_view>
#include <vector>

namespace zimin {

// Fibonacci words: F_{-1} = b, F_0 = a, F_n = F_{n-1} F_{n-2}; Phi_n = |F_n|.
// F_inf is the infinite word having every F_n as a prefix.

/// Largest n with Phi_n representable in 64 bits.
inline constexpr int kMaxFibIndex = 91;

/// Default cap, in symbols, on materialized Fibonacci words and arrays.
inline constexpr std::size_t kDefaultFibBudget = std::size_t{1} << 28;

/// Phi_n for -1 <= n <= kMaxFibIndex.
[[nodiscard]] std::uint64_t fib_length(int n);

/// Step counter for the logarithmic-time queries.
struct QueryCost {
  std::uint64_t steps = 0;
};

/// Zeckendorf (Fibonacci numeration) representation, most significant digit
/// first; digit j from the right weighs Phi_j.
class FibRep {
 public:
  /// Parses and validates a digit string in 1(0+1)*0* with no adjacent 1s.
  [[nodiscard]] static FibRep parse(std::string_view digits);

  [[nodiscard]] const std::string& digits() const& noexcept { return digits_; }
  [[nodiscard]] std::string digits() && noexcept { return std::move(digits_); }
  [[nodiscard]] std::uint64_t value() const noexcept { return value_; }

  friend bool operator==(const FibRep&, const FibRep&) = default;

 private:
  friend FibRep zeckendorf(std::uint64_t n, QueryCost* cost);
  FibRep(std::string digits, std::uint64_t value) : digits_(std::move(digits)), value_(value) {}

  std::string digits_;
  std::uint64_t value_ = 0;
};

/// Greedy most-significant-first conversion keeping only two Fibonacci
/// numbers live. O(log n).
[[nodiscard]] FibRep zeckendorf(std::uint64_t n, QueryCost* cost = nullptr);

/// Value of a valid Zeckendorf digit string; rejects adjacent 1s, a leading 0,
/// and values beyond 64 bits.
[[nodiscard]] std::uint64_t from_fib(std::string_view digits);

/// Number of blocks k in the factorization 1 {00,001,01}^(k-1) {"",0}.
[[nodiscard]] int psi(const FibRep& rep, QueryCost* cost = nullptr);

/// Zimin type of F_inf[1..n] as psi(n), without building the word.
[[nodiscard]] int zfib(std::uint64_t n, QueryCost* cost = nullptr);

/// |ShortBord(F_inf[1..n])| read off the representation of n:
/// 101a -> 1a, 1001a -> 1a, 100a -> 1a (a empty or starting with 0).
/// Returns 0 for n in {1, 2}.
[[nodiscard]] std::uint64_t sb_fib(std::uint64_t n);

/// F_inf[1..len].
[[nodiscard]] Word fib_prefix(std::size_t len, std::size_t budget = kDefaultFibBudget);

/// F_n for n >= -1.
[[nodiscard]] Word fib_word(int n, std::size_t budget = kDefaultFibBudget);

/// ZFib[1..n] at indices 0..n-1, built only from block copies with increment.
[[nodiscard]] std::vector<std::uint8_t> zfib_array(std::size_t n, std::size_t budget = kDefaultFibBudget);

/// Maximal Zimin embedding into F_inf[1..n]: Z_rank maps onto the prefix
/// F_{2(rank-1)} with x_1 -> a, x_j -> F_{2j-5} (j >= 2).
struct FibEmbedding {
  int rank = 0;
  /// word_index[j-1] = m such that x_j maps to F_m.
  std::vector<int> word_index;

  /// Length of the embedded image, Phi_{2(rank-1)}.
  [[nodiscard]] std::uint64_t image_length() const;
  /// Images as explicit words; throws CapExceeded past `budget` symbols.
  [[nodiscard]] Morphism materialize(std::size_t budget = kDefaultFibBudget) const;
};

/// O(log n) in time and space.
[[nodiscard]] FibEmbedding fib_embedding(std::uint64_t n, QueryCost* cost = nullptr);

/// zfib(n) / log_phi(n) for n >= 2.
[[nodiscard]] double fib_ratio(std::uint64_t n);

}  // namespace zimin
