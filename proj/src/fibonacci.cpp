#include "zimin/fibonacci.hpp"

#include "zimin/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace zimin {
namespace {

void tick(QueryCost* cost) {
  if (cost != nullptr) ++cost->steps;
}

void check_budget(std::size_t n, std::size_t budget, const char* what) {
  if (n > budget) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(n) + " symbols exceeds budget " +
                      std::to_string(budget));
  }
}

}  // namespace

std::uint64_t fib_length(int n) {
  if (n < -1 || n > kMaxFibIndex) {
    throw Overflow("fib_length: index " + std::to_string(n) + " outside [-1, " +
                   std::to_string(kMaxFibIndex) + "]");
  }
  std::uint64_t prev = 1;  // Phi_{-1}
  std::uint64_t cur = 1;   // Phi_0
  if (n == -1) return prev;
  for (int j = 0; j < n; ++j) {
    const std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

FibRep FibRep::parse(std::string_view digits) { return FibRep(std::string(digits), from_fib(digits)); }

FibRep zeckendorf(std::uint64_t n, QueryCost* cost) {
  if (n == 0) throw InvalidArgument("zeckendorf: n must be >= 1");

  // Ascend to the largest k with Phi_k <= n, holding (Phi_{k-1}, Phi_k).
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  int k = 0;
  for (;;) {
    tick(cost);
    if (hi > UINT64_MAX - lo) break;
    const std::uint64_t next = lo + hi;
    if (next > n) break;
    lo = hi;
    hi = next;
    ++k;
  }

  std::string digits;
  digits.reserve(static_cast<std::size_t>(k) + 1);
  std::uint64_t rem = n;
  for (int j = k; j >= 0; --j) {
    tick(cost);
    if (hi <= rem) {
      digits.push_back('1');
      rem -= hi;
    } else {
      digits.push_back('0');
    }
    const std::uint64_t below = hi - lo;
    hi = lo;
    lo = below;
  }
  return FibRep(std::move(digits), n);
}

std::uint64_t from_fib(std::string_view digits) {
  if (digits.empty()) throw InvalidArgument("from_fib: empty digit string");
  if (digits.front() != '1') throw InvalidArgument("from_fib: leading digit must be 1");
  if (digits.size() > static_cast<std::size_t>(kMaxFibIndex) + 1) {
    throw Overflow("from_fib: more than " + std::to_string(kMaxFibIndex + 1) + " digits");
  }
  std::uint64_t value = 0;
  std::uint64_t weight = 1;       // Phi_j
  std::uint64_t weight_prev = 1;  // Phi_{j-1}
  char last = '0';
  for (std::size_t pos = digits.size(); pos-- > 0;) {
    const char d = digits[pos];
    if (d != '0' && d != '1') throw InvalidArgument("from_fib: digits must be 0 or 1");
    if (d == '1' && last == '1') throw InvalidArgument("from_fib: adjacent 1 digits");
    if (d == '1' && __builtin_add_overflow(value, weight, &value)) {
      throw Overflow("from_fib: value exceeds 64 bits");
    }
    last = d;
    if (pos > 0) {
      const std::uint64_t next = weight + weight_prev;
      weight_prev = weight;
      weight = next;
    }
  }
  return value;
}

int psi(const FibRep& rep, QueryCost* cost) {
  const std::string& w = rep.digits();
  // w = 1 x_1 ... x_{k-1} z with x_i in {00, 001, 01} and z in {"", 0}.
  std::size_t pos = 1;
  int k = 1;
  for (;;) {
    tick(cost);
    const std::string_view rest = std::string_view(w).substr(pos);
    if (rest.empty() || rest == "0") break;
    if (rest.starts_with("01")) {
      pos += 2;
    } else if (rest.starts_with("001")) {
      pos += 3;
    } else if (rest.starts_with("00")) {
      pos += 2;
    } else {
      throw InvalidArgument("psi: digit string " + w + " has no block factorization");
    }
    ++k;
  }
  return k;
}

int zfib(std::uint64_t n, QueryCost* cost) { return psi(zeckendorf(n, cost), cost); }

std::uint64_t sb_fib(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("sb_fib: n must be >= 1");
  if (n <= 2) return 0;
  const std::string w = zeckendorf(n).digits();
  // n >= 3 gives w = 10..., at least three digits.
  std::string_view alpha;
  if (w[2] == '1') {
    alpha = std::string_view(w).substr(3);
  } else if (w.size() >= 4 && w[3] == '1') {
    alpha = std::string_view(w).substr(4);
  } else {
    alpha = std::string_view(w).substr(3);
  }
  return from_fib("1" + std::string(alpha));
}

Word fib_prefix(std::size_t len, std::size_t budget) {
  check_budget(len, budget, "fib_prefix");
  if (len <= 1) return Word(len, 'a');

  // Grow F_n = F_{n-1} F_{n-2}; F_{n-2} is a prefix of F_n.
  std::size_t final_len = 2;
  for (std::size_t a = 1, b = 2; b < len;) {
    const std::size_t next = a + b;
    a = b;
    b = next;
    final_len = b;
  }
  Word s;
  s.reserve(final_len);
  s = "ab";
  std::size_t prev_len = 1;
  while (s.size() < len) {
    const std::size_t cur_len = s.size();
    s.append(s.data(), prev_len);
    prev_len = cur_len;
  }
  s.resize(len);
  return s;
}

Word fib_word(int n, std::size_t budget) {
  if (n == -1) return "b";
  const std::uint64_t len = fib_length(n);
  check_budget(len, budget, "fib_word");
  return fib_prefix(static_cast<std::size_t>(len), budget);
}

std::vector<std::uint8_t> zfib_array(std::size_t n, std::size_t budget) {
  check_budget(n, budget, "zfib_array");
  // 1-based working array; z[0] is unused.
  std::vector<std::uint8_t> z(n + 1, 0);
  static constexpr std::uint8_t kBase[] = {0, 1, 1, 2, 2};
  for (std::size_t i = 1; i <= n && i <= 4; ++i) z[i] = kBase[i];

  // ZFib[dst + j] = ZFib[src + j] + 1 for j < len, clipped at n.
  const auto copy_increment = [&](std::uint64_t dst, std::uint64_t src, std::uint64_t len) {
    for (std::uint64_t j = 0; j < len && dst + j <= n; ++j) z[dst + j] = static_cast<std::uint8_t>(z[src + j] + 1);
  };

  // Lengths Phi_k .. Phi_{k+1}-1 split into top, middle and bottom ranges.
  for (int k = 3; k <= kMaxFibIndex && fib_length(k) <= n; ++k) {
    const std::uint64_t phi_k = fib_length(k);
    const std::uint64_t phi_2 = fib_length(k - 2);
    const std::uint64_t phi_3 = fib_length(k - 3);
    const std::uint64_t phi_4 = fib_length(k - 4);
    copy_increment(phi_k, phi_2, phi_3);
    copy_increment(phi_k + phi_3, phi_3, phi_4);
    copy_increment(phi_k + phi_2, phi_2, phi_3);
  }
  z.erase(z.begin());
  return z;
}

std::uint64_t FibEmbedding::image_length() const { return fib_length(2 * (rank - 1)); }

Morphism FibEmbedding::materialize(std::size_t budget) const {
  std::uint64_t total = 0;
  for (int idx : word_index) total += fib_length(idx);
  check_budget(static_cast<std::size_t>(total), budget, "fib_embedding images");
  Morphism h;
  for (int idx : word_index) h.images.push_back(fib_word(idx, budget));
  return h;
}

FibEmbedding fib_embedding(std::uint64_t n, QueryCost* cost) {
  if (n == 0) throw InvalidArgument("fib_embedding: n must be >= 1");
  // rank k with Phi_{2(k-1)} <= n < Phi_{2k}; walk even indices two at a time.
  // (prev, hi) = (Phi_{2k-3}, Phi_{2k-2}) for the current rank k.
  std::uint64_t prev = 1;
  std::uint64_t hi = 1;
  int rank = 1;
  for (;;) {
    tick(cost);
    // Phi_92 exceeds every 64-bit n.
    if (2 * rank > kMaxFibIndex) break;
    const std::uint64_t odd = prev + hi;
    const std::uint64_t even = hi + odd;
    if (even > n) break;
    prev = odd;
    hi = even;
    ++rank;
  }
  FibEmbedding e;
  e.rank = rank;
  e.word_index.reserve(static_cast<std::size_t>(rank));
  e.word_index.push_back(0);
  for (int j = 2; j <= rank; ++j) {
    tick(cost);
    e.word_index.push_back(2 * j - 5);
  }
  return e;
}

double fib_ratio(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("fib_ratio: n must be >= 2");
  const double log_phi = std::log(static_cast<double>(n)) / std::log(std::numbers::phi);
  return static_cast<double>(zfib(n)) / log_phi;
}

}  // namespace zimin
