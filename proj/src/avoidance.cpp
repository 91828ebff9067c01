#include "zimin/avoidance.hpp"

#include "zimin/core.hpp"
#include "zimin/error.hpp"
#include "zimin/pattern_search.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace zimin {
namespace {

inline constexpr int kMaxAlphabet = 26;

void check_rank_alphabet(int n, int k) {
  if (n < 1) throw InvalidArgument("rank must be >= 1");
  if (k < 1 || k > kMaxAlphabet) {
    throw InvalidArgument("alphabet size must be in [1, " + std::to_string(kMaxAlphabet) + "]");
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow(std::string(what) + ": exceeds 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow(std::string(what) + ": exceeds 64 bits");
  return r;
}

// One online border tracker per start position of the current word, stored
// row-wise so that popping a letter needs no undo: row p holds B, SB and
// Ztype of the prefixes of w[p..].
class SuffixScanner {
 public:
  struct Outcome {
    bool whole;   // the word itself reaches the rank
    bool proper;  // some proper suffix does
  };

  explicit SuffixScanner(std::size_t max_len)
      : stride_(max_len + 1),
        border_(stride_ * max_len),
        short_border_(stride_ * max_len),
        ztype_(stride_ * max_len) {
    word_.reserve(max_len);
  }

  Outcome push(char c, int rank) {
    const std::size_t d = word_.size();
    word_.push_back(c);
    Outcome out{false, false};
    for (std::size_t p = 0; p <= d; ++p) {
      const auto i = static_cast<std::int32_t>(d - p + 1);
      std::int16_t* b = &border_[p * stride_];
      std::int16_t* sb = &short_border_[p * stride_];
      std::uint8_t* z = &ztype_[p * stride_];
      const char* x = word_.data() + p;
      int zt = 1;
      if (i == 1) {
        b[0] = -1;
        b[1] = 0;
        sb[1] = 0;
        z[0] = 0;
        z[1] = 1;
      } else {
        std::int32_t t = b[i - 1];
        while (t >= 0 && x[t] != c) t = b[t];
        b[i] = static_cast<std::int16_t>(t + 1);
        std::int32_t s = sb[i - 1];
        while (s >= 0 && (2 * s + 2 >= i || x[s] != c)) s = b[s];
        ++s;
        sb[i] = static_cast<std::int16_t>(s);
        zt = z[s] + 1;
        z[i] = static_cast<std::uint8_t>(zt);
      }
      if (zt >= rank) {
        if (p == 0) {
          out.whole = true;
        } else {
          out.proper = true;
        }
      }
    }
    return out;
  }

  void pop() { word_.pop_back(); }
  [[nodiscard]] const std::string& word() const noexcept { return word_; }

 private:
  std::size_t stride_;
  std::vector<std::int16_t> border_;
  std::vector<std::int16_t> short_border_;
  std::vector<std::uint8_t> ztype_;
  std::string word_;
};

// k! / (k - d)!: injective relabelings of d letters into a k-letter alphabet.
std::uint64_t relabelings(int k, int d) {
  std::uint64_t r = 1;
  for (int j = 0; j < d; ++j) r = checked_mul(r, static_cast<std::uint64_t>(k - j), "minimal word count");
  return r;
}

struct Partial {
  std::uint64_t minimal = 0;
  std::size_t longest = 0;
  Word witness;
  std::size_t longest_minimal = 0;
  std::vector<Word> emitted;
};

// Marks either a minimal word found above the split depth or a subtree task.
using Event = std::variant<Word, std::size_t>;

class Explorer {
 public:
  Explorer(int rank, int alphabet, const SearchLimits& limits, bool labeled, std::atomic<std::uint64_t>& nodes)
      : rank_(rank), alphabet_(alphabet), limits_(limits), labeled_(labeled), nodes_(nodes) {}

  // Walks the subtree below the scanner's current (avoiding) word. Nodes at
  // `split` are handed to `tasks` instead of being expanded.
  void walk(SuffixScanner& scanner, Partial& acc, int distinct, const MinimalSink* sink,
            std::size_t split = SIZE_MAX, std::vector<Event>* events = nullptr,
            std::vector<std::pair<Word, int>>* tasks = nullptr) {
    const std::string& w = scanner.word();
    if (w.size() > acc.longest) {
      acc.longest = w.size();
      acc.witness = w;
    }
    if (w.size() == split) {
      events->emplace_back(tasks->size());
      tasks->emplace_back(w, distinct);
      return;
    }
    if (w.size() >= limits_.length_cap) {
      throw CapExceeded("avoidance search: length cap " + std::to_string(limits_.length_cap) +
                        " reached without exhausting the avoiding words");
    }
    const int letters = labeled_ ? alphabet_ : std::min(alphabet_, distinct + 1);
    for (int c = 0; c < letters; ++c) {
      if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > limits_.node_cap) {
        throw CapExceeded("avoidance search: node cap " + std::to_string(limits_.node_cap) + " exceeded");
      }
      const char letter = static_cast<char>('a' + c);
      const int next_distinct = labeled_ ? distinct : std::max(distinct, c + 1);
      const auto outcome = scanner.push(letter, rank_);
      if (!outcome.whole && !outcome.proper) {
        walk(scanner, acc, next_distinct, sink, split, events, tasks);
      } else if (outcome.whole && !outcome.proper) {
        record_minimal(scanner.word(), next_distinct, acc, sink, events);
      }
      scanner.pop();
    }
  }

 private:
  void record_minimal(const std::string& w, int distinct, Partial& acc, const MinimalSink* sink,
                      std::vector<Event>* events) {
    const std::uint64_t weight = labeled_ ? 1 : relabelings(alphabet_, distinct);
    acc.minimal = checked_add(acc.minimal, weight, "minimal word count");
    acc.longest_minimal = std::max(acc.longest_minimal, w.size());
    if (sink == nullptr) return;
    if (events != nullptr) {
      events->emplace_back(w);
    } else if (*sink) {
      (*sink)(w);
    } else {
      acc.emitted.push_back(w);
    }
  }

  int rank_;
  int alphabet_;
  const SearchLimits& limits_;
  bool labeled_;
  std::atomic<std::uint64_t>& nodes_;
};

}  // namespace

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::exact:
      return "exact";
    case Method::recursion:
      return "recursion";
    case Method::formula:
      return "formula";
  }
  return "unknown";
}

ExploreResult explore_avoiding(int n, int k, const SearchLimits& limits, const MinimalSink& sink) {
  check_rank_alphabet(n, k);
  if (limits.length_cap == 0 || limits.length_cap > 120) {
    throw InvalidArgument("length cap must be in [1, 120]");
  }
  const bool labeled = static_cast<bool>(sink);
  std::atomic<std::uint64_t> nodes{0};
  Explorer explorer(n, k, limits, labeled, nodes);
  const MinimalSink* sink_ptr = labeled ? &sink : nullptr;
  const std::size_t cap = limits.length_cap + 1;

  ExploreResult result;
  Partial root;
  if (limits.threads <= 1) {
    SuffixScanner scanner(cap);
    explorer.walk(scanner, root, 0, sink_ptr);
  } else {
    std::vector<Event> events;
    std::vector<std::pair<Word, int>> tasks;
    {
      SuffixScanner scanner(cap);
      explorer.walk(scanner, root, 0, sink_ptr, std::max<std::size_t>(limits.split_depth, 1), &events, &tasks);
    }

    // Subtree results are buffered (emitted words go to Partial::emitted).
    const MinimalSink buffer_only;
    const MinimalSink* task_sink = labeled ? &buffer_only : nullptr;
    std::vector<Partial> partials(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
      SuffixScanner scanner(cap);
      for (;;) {
        const std::size_t t = next.fetch_add(1);
        if (t >= tasks.size()) return;
        try {
          for (char c : tasks[t].first) scanner.push(c, n);
          explorer.walk(scanner, partials[t], tasks[t].second, task_sink);
          for (std::size_t j = 0; j < tasks[t].first.size(); ++j) scanner.pop();
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(tasks.size());
          return;
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      for (unsigned j = 0; j < limits.threads; ++j) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    // Merge in lexicographic (task) order.
    for (const Partial& part : partials) {
      root.minimal = checked_add(root.minimal, part.minimal, "minimal word count");
      root.longest_minimal = std::max(root.longest_minimal, part.longest_minimal);
      if (part.longest > root.longest) {
        root.longest = part.longest;
        root.witness = part.witness;
      }
    }
    if (labeled) {
      for (const Event& ev : events) {
        if (const auto* word = std::get_if<Word>(&ev)) {
          sink(*word);
        } else {
          for (const Word& w : partials[std::get<std::size_t>(ev)].emitted) sink(w);
        }
      }
    }
  }

  result.longest_avoiding = root.longest;
  result.witness = std::move(root.witness);
  result.minimal_count = root.minimal;
  result.longest_minimal = root.longest_minimal;
  result.nodes = nodes.load();
  return result;
}

bool is_minimal(std::string_view w, int n) {
  if (n < 1) throw InvalidArgument("is_minimal: rank must be >= 1");
  if (w.empty() || ztype(w) < n) return false;
  return max_factor_ztype(w.substr(0, w.size() - 1)).rank < n && max_factor_ztype(w.substr(1)).rank < n;
}

std::uint64_t enumerate_minimal(int n, int k, const MinimalSink& emit, const SearchLimits& limits) {
  return explore_avoiding(n, k, limits, emit).minimal_count;
}

std::uint64_t m2_formula(int k) {
  if (k < 1) throw InvalidArgument("m2_formula: alphabet size must be >= 1");
  // Term i is (k!/i!) * 2^(k-1-i).
  std::uint64_t sum = 0;
  for (int i = 0; i < k; ++i) {
    std::uint64_t falling = 1;
    for (int j = i + 1; j <= k; ++j) falling = checked_mul(falling, static_cast<std::uint64_t>(j), "m2_formula");
    if (k - 1 - i >= 64) throw Overflow("m2_formula: exceeds 64 bits");
    const std::uint64_t term = checked_mul(falling, std::uint64_t{1} << (k - 1 - i), "m2_formula");
    sum = checked_add(sum, term, "m2_formula");
  }
  return sum;
}

AvoidanceStats f_exact(int n, int k, const SearchLimits& limits) {
  const ExploreResult r = explore_avoiding(n, k, limits);
  AvoidanceStats s;
  s.rank = n;
  s.alphabet = k;
  s.f_value = r.longest_avoiding + 1;
  s.exact = true;
  s.method = Method::exact;
  s.m_value = r.minimal_count;
  s.witness = r.witness;
  return s;
}

AvoidanceStats f2_closed(int k) {
  check_rank_alphabet(2, k);
  AvoidanceStats s;
  s.rank = 2;
  s.alphabet = k;
  s.f_value = 2 * static_cast<std::uint64_t>(k) + 1;
  s.exact = true;
  s.method = Method::formula;
  s.m_value = m2_formula(k);
  Word w;
  for (int j = 0; j < k; ++j) w.append(2, static_cast<char>('a' + j));
  s.witness = std::move(w);
  return s;
}

std::uint64_t f_upper_bound(int n_next, std::uint64_t f_prev, std::uint64_t m_prev) {
  if (n_next < 3) throw InvalidArgument("f_upper_bound: the recursion starts at rank 3");
  if (f_prev == 0 || m_prev == 0) throw InvalidArgument("f_upper_bound: inputs must be positive");
  const std::uint64_t blocks = checked_mul(checked_add(f_prev, 1, "f_upper_bound"), m_prev, "f_upper_bound");
  return checked_add(blocks, f_prev, "f_upper_bound");
}

std::uint64_t f3_general_bound(int r) {
  if (r < 2) throw InvalidArgument("f3_general_bound: r must be >= 2");
  if (r > 62) throw Overflow("f3_general_bound: exceeds 64 bits");
  using boost::multiprecision::cpp_int;
  using Real = boost::multiprecision::cpp_bin_float_100;

  cpp_int scale = cpp_int(1) << r;  // 2^r (r+1)!
  for (int j = 2; j <= r + 1; ++j) scale *= j;
  const Real product = sqrt(exp(Real(1))) * Real(scale);
  // sqrt(e) is irrational, so the product is never an integer.
  const cpp_int ceiling = static_cast<cpp_int>(floor(product)) + 1 + 2 * r + 1;
  if (ceiling > cpp_int(UINT64_MAX)) throw Overflow("f3_general_bound: exceeds 64 bits");
  return static_cast<std::uint64_t>(ceiling);
}

AvoidanceStats f_bound(int n, int k, const SearchLimits& limits) {
  check_rank_alphabet(n, k);
  AvoidanceStats s;
  s.rank = n;
  s.alphabet = k;
  if (n == 1) {
    s.f_value = 1;
    s.method = Method::formula;
    s.m_value = static_cast<std::uint64_t>(k);
    s.witness = Word();
    return s;
  }
  if (n == 2) return f2_closed(k);
  if (k == 1) {
    // a^(2^n - 2) is the longest unary word of type < n.
    if (n > 63) throw Overflow("f_bound: exceeds 64 bits");
    s.f_value = (std::uint64_t{1} << n) - 1;
    s.method = Method::formula;
    s.m_value = 1;
    if (n <= 20) s.witness = Word(static_cast<std::size_t>(s.f_value - 1), 'a');
    return s;
  }
  if (n == 3 && k == 2) return f_exact(3, 2, limits);
  if (n == 3) {
    s.f_value = f_upper_bound(3, 2 * static_cast<std::uint64_t>(k) + 1, m2_formula(k));
    s.exact = false;
    s.method = Method::recursion;
    return s;
  }
  if (n == 4 && k == 2) {
    const AvoidanceStats prev = f_exact(3, 2, limits);
    s.f_value = f_upper_bound(4, prev.f_value, *prev.m_value);
    s.exact = false;
    s.method = Method::recursion;
    return s;
  }
  throw InvalidArgument("no bound is known for f(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

}  // namespace zimin
