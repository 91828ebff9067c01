// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include "support/brute.hpp"
#include "zimin/avoidance.hpp"
#include "zimin/borders.hpp"
#include "zimin/cli.hpp"
#include "zimin/core.hpp"
#include "zimin/fibonacci.hpp"
#include "zimin/oracle.hpp"
#include "zimin/pattern_search.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>

using namespace zimin;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(int id, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Runs one criterion, turning an escaped exception into a failure.
void criterion(int id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "zimin");
  std::istringstream in;
  std::ostringstream out, err;
  (void)zimin::cli::run(args, in, out, err);
  return out.str();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

int main() {
  criterion(1, [] {
    const bool type_ok = run_cli({"ztype", "adbadccccadbad"}) == "3\n";
    const bool dec_ok = run_cli({"ztype", "--decompose", "3", "adbadccccadbad"}) == "x1=ad\nx2=b\nx3=cccc\n";
    report(1, type_ok && dec_ok, "ztype adbadccccadbad = 3, decomposition ad/b/cccc");
  });

  criterion(2, [] {
    const bool yes = run_cli({"search", "--rank", "3", "ccccadbadccccadbadccccc"}).rfind("{\"found\":true", 0) == 0;
    const bool no = run_cli({"search", "--rank", "3", "aaabbaabbaa"}) == "{\"found\":false}\n";
    report(2, yes && no, "search --rank 3: found / absent");
  });

  criterion(3, [] {
    BorderTracker t;
    BorderTracker::Step s{};
    for (char c : std::string_view("aabaabcaabaabaabcaabaab")) s = t.push(c);
    report(3, s.border == 13 && s.short_border == 6,
           "B = " + std::to_string(s.border) + ", SB = " + std::to_string(s.short_border));
  });

  criterion(4, [] {
    const auto t0 = Clock::now();
    std::size_t words = 0, mismatches = 0;
    auto check = [&](const std::string& w) {
      ++words;
      if (ztype(w) != oracle::ztype_brute(w)) ++mismatches;
    };
    for (std::size_t len = 1; len <= 14; ++len) zimin::test::for_each_word(len, 2, check);
    const std::size_t binary = words;
    for (std::size_t len = 1; len <= 9; ++len) zimin::test::for_each_word(len, 3, check);
    const double secs = seconds_since(t0);
    report(4, mismatches == 0 && binary == 32766 && secs < 60,
           std::to_string(binary) + " binary + " + std::to_string(words - binary) + " ternary words, " +
               std::to_string(mismatches) + " mismatches, " + fmt(secs) + " s");
  });

  criterion(5, [] {
    constexpr std::size_t n = 10'000'000;
    std::mt19937_64 rng(zimin::test::kSeed);
    const std::string random = zimin::test::random_word(rng, n, 2);
    const std::string fib = fib_prefix(n);
    bool ok = true;
    std::string detail;
    for (const auto* w : {&random, &fib}) {
      BorderTracker t;
      t.reserve(n);
      const auto t0 = Clock::now();
      for (char c : *w) t.push(c);
      const double secs = seconds_since(t0);
      ok = ok && t.decrements() <= 2 * n && secs < 5.0;
      detail += (w == &random ? "random" : "fibonacci") + std::string(": decrements ") +
                std::to_string(t.decrements()) + ", " + fmt(secs) + " s; ";
    }
    report(5, ok, detail + "limit 2e7 decrements, 5 s");
  });

  criterion(6, [] {
    const auto t0 = Clock::now();
    const Word f = fib_prefix(10000);
    BorderTracker t;
    std::size_t mismatches = 0;
    for (std::size_t n = 1; n <= f.size(); ++n) {
      const auto s = t.push(f[n - 1]);
      if (zfib(n) != s.ztype) ++mismatches;
      if (n >= 3 && sb_fib(n) != static_cast<std::uint64_t>(s.short_border)) ++mismatches;
    }
    const double secs = seconds_since(t0);
    report(6, mismatches == 0 && secs < 60,
           "n <= 10^4: " + std::to_string(mismatches) + " mismatches, " + fmt(secs) + " s");
  });

  criterion(7, [] {
    const auto rep = zeckendorf(28);
    report(7, rep.digits() == "1001010" && psi(rep) == 3,
           "zeckendorf(28) = " + rep.digits() + ", psi = " + std::to_string(psi(rep)));
  });

  criterion(8, [] {
    const auto t0 = Clock::now();
    const std::size_t len = fib_length(12);
    const Word f = fib_prefix(len);
    std::vector<std::vector<int>> zt(len, std::vector<int>(len + 1, 0));
    for (std::size_t s = 0; s < len; ++s) {
      BorderTracker t;
      for (std::size_t e = s; e < len; ++e) zt[s][e + 1] = t.push(f[e]).ztype;
    }
    std::unordered_set<std::string> seen;
    std::size_t factors = 0, violations = 0;
    for (std::size_t e = 1; e <= len; ++e) {
      const int k = fib_embedding(e).rank;
      for (std::size_t s = 0; s < e; ++s) {
        if (!seen.insert(f.substr(s, e - s)).second) continue;
        ++factors;
        if (zt[s][e] > k) ++violations;
      }
    }
    const double secs = seconds_since(t0);
    report(8, violations == 0 && secs < 60,
           std::to_string(factors) + " distinct factors of F[1..Phi_12 = " + std::to_string(len) + "], " + std::to_string(violations) +
               " violations, " + fmt(secs) + " s");
  });

  criterion(9, [] {
    bool ok = true;
    std::string detail;
    for (int k = 2; k <= 5; ++k) {
      const auto s = f_exact(2, k);
      std::string expect;
      for (int i = 0; i < k; ++i) expect += std::string(2, static_cast<char>('a' + i));
      ok = ok && s.f_value == static_cast<std::uint64_t>(2 * k + 1) && s.witness == expect;
      detail += "f(2," + std::to_string(k) + ")=" + std::to_string(s.f_value) + " " + s.witness.value_or("") + "; ";
    }
    report(9, ok, detail);
  });

  criterion(10, [] {
    const auto e22 = enumerate_minimal(2, 2);
    const auto e23 = enumerate_minimal(2, 3);
    const bool ok = e22 == 6 && m2_formula(2) == 6 && e23 == 39 && m2_formula(3) == 39;
    report(10, ok,
           "m(2,2): enum " + std::to_string(e22) + ", formula " + std::to_string(m2_formula(2)) +
               "; m(2,3): enum " + std::to_string(e23) + ", formula " + std::to_string(m2_formula(3)));
  });

  criterion(11, [] {
    const auto t0 = Clock::now();
    const auto f32 = f_exact(3, 2);
    const auto m32 = enumerate_minimal(3, 2);
    const double secs = seconds_since(t0);
    const bool searched = f32.f_value == 29 && m32 == 7882;
    const bool bounds = f_upper_bound(4, 29, 7882) == 236489 && f_upper_bound(3, 7, 39) == 319 &&
                        f_upper_bound(3, 9, 316) == 3169 && f_upper_bound(3, 11, 3165) == 37991;
    report(11, searched && bounds,
           "f(3,2) = " + std::to_string(f32.f_value) + " (expected 29), m(3,2) = " + std::to_string(m32) +
               " (expected 7882), recursion cells " + (bounds ? "match" : "differ") + ", " + fmt(secs) + " s");
  });

  criterion(12, [] {
    const auto t0 = Clock::now();
    const std::size_t len = (std::size_t{1} << 18) - 1;
    const Word g = iterate_morphism({{'a', "abaa"}, {'b', "abab"}}, 'a', len);
    const auto types = ztype_prefixes(g);
    bool ok = true;
    for (int n = 1; n <= 18; ++n) ok = ok && types[(std::size_t{1} << n) - 1] == n;
    const double secs = seconds_since(t0);
    report(12, ok && secs < 10, "prefix of length 2^n-1 has type n for n <= 18, " + fmt(secs) + " s");
  });

  criterion(13, [] {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(zimin::test::kSeed + 13);
    std::size_t violations = 0;
    for (int i = 0; i < 100000; ++i) {
      const int k = 1 + static_cast<int>(rng() % 4);
      const auto types = ztype_prefixes(zimin::test::random_word(rng, 1 + rng() % 64, k));
      for (std::size_t j = 1; j < types.size(); ++j) {
        if (types[j] > max_sequence_value(j)) ++violations;
      }
    }
    std::size_t nonunary = 0;
    for (std::uint32_t bits = 1; bits + 1 < (1u << 16); ++bits) {
      std::string w(16, 'a');
      for (int i = 0; i < 16; ++i) w[i] = (bits >> i & 1) ? 'b' : 'a';
      const auto types = ztype_prefixes(w);
      bool same = true;
      for (std::size_t j = 1; j <= 16 && same; ++j) same = types[j] == max_sequence_value(j);
      if (same) ++nonunary;
    }
    const double secs = seconds_since(t0);
    report(13, violations == 0 && nonunary == 0 && secs < 60,
           std::to_string(violations) + " dominance violations, " + std::to_string(nonunary) +
               " non-unary extremal words, " + fmt(secs) + " s");
  });

  criterion(14, [] {
    const double hi = fib_ratio(fib_length(60));
    std::string digits = "1";
    for (int i = 0; i < 25; ++i) digits += "001";
    const double lo = fib_ratio(from_fib(digits));
    report(14, std::abs(hi - 0.5) <= 0.03 && std::abs(lo - 1.0 / 3) <= 0.03,
           "ratio(Phi_60) = " + fmt(hi) + ", ratio((1(001)^25)_Fib) = " + fmt(lo));
  });

  criterion(15, [] {
    bool ok = true;
    std::string detail;
    for (std::uint64_t n : {std::uint64_t{1'000'000'000'000'000'000}, std::uint64_t{999'999'999'999'999'989},
                            std::uint64_t{1'152'921'504'606'846'975}}) {
      QueryCost zc, ec;
      const auto t0 = Clock::now();
      const int z = zfib(n, &zc);
      const auto e = fib_embedding(n, &ec);
      const double secs = seconds_since(t0);
      const std::size_t digits = zeckendorf(n).digits().size();
      ok = ok && z >= 1 && e.rank >= 1 && zc.steps <= 4 * digits && ec.steps <= 4 * digits && secs < 1e-3;
      detail += std::to_string(digits) + " digits: " + std::to_string(zc.steps) + "/" + std::to_string(ec.steps) +
                " ops, " + fmt(secs * 1e6) + " us; ";
    }
    report(15, ok, detail);
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
