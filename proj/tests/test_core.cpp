#include "doctest.h"
#include "support/brute.hpp"
#include "zimin/core.hpp"
#include "zimin/error.hpp"
#include "zimin/fibonacci.hpp"
#include "zimin/oracle.hpp"

#include <random>

using namespace zimin;

TEST_CASE("ztype examples") {
  CHECK(ztype("adbadccccadbad") == 3);
  CHECK(ztype("") == 0);
  CHECK(ztype("aabaabcaabaabaabcaabaab") == 2);
  CHECK(oracle::ztype_brute("aabaabcaabaabaabcaabaab") == 2);
}

TEST_CASE("ztype_prefixes examples") {
  CHECK(ztype_prefixes("adbadccccadbad").back() == 3);
  CHECK(ztype_prefixes("aaaaaaa") == std::vector<int>{0, 1, 1, 2, 2, 2, 2, 3});
  CHECK(ztype_prefixes("") == std::vector<int>{0});
  CHECK(ztype_prefixes("q")[1] == 1);
}

TEST_CASE("zimin_word") {
  CHECK(zimin_word(3).symbols == std::vector<int>{1, 2, 1, 3, 1, 2, 1});
  CHECK(zimin_word(1).symbols == std::vector<int>{1});
  CHECK(zimin_word(4).symbols.size() == 15);
  CHECK(zimin_word(3).to_string() == "x1x2x1x3x1x2x1");
  CHECK_THROWS_AS(zimin_word(0), InvalidArgument);
  for (int k = 1; k <= 12; ++k) {
    const auto z = zimin_word(k);
    REQUIRE(z.symbols.size() == (std::size_t{1} << k) - 1);
    for (int j = 1; j <= k; ++j) {
      REQUIRE(std::count(z.symbols.begin(), z.symbols.end(), j) == (1 << (k - j)));
    }
  }
}

TEST_CASE("decompose examples") {
  auto h = decompose("adbadccccadbad", 3);
  CHECK(h.images == std::vector<Word>{"ad", "b", "cccc"});
  CHECK(decompose("aba", 2).images == std::vector<Word>{"a", "b"});
  CHECK(decompose("adbadccccadbad", 2).images == std::vector<Word>{"adbad", "cccc"});
  CHECK_THROWS_AS(decompose("adbadccccadbad", 4), InvalidArgument);
  CHECK_THROWS_AS(decompose("ab", 0), InvalidArgument);
  CHECK_THROWS_AS(decompose("", 1), InvalidArgument);
}

TEST_CASE("apply_morphism examples") {
  CHECK(apply_morphism(zimin_word(2), Morphism{{"ad", "b"}}) == "adbad");
  CHECK(apply_morphism(zimin_word(3), Morphism{{"ad", "b", "cccc"}}) == "adbadccccadbad");
  CHECK(apply_morphism(zimin_word(1), Morphism{{"a"}}) == "a");
  CHECK_THROWS(apply_morphism(zimin_word(3), Morphism{{"a", "b"}}));
}

TEST_CASE("max_sequence_value") {
  CHECK(max_sequence_value(1) == 1);
  CHECK(max_sequence_value(2) == 1);
  CHECK(max_sequence_value(7) == 3);
  CHECK(max_sequence_value(14) == 3);
  CHECK(max_sequence_value(15) == 4);
  for (std::uint64_t i = 1; i < 5000; ++i) {
    const int n = max_sequence_value(i);
    REQUIRE((std::uint64_t{1} << n) - 1 <= i);
    REQUIRE(i <= (std::uint64_t{1} << (n + 1)) - 2);
  }
}

TEST_CASE("iterate_morphism") {
  CHECK(iterate_morphism({{'a', "abaa"}, {'b', "abab"}}, 'a', 8) == "abaaabab");
  CHECK(iterate_morphism({{'a', "ab"}, {'b', "a"}}, 'a', 5) == "abaab");
  CHECK(iterate_morphism({{'a', "aa"}}, 'a', 4) == "aaaa");
  CHECK(iterate_morphism({{'a', "ab"}, {'b', "a"}}, 'a', 1000) == fib_prefix(1000));
  CHECK_THROWS_AS(iterate_morphism({{'a', "ba"}, {'b', "a"}}, 'a', 4), InvalidArgument);
  CHECK_THROWS_AS(iterate_morphism({{'a', "a"}}, 'a', 4), InvalidArgument);
  CHECK_THROWS_AS(iterate_morphism({{'a', "ab"}, {'b', ""}}, 'a', 4), InvalidArgument);
}

TEST_CASE("ztype agrees with the oracle on random words") {
  std::mt19937_64 rng(zimin::test::kSeed + 10);
  for (int round = 0; round < 10000; ++round) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const std::string w = zimin::test::random_word(rng, rng() % 41, k);
    REQUIRE(ztype(w) == oracle::ztype_brute(w));
  }
}

TEST_CASE("decompose round trip") {
  std::mt19937_64 rng(zimin::test::kSeed + 11);
  for (int round = 0; round < 3000; ++round) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const std::string w = zimin::test::random_word(rng, 1 + rng() % 60, k);
    const int t = ztype(w);
    for (int r = 1; r <= t; ++r) {
      const Morphism h = decompose(w, r);
      REQUIRE(h.size() == r);
      for (const auto& img : h.images) REQUIRE(!img.empty());
      REQUIRE(apply_morphism(zimin_word(r), h) == w);
    }
  }
}

TEST_CASE("prefix types never exceed the maximal sequence") {
  std::mt19937_64 rng(zimin::test::kSeed + 12);
  for (int round = 0; round < 2000; ++round) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const std::string w = zimin::test::random_word(rng, rng() % 300, k);
    const auto z = ztype_prefixes(w);
    for (std::size_t j = 1; j < z.size(); ++j) REQUIRE(z[j] <= max_sequence_value(j));
  }
}

TEST_CASE("only unary words reach the maximal sequence") {
  std::vector<int> target(17);
  for (std::size_t j = 1; j <= 16; ++j) target[j] = max_sequence_value(j);
  int matches = 0;
  for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
    std::string w(16, 'a');
    for (int i = 0; i < 16; ++i) w[i] = (bits >> i & 1) ? 'b' : 'a';
    const auto z = ztype_prefixes(w);
    if (std::equal(z.begin() + 1, z.end(), target.begin() + 1)) {
      ++matches;
      REQUIRE((bits == 0 || bits == 0xffff));
    }
  }
  CHECK(matches == 2);
}

TEST_CASE("Zimin encoding prefixes") {
  const Word g = iterate_morphism({{'a', "abaa"}, {'b', "abab"}}, 'a', (1u << 14) - 1);
  for (int n = 1; n <= 14; ++n) {
    REQUIRE(ztype(std::string_view(g).substr(0, (std::size_t{1} << n) - 1)) == n);
  }
}
