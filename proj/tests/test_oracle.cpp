#include "doctest.h"
#include "support/brute.hpp"
#include "zimin/core.hpp"
#include "zimin/error.hpp"
#include "zimin/oracle.hpp"
#include "zimin/pattern_search.hpp"

using namespace zimin;

TEST_CASE("ztype_brute examples") {
  CHECK(oracle::ztype_brute("adbadccccadbad") == 3);
  CHECK(oracle::ztype_brute("") == 0);
  CHECK(oracle::ztype_brute("aaaaaaa") == 3);
  CHECK_THROWS_AS((void)oracle::ztype_brute(std::string(65, 'a')), CapExceeded);
}

TEST_CASE("embeds_zimin_brute examples") {
  CHECK(oracle::embeds_zimin_brute("ccccadbadccccadbadccccc", 3));
  CHECK_FALSE(oracle::embeds_zimin_brute("aaabbaabbaa", 3));
  CHECK_FALSE(oracle::embeds_zimin_brute("", 1));
  CHECK_THROWS_AS((void)oracle::embeds_zimin_brute(std::string(41, 'a'), 1), CapExceeded);
}

TEST_CASE("pattern search by brute force") {
  const std::vector<int> z2{1, 2, 1};
  auto whole = oracle::pattern_match_brute(z2, "adbad");
  REQUIRE(whole.has_value());
  CHECK(whole->images == std::vector<Word>{"ad", "b"});
  auto inner = oracle::pattern_embeds_brute(z2, "xadbady");
  REQUIRE(inner.has_value());
  CHECK(apply_morphism(z2, inner->witness) ==
        std::string_view("xadbady").substr(inner->start - 1, inner->end - inner->start + 1));

  const std::vector<int> sq{1, 1};
  auto ab = oracle::pattern_embeds_brute(sq, "abab");
  REQUIRE(ab.has_value());
  CHECK(ab->witness.images == std::vector<Word>{"ab"});
  CHECK_FALSE(oracle::pattern_embeds_brute(sq, "abc").has_value());
  CHECK_THROWS_AS((void)oracle::pattern_embeds_brute(std::vector<int>{1, 3}, "abc"), InvalidArgument);
  CHECK_THROWS_AS((void)oracle::pattern_embeds_brute(std::vector<int>(16, 1), "abc"), CapExceeded);
}

TEST_CASE("oracle agrees with the fast path on all small binary and ternary words") {
  auto check = [](const std::string& w) { REQUIRE(ztype(w) == oracle::ztype_brute(w)); };
  zimin::test::for_each_word_upto(14, 2, check);
  zimin::test::for_each_word_upto(9, 3, check);
}

TEST_CASE("two-variable embedding criterion") {
  auto check = [](const std::string& w) {
    bool spread = false;
    for (std::size_t i = 0; i < w.size() && !spread; ++i) {
      for (std::size_t j = i + 2; j < w.size() && !spread; ++j) spread = w[i] == w[j];
    }
    REQUIRE(oracle::embeds_zimin_brute(w, 2) == spread);
  };
  zimin::test::for_each_word_upto(10, 2, check);
  zimin::test::for_each_word_upto(10, 3, check);
}

TEST_CASE("general pattern search agrees on Zimin patterns") {
  zimin::test::for_each_word_upto(12, 2, [](const std::string& w) {
    for (int k = 1; k <= 3; ++k) {
      const auto p = zimin_word(k);
      REQUIRE(oracle::pattern_embeds_brute(p.symbols, w).has_value() == oracle::embeds_zimin_brute(w, k));
    }
  });
}

TEST_CASE("oracle embedding agrees with search on ternary words") {
  zimin::test::for_each_word_upto(8, 3, [](const std::string& w) {
    for (int k = 1; k <= 3; ++k) REQUIRE(search_zimin(w, k).has_value() == oracle::embeds_zimin_brute(w, k));
  });
}
