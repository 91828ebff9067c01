#include "zimin/core.hpp"

#include "zimin/error.hpp"

#include <bit>
#include <string>

namespace zimin {

std::string ZiminPattern::to_string() const {
  std::string out;
  for (int v : symbols) out += "x" + std::to_string(v);
  return out;
}

const Word& Morphism::image(int variable) const {
  if (variable < 1 || variable > size()) {
    throw InvalidArgument("morphism has no image for x" + std::to_string(variable));
  }
  return images[static_cast<std::size_t>(variable - 1)];
}

ZiminPattern zimin_word(int k) {
  if (k < 1) throw InvalidArgument("zimin_word: rank must be >= 1");
  if (k > kMaxPatternRank) {
    throw CapExceeded("zimin_word: rank " + std::to_string(k) + " exceeds cap " +
                      std::to_string(kMaxPatternRank));
  }
  ZiminPattern p;
  p.rank = k;
  p.symbols.reserve((std::size_t{1} << k) - 1);
  p.symbols.push_back(1);
  for (int j = 2; j <= k; ++j) {
    const auto half = p.symbols.size();
    p.symbols.push_back(j);
    p.symbols.insert(p.symbols.end(), p.symbols.begin(), p.symbols.begin() + static_cast<std::ptrdiff_t>(half));
  }
  return p;
}

int ztype(std::string_view w) {
  if (w.empty()) return 0;
  BorderTracker tracker;
  tracker.reserve(w.size());
  for (char c : w) tracker.push(c);
  return tracker.ztype();
}

std::vector<int> ztype_prefixes(std::string_view w) {
  BorderTracker tracker;
  tracker.reserve(w.size());
  std::vector<int> out;
  out.reserve(w.size() + 1);
  out.push_back(0);
  for (char c : w) out.push_back(tracker.push(c).ztype);
  return out;
}

Morphism decompose(std::string_view w, int k) {
  if (w.empty()) throw InvalidArgument("decompose: empty word has Zimin type 0");
  if (k < 1) throw InvalidArgument("decompose: rank must be >= 1");

  BorderTracker tracker;
  tracker.reserve(w.size());
  for (char c : w) tracker.push(c);
  if (k > tracker.ztype()) {
    throw InvalidArgument("decompose: rank " + std::to_string(k) + " exceeds Zimin type " +
                          std::to_string(tracker.ztype()));
  }

  // chain[t] = L_t; L_{k-1} > 0 because ztype(w) >= k.
  std::vector<std::size_t> chain{w.size()};
  for (int t = 1; t < k; ++t) {
    chain.push_back(static_cast<std::size_t>(tracker.short_border(chain.back())));
  }

  Morphism h;
  h.images.resize(static_cast<std::size_t>(k));
  h.images[0] = Word(w.substr(0, chain[static_cast<std::size_t>(k - 1)]));
  for (int j = 2; j <= k; ++j) {
    const std::size_t outer = chain[static_cast<std::size_t>(k - j)];
    const std::size_t inner = chain[static_cast<std::size_t>(k - j + 1)];
    h.images[static_cast<std::size_t>(j - 1)] = Word(w.substr(inner, outer - 2 * inner));
  }
  return h;
}

Word apply_morphism(std::span<const int> pattern, const Morphism& h) {
  Word out;
  for (int v : pattern) {
    const Word& img = h.image(v);
    if (img.empty()) throw InvalidArgument("apply_morphism: erasing image for x" + std::to_string(v));
    out += img;
  }
  return out;
}

Word apply_morphism(const ZiminPattern& pattern, const Morphism& h) {
  return apply_morphism(std::span<const int>(pattern.symbols), h);
}

int max_sequence_value(std::uint64_t i) {
  if (i == 0) throw InvalidArgument("max_sequence_value: index must be >= 1");
  // n with 2^n - 1 <= i <= 2^(n+1) - 2, i.e. n = floor(log2(i + 1)).
  if (i == UINT64_MAX) return 64;
  return static_cast<int>(std::bit_width(i + 1)) - 1;
}

Word iterate_morphism(const std::map<char, Word>& rules, char seed, std::size_t len) {
  if (len == 0) throw InvalidArgument("iterate_morphism: length must be >= 1");
  for (const auto& [letter, image] : rules) {
    if (image.empty()) {
      throw InvalidArgument(std::string("iterate_morphism: erasing rule for '") + letter + "'");
    }
  }
  const auto seed_rule = rules.find(seed);
  if (seed_rule == rules.end() || seed_rule->second.size() < 2 || seed_rule->second.front() != seed) {
    throw InvalidArgument("iterate_morphism: rules are not prolongable on the seed");
  }

  // The fixed point g satisfies g = h(g[0]) h(g[1]) ...
  Word out = seed_rule->second;
  for (std::size_t pos = 1; out.size() < len; ++pos) {
    const auto rule = rules.find(out[pos]);
    if (rule == rules.end()) {
      throw InvalidArgument(std::string("iterate_morphism: no rule for '") + out[pos] + "'");
    }
    out += rule->second;
  }
  out.resize(len);
  return out;
}

}  // namespace zimin
