#include "zimin/oracle.hpp"

#include "zimin/error.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace zimin::oracle {
namespace {

void check_length(std::string_view w, std::size_t cap, const char* what) {
  if (w.size() > cap) {
    throw CapExceeded(std::string(what) + ": word length " + std::to_string(w.size()) + " exceeds " +
                      std::to_string(cap));
  }
}

struct PatternShape {
  int variables = 0;
  std::vector<std::size_t> occurrences;  // occurrences[j-1] of x_j
};

PatternShape shape_of(std::span<const int> pattern) {
  if (pattern.empty()) throw InvalidArgument("pattern must be non-empty");
  if (pattern.size() > kMaxPatternLength) {
    throw CapExceeded("pattern longer than " + std::to_string(kMaxPatternLength));
  }
  PatternShape shape;
  shape.variables = *std::max_element(pattern.begin(), pattern.end());
  if (*std::min_element(pattern.begin(), pattern.end()) < 1) {
    throw InvalidArgument("pattern variables are numbered from 1");
  }
  shape.occurrences.assign(static_cast<std::size_t>(shape.variables), 0);
  for (int v : pattern) ++shape.occurrences[static_cast<std::size_t>(v - 1)];
  if (std::find(shape.occurrences.begin(), shape.occurrences.end(), 0) != shape.occurrences.end()) {
    throw InvalidArgument("pattern must use every variable x1..xm");
  }
  return shape;
}

// h(pattern) == w[start..start+L) for the image lengths `lengths`?
std::optional<Morphism> try_lengths(std::span<const int> pattern, const std::vector<std::size_t>& lengths,
                                    std::string_view w, std::size_t start) {
  Morphism h;
  h.images.resize(lengths.size());
  std::vector<bool> bound(lengths.size(), false);
  std::size_t pos = start;
  for (int v : pattern) {
    const auto j = static_cast<std::size_t>(v - 1);
    const std::string_view piece = w.substr(pos, lengths[j]);
    if (!bound[j]) {
      h.images[j] = Word(piece);
      bound[j] = true;
    } else if (h.images[j] != piece) {
      return std::nullopt;
    }
    pos += lengths[j];
  }
  return h;
}

// Calls visit(lengths, factor_length) for every image-length vector with
// sum `total`, in lexicographic order; stops when visit returns true.
bool for_each_length_vector(const PatternShape& shape, std::size_t total, std::size_t max_factor,
                            const std::function<bool(const std::vector<std::size_t>&, std::size_t)>& visit) {
  const auto m = static_cast<std::size_t>(shape.variables);
  std::vector<std::size_t> lengths(m, 1);
  std::function<bool(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t j, std::size_t left,
                                                                      std::size_t factor) -> bool {
    if (j + 1 == m) {
      lengths[j] = left;
      const std::size_t len = factor + left * shape.occurrences[j];
      return len <= max_factor && visit(lengths, len);
    }
    const std::size_t rest_vars = m - j - 1;
    for (std::size_t l = 1; l + rest_vars <= left; ++l) {
      std::size_t rest_min = 0;
      for (std::size_t r = j + 1; r < m; ++r) rest_min += shape.occurrences[r];
      if (factor + l * shape.occurrences[j] + rest_min > max_factor) break;
      lengths[j] = l;
      if (rec(j + 1, left - l, factor + l * shape.occurrences[j])) return true;
    }
    return false;
  };
  return rec(0, total, 0);
}

}  // namespace

std::vector<int> ztype_brute_prefixes(std::string_view w) {
  check_length(w, kMaxTypeLength, "ztype_brute");
  std::vector<int> type(w.size() + 1, 0);
  for (std::size_t len = 1; len <= w.size(); ++len) {
    int best = 0;
    // Every z with w[1..len] = z v z, |v| >= 1.
    for (std::size_t z = 0; 2 * z + 1 <= len; ++z) {
      if (w.substr(0, z) == w.substr(len - z, z)) best = std::max(best, 1 + type[z]);
    }
    type[len] = best;
  }
  return type;
}

int ztype_brute(std::string_view w) { return ztype_brute_prefixes(w).back(); }

bool embeds_zimin_brute(std::string_view w, int k) {
  check_length(w, kMaxEmbedLength, "embeds_zimin_brute");
  if (k < 1) throw InvalidArgument("embeds_zimin_brute: rank must be >= 1");
  for (std::size_t start = 0; start < w.size(); ++start) {
    const auto types = ztype_brute_prefixes(w.substr(start));
    if (*std::max_element(types.begin(), types.end()) >= k) return true;
  }
  return false;
}

std::optional<Morphism> pattern_match_brute(std::span<const int> pattern, std::string_view w) {
  check_length(w, kMaxPatternWordLength, "pattern_match_brute");
  const PatternShape shape = shape_of(pattern);
  std::optional<Morphism> found;
  for (std::size_t total = static_cast<std::size_t>(shape.variables); total <= w.size() && !found; ++total) {
    for_each_length_vector(shape, total, w.size(), [&](const std::vector<std::size_t>& lengths, std::size_t len) {
      if (len != w.size()) return false;
      found = try_lengths(pattern, lengths, w, 0);
      return found.has_value();
    });
  }
  return found;
}

std::optional<PatternOccurrence> pattern_embeds_brute(std::span<const int> pattern, std::string_view w) {
  check_length(w, kMaxPatternWordLength, "pattern_embeds_brute");
  const PatternShape shape = shape_of(pattern);
  std::optional<PatternOccurrence> found;
  for (std::size_t total = static_cast<std::size_t>(shape.variables); total <= w.size() && !found; ++total) {
    for_each_length_vector(shape, total, w.size(), [&](const std::vector<std::size_t>& lengths, std::size_t len) {
      for (std::size_t start = 0; start + len <= w.size(); ++start) {
        if (auto h = try_lengths(pattern, lengths, w, start)) {
          found = PatternOccurrence{start + 1, start + len, std::move(*h)};
          return true;
        }
      }
      return false;
    });
  }
  return found;
}

}  // namespace zimin::oracle
