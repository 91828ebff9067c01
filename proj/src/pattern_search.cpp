#include "zimin/pattern_search.hpp"

#include "zimin/error.hpp"

#include <cstdint>

namespace zimin {
namespace {

// Shortest word of Zimin type k has length 2^k - 1.
std::size_t min_length_for_rank(int k) {
  if (k >= 63) return SIZE_MAX;
  return (std::size_t{1} << k) - 1;
}

Occurrence make_occurrence(std::string_view w, std::size_t start, std::size_t end, int rank) {
  return Occurrence{start, end, rank, decompose(w.substr(start - 1, end - start + 1), rank)};
}

}  // namespace

std::optional<Occurrence> search_zimin(std::string_view w, int k) {
  if (k < 1) throw InvalidArgument("search_zimin: rank must be >= 1");
  const std::size_t need = min_length_for_rank(k);
  if (w.size() < need) return std::nullopt;

  BorderTracker tracker;
  tracker.reserve(w.size());
  for (std::size_t start = 0; start + need <= w.size(); ++start) {
    tracker.reset();
    for (std::size_t pos = start; pos < w.size(); ++pos) {
      if (tracker.push(w[pos]).ztype >= k) return make_occurrence(w, start + 1, pos + 1, k);
    }
  }
  return std::nullopt;
}

MaxFactor max_factor_ztype(std::string_view w) {
  MaxFactor best;
  std::size_t best_start = 0;
  std::size_t best_end = 0;

  BorderTracker tracker;
  tracker.reserve(w.size());
  for (std::size_t start = 0; start < w.size(); ++start) {
    // A suffix shorter than 2^(best+1) - 1 cannot beat the current maximum.
    if (w.size() - start < min_length_for_rank(best.rank + 1)) break;
    tracker.reset();
    for (std::size_t pos = start; pos < w.size(); ++pos) {
      const int zt = tracker.push(w[pos]).ztype;
      if (zt > best.rank) {
        best.rank = zt;
        best_start = start + 1;
        best_end = pos + 1;
      }
    }
  }
  if (best.rank > 0) best.occurrence = make_occurrence(w, best_start, best_end, best.rank);
  return best;
}

}  // namespace zimin
