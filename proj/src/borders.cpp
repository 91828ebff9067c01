#include "zimin/borders.hpp"

#include "zimin/error.hpp"

#include <string>

namespace zimin {

BorderTracker::BorderTracker() { reset(); }

void BorderTracker::reset() noexcept {
  text_.clear();
  border_.assign(1, -1);
  short_border_.assign(1, 0);
  ztype_.assign(1, 0);
  t_ = 0;
  s_ = 0;
  increments_ = 0;
  decrements_ = 0;
}

void BorderTracker::reserve(std::size_t n) {
  text_.reserve(n);
  border_.reserve(n + 1);
  short_border_.reserve(n + 1);
  ztype_.reserve(n + 1);
}

BorderTracker::Step BorderTracker::push(char c) {
  if (text_.size() >= kMaxLength) {
    throw CapExceeded("border tracker: word longer than " + std::to_string(kMaxLength));
  }
  text_.push_back(c);
  const auto i = static_cast<std::int64_t>(text_.size());

  if (i == 1) {
    t_ = 0;
    s_ = 0;
    border_.push_back(0);
    short_border_.push_back(0);
    ztype_.push_back(1);
    return {0, 0, 1};
  }

  // x[j] (1-based) is text_[j - 1].
  while (t_ >= 0 && text_[t_] != c) {
    t_ = border_[t_];
    ++decrements_;
  }
  ++t_;
  ++increments_;
  border_.push_back(static_cast<std::int32_t>(t_));

  // The extended border s+1 must stay strictly below i/2.
  while (s_ >= 0 && (2 * s_ + 2 >= i || text_[s_] != c)) {
    s_ = border_[s_];
    ++decrements_;
  }
  ++s_;
  ++increments_;
  short_border_.push_back(static_cast<std::int32_t>(s_));

  const int zt = ztype_[s_] + 1;
  ztype_.push_back(static_cast<std::uint8_t>(zt));
  return {t_, s_, zt};
}

std::int64_t BorderTracker::border(std::size_t j) const {
  if (j >= border_.size()) throw InvalidArgument("border: position out of range");
  return border_[j];
}

std::int64_t BorderTracker::short_border(std::size_t j) const {
  if (j == 0 || j >= short_border_.size()) {
    throw InvalidArgument("short_border: position out of range");
  }
  return short_border_[j];
}

int BorderTracker::ztype(std::size_t j) const {
  if (j >= ztype_.size()) throw InvalidArgument("ztype: position out of range");
  return ztype_[j];
}

std::vector<std::int64_t> border_array(std::string_view w) {
  std::vector<std::int64_t> b(w.size() + 1);
  b[0] = -1;
  std::int64_t t = -1;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    while (t >= 0 && w[static_cast<std::size_t>(t)] != w[i - 1]) t = b[static_cast<std::size_t>(t)];
    b[i] = ++t;
  }
  return b;
}

std::vector<std::int64_t> short_border_array(std::string_view w) {
  BorderTracker tracker;
  tracker.reserve(w.size());
  std::vector<std::int64_t> sb;
  sb.reserve(w.size());
  for (char c : w) sb.push_back(tracker.push(c).short_border);
  return sb;
}

}  // namespace zimin
