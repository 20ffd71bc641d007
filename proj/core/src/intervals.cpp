#include "crowns/intervals.hpp"

#include <algorithm>
#include <cstdio>

#include "crowns/errors.hpp"

namespace crowns {

IntervalUnion::IntervalUnion(std::vector<Interval> parts) {
  for (const Interval& iv : parts) add(iv);
}

void IntervalUnion::add(Interval iv) {
  if (iv.lo < 0.0 || !(iv.hi > iv.lo)) {
    throw DomainError("interval must satisfy 0 <= lo < hi");
  }
  auto it = std::lower_bound(parts_.begin(), parts_.end(), iv,
                             [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  it = parts_.insert(it, iv);
  // Coalesce with neighbours that overlap or touch.
  if (it != parts_.begin()) {
    auto prev = std::prev(it);
    if (prev->hi >= it->lo) {
      prev->hi = std::max(prev->hi, it->hi);
      it = parts_.erase(it);
      it = std::prev(it);
    }
  }
  while (std::next(it) != parts_.end() && it->hi >= std::next(it)->lo) {
    it->hi = std::max(it->hi, std::next(it)->hi);
    parts_.erase(std::next(it));
  }
}

bool IntervalUnion::contains(double x) const { return index_of(x) >= 0; }

int IntervalUnion::index_of(double x) const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].contains(x)) return static_cast<int>(i);
    if (parts_[i].lo >= x) break;
  }
  return -1;
}

IntervalUnion IntervalUnion::reciprocal() const {
  const double inf = std::numeric_limits<double>::infinity();
  IntervalUnion out;
  for (const Interval& iv : parts_) {
    const double lo = iv.unbounded() ? 0.0 : 1.0 / iv.hi;
    const double hi = (iv.lo == 0.0) ? inf : 1.0 / iv.lo;
    out.add({lo, hi});
  }
  return out;
}

std::string IntervalUnion::to_string() const {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " U ";
    if (parts_[i].unbounded()) {
      std::snprintf(buf, sizeof(buf), "(%.12g, inf)", parts_[i].lo);
    } else {
      std::snprintf(buf, sizeof(buf), "(%.12g, %.12g)", parts_[i].lo, parts_[i].hi);
    }
    out += buf;
  }
  if (parts_.empty()) out = "(empty)";
  return out;
}

}  // namespace crowns
