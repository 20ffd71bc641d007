#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace crowns {

/// Open interval (lo, hi) on [0, +inf); hi may be +inf.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return x > lo && x < hi; }
  bool unbounded() const { return hi == std::numeric_limits<double>::infinity(); }
};

/// Finite union of disjoint open intervals on (0, inf), kept sorted.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Interval> parts);

  /// Inserts an interval, coalescing overlaps.
  void add(Interval iv);

  bool contains(double x) const;

  /// Index of the component containing x, or -1.
  int index_of(double x) const;

  /// Image of the union under x -> 1/x (maps 0 <-> inf endpoints).
  IntervalUnion reciprocal() const;

  const std::vector<Interval>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  std::string to_string() const;

 private:
  std::vector<Interval> parts_;
};

}  // namespace crowns
