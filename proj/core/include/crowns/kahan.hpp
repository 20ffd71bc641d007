#pragma once

namespace crowns {

/// Kahan-compensated accumulator.  Terms of the ring sums span many orders of
/// magnitude near a = 1 for large n; plain summation loses the digits the
/// root refinements need.
struct KahanSum {
  double sum = 0.0;
  double c = 0.0;

  void add(double value) {
    const double y = value - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }

  double value() const { return sum; }
};

}  // namespace crowns
