#pragma once

#include <functional>
#include <vector>

#include "crowns/intervals.hpp"

namespace crowns {

using ScalarFn = std::function<double(double)>;

/// Sign-change interval: 0 < lo <= hi with f(lo)*f(hi) < 0 (or a zero-width
/// exact hit, lo == hi and f == 0).
struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;

  bool exact() const { return lo == hi; }
};

struct Root {
  double value;
  double residual;
  Bracket bracket;  // final enclosing bracket
  int iterations;
};

struct RefineOptions {
  double rel_tol = 1e-14;  // stop when bracket width < rel_tol * max(1, |value|)
  int max_iter = 200;
};

/// All sign changes of fn on a geometric grid of `steps` points over
/// [lo, hi].  Grid points inside `exclusions` are skipped and break the
/// sign chain (a sign flip across a skipped zone is not a bracket).  A grid
/// point evaluating exactly to zero yields a zero-width bracket.  Results
/// are sorted by abscissa.
std::vector<Bracket> scan_brackets(const ScalarFn& fn, double lo, double hi, int steps,
                                   const IntervalUnion& exclusions = {});

/// Brent-style refinement: inverse quadratic / secant steps safeguarded by
/// bisection, never evaluating outside the initial bracket.
Root refine(const Bracket& bracket, const ScalarFn& fn, const RefineOptions& opt = {});

/// Extends hi = start * 2^k until the sign of fn flips from f_start; used for
/// roots known to lie beyond an analytic lower bound.  Throws NotFoundError
/// past `limit`.
Bracket expand_upward(const ScalarFn& fn, double start, double limit);

/// Builds a bracket from given endpoints, verifying the sign change.
Bracket make_bracket(const ScalarFn& fn, double lo, double hi);

}  // namespace crowns
