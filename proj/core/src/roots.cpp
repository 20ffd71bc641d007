#include "crowns/roots.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "crowns/errors.hpp"

namespace crowns {

namespace {

double eval_checked(const ScalarFn& fn, double x) {
  double v;
  try {
    v = fn(x);
  } catch (const std::exception& e) {
    throw EvalError("function evaluation failed at a = " + std::to_string(x) + ": " + e.what(),
                    x);
  }
  if (std::isnan(v)) {
    throw EvalError("function evaluated to NaN at a = " + std::to_string(x), x);
  }
  return v;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

std::vector<Bracket> scan_brackets(const ScalarFn& fn, double lo, double hi, int steps,
                                   const IntervalUnion& exclusions) {
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("scan requires 0 < lo < hi");
  if (steps < 2) throw DomainError("scan requires at least 2 steps");

  const double ratio = std::log(hi / lo) / (steps - 1);
  std::vector<Bracket> out;

  bool have_prev = false;
  double xp = 0.0, fp = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double x = (i == steps - 1) ? hi : lo * std::exp(ratio * i);
    if (exclusions.contains(x)) {
      have_prev = false;  // never bracket across an excluded zone
      continue;
    }
    const double fx = eval_checked(fn, x);
    if (fx == 0.0) {
      out.push_back({x, x, 0.0, 0.0});
      have_prev = false;
      continue;
    }
    if (have_prev && sign_of(fx) != sign_of(fp)) {
      out.push_back({xp, x, fp, fx});
    }
    xp = x;
    fp = fx;
    have_prev = true;
  }
  return out;
}

Root refine(const Bracket& bracket, const ScalarFn& fn, const RefineOptions& opt) {
  if (bracket.exact()) {
    return {bracket.lo, 0.0, bracket, 0};
  }
  double a = bracket.lo, b = bracket.hi;
  double fa = bracket.f_lo, fb = bracket.f_hi;
  if (!(a < b) || sign_of(fa) * sign_of(fb) >= 0) {
    throw DomainError("refine requires a strict sign-change bracket");
  }

  double c = a, fc = fa;
  double d = b - a, e = d;
  const double eps = std::numeric_limits<double>::epsilon();

  for (int iter = 1; iter <= opt.max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * eps * std::fabs(b) +
                        0.5 * opt.rel_tol * std::max(1.0, std::fabs(b));
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) {
      Bracket fin{std::min(b, c), std::max(b, c), b < c ? fb : fc, b < c ? fc : fb};
      return {b, fb, fin, iter};
    }
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      // Inverse quadratic interpolation (secant when a == c).
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = eval_checked(fn, b);
  }
  throw ConvergenceError("bracket refinement did not converge in " +
                             std::to_string(opt.max_iter) + " iterations",
                         std::min(b, c), std::max(b, c));
}

Bracket expand_upward(const ScalarFn& fn, double start, double limit) {
  double lo = start;
  double flo = eval_checked(fn, lo);
  if (flo == 0.0) return {lo, lo, 0.0, 0.0};
  double hi = 2.0 * lo;
  while (hi <= limit) {
    const double fhi = eval_checked(fn, hi);
    if (fhi == 0.0) return {hi, hi, 0.0, 0.0};
    if (sign_of(fhi) != sign_of(flo)) return {lo, hi, flo, fhi};
    lo = hi;
    flo = fhi;
    hi *= 2.0;
  }
  throw NotFoundError("no sign change found expanding from " + std::to_string(start) +
                      " up to " + std::to_string(limit));
}

Bracket make_bracket(const ScalarFn& fn, double lo, double hi) {
  const double flo = eval_checked(fn, lo);
  const double fhi = eval_checked(fn, hi);
  if (flo == 0.0) return {lo, lo, 0.0, 0.0};
  if (fhi == 0.0) return {hi, hi, 0.0, 0.0};
  if (sign_of(flo) * sign_of(fhi) >= 0) {
    throw NotFoundError("no sign change on [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
  }
  return {lo, hi, flo, fhi};
}

}  // namespace crowns
