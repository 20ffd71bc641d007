#pragma once

#include <string>
#include <vector>

#include "crowns/intervals.hpp"

namespace crowns {

struct AnalysisOptions {
  double refine_tol = 1e-14;  // relative bracket-width target for refinements
  int scan_steps = 40001;     // global sign-change scan resolution
  double scan_lo = 1e-4;      // log-symmetric scan window (guards both tails
  double scan_hi = 1e4;       //   under the a -> 1/a symmetry)
  int solve_steps = 3001;     // per-interval scan resolution for H(a) = m
  bool verify_conjecture = true;

  bool operator==(const AnalysisOptions&) const = default;
};

/// The two positive zeros of F, 0 < z1 < 1 < z2.  `conjecture_verified`
/// records that the global scan found exactly two sign changes; if it finds
/// more, the query fails loudly instead (everything downstream assumes two).
/// For n = 2 the pair (1/sqrt(3), sqrt(3)) is returned in closed form and
/// flagged `analytic`.
struct ZeroPair {
  int n;
  double z1;
  double z2;
  bool conjecture_verified;
  bool analytic;
};

ZeroPair zeros_of_f(int n, const AnalysisOptions& opt = {});

/// Admissible radii (H > 0): one interval for n = 2, three components
/// otherwise.
IntervalUnion admissible_set(int n, const AnalysisOptions& opt = {});

/// The admissible component containing a = 1.
Interval central_admissible_interval(int n, const AnalysisOptions& opt = {});

struct Solution {
  double a;
  std::string interval_label;  // "inner" | "central" | "outer"
  bool convex;
  double residual;  // relative gradient residual from the verification oracle
};

struct SolutionSet {
  int n;
  double mass_ratio;
  std::vector<Solution> solutions;  // sorted ascending in a
  int count_deduplicated;           // a <-> 1/a identified when m = 1
  bool conjecture_verified;
};

/// Every radius a > 0 with H(a) = m.  Queries with m < 1 are reduced to 1/m
/// and mapped back through a -> 1/a.  Each solution is validated against the
/// brute-force gradient oracle; the residual is stored.
SolutionSet solve_for_mass(int n, double m, const AnalysisOptions& opt = {});

struct CountResult {
  int count;
  std::string clause;
  bool boundary;  // m within 1e-9 of 1, m*, or m** (n = 3)
};

/// Number of distinct crowns for mass ratio m, plus the applicable regime.
CountResult count_configurations(int n, double m, const AnalysisOptions& opt = {});

/// n = 3 critical-point data: H has exactly one critical point in (1, z2)
/// (local max, mass m*) and one in (1/z1, inf) (local min, mass m**).
struct BifurcationData {
  double a_star;
  double a_star_star;
  double m_star;
  double m_star_star;
};

BifurcationData bifurcation_n3(const AnalysisOptions& opt = {});

/// The radius a1 > 1 with H(a1) = 1 (a != 1), i.e. the root of g1 = g2.
/// Unique for n even (asserted by scan).  n >= 4.
double equal_mass_radius(int n, const AnalysisOptions& opt = {});

/// Radii for which the 2n bodies form a convex polygon:
/// (cos(pi/n), 1/cos(pi/n)).  n >= 3.
Interval convexity_window(int n);
bool is_convex(int n, double a);

struct ConvexityReport {
  SolutionSet solutions;
  int convex_count;
  double m_bar;    // n = 4: H(1/cos(pi/4)), the convex-regime ceiling; else NaN
  double delta_n;  // n >= 5: z1 - cos(pi/n); else NaN
  std::string regime;
};

/// Solves H(a) = m and classifies each solution as convex or not, with the
/// per-n convexity regime summary.  n >= 3.
ConvexityReport classify_convex(int n, double m, const AnalysisOptions& opt = {});

/// z1 - cos(pi/n) for n >= 5; positive means every central-interval crown is
/// convex and no crown outside it is.
double delta_n(int n, const AnalysisOptions& opt = {});

}  // namespace crowns
