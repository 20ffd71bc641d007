#include "crowns/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>

#include "crowns/crown.hpp"
#include "crowns/curve.hpp"
#include "crowns/errors.hpp"
#include "crowns/oracle.hpp"
#include "crowns/roots.hpp"

namespace crowns {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBoundaryTol = 1e-9;   // mass-ratio distance treated as "at" a boundary
constexpr double kMergeTol = 1e-10;     // relative: coalescing roots (tangency ties)
constexpr double kOracleTol = 1e-9;

double require_positive_mass(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("mass ratio must be positive");
  return m;
}

ZeroPair compute_zeros(int n, const AnalysisOptions& opt) {
  if (n < 2) throw DomainError("zeros require n >= 2");
  if (n == 2) {
    // Segment case: F itself has a single positive zero, but the admissible
    // window endpoints play the z-role and are known in closed form.
    const double s3 = std::sqrt(3.0);
    return {2, 1.0 / s3, s3, true, true};
  }
  const TwistedCurve& cv = curve_for(n);
  ScalarFn F = [&cv](double a) { return cv.f(a); };
  const RefineOptions ropt{opt.refine_tol, 200};

  // Analytic brackets: (3/8, 7/16) and (25/16, 13/8) for n = 3;
  // (2/3, 1) and outward from 3/2 for n = 4; (1 - 1/n, 1) and outward from
  // n/(n-1) for n >= 5.
  Bracket b1 = (n == 3)   ? make_bracket(F, 3.0 / 8.0, 7.0 / 16.0)
               : (n == 4) ? make_bracket(F, 2.0 / 3.0, 1.0)
                          : make_bracket(F, 1.0 - 1.0 / n, 1.0);
  const double z1 = refine(b1, F, ropt).value;

  Bracket b2 = (n == 3) ? make_bracket(F, 25.0 / 16.0, 13.0 / 8.0)
                        : expand_upward(F, n == 4 ? 1.5 : double(n) / (n - 1), 1e6);
  const double z2 = refine(b2, F, ropt).value;

  bool verified = false;
  if (opt.verify_conjecture) {
    const auto brs = scan_brackets(F, opt.scan_lo, opt.scan_hi, opt.scan_steps);
    if (brs.size() > 2) {
      std::vector<std::pair<double, double>> found;
      for (const Bracket& b : brs) found.emplace_back(b.lo, b.hi);
      throw ConjectureViolation(
          "F has " + std::to_string(brs.size()) + " sign changes for n = " +
              std::to_string(n) + "; downstream results assume exactly two",
          n, std::move(found));
    }
    verified = (brs.size() == 2);
  }

  ZeroPair zp{n, z1, z2, verified, false};
  if (!(0.0 < z1 && z1 < 1.0 && 1.0 < z2)) {
    throw InconsistencyError("zeros violate 0 < z1 < 1 < z2 for n = " + std::to_string(n));
  }
  if (n == 3 && !(z1 * z2 < 1.0)) throw InconsistencyError("expected z1*z2 < 1 for n = 3");
  if (n >= 4 && !(z1 * z2 > 1.0)) {
    throw InconsistencyError("expected z1*z2 > 1 for n = " + std::to_string(n));
  }
  if (n >= 5 && !(z1 > 1.0 - 1.0 / n && z2 > double(n) / (n - 1))) {
    throw InconsistencyError("zero bounds z1 > 1-1/n, z2 > n/(n-1) failed");
  }
  return zp;
}

}  // namespace

ZeroPair zeros_of_f(int n, const AnalysisOptions& opt) {
  static std::mutex mu;
  static std::map<int, ZeroPair> cache;
  if (opt == AnalysisOptions{}) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    ZeroPair zp = compute_zeros(n, opt);
    cache.emplace(n, zp);
    return zp;
  }
  return compute_zeros(n, opt);
}

IntervalUnion admissible_set(int n, const AnalysisOptions& opt) {
  const ZeroPair zp = zeros_of_f(n, opt);
  IntervalUnion out;
  if (n == 2) {
    out.add({zp.z1, zp.z2});
    return out;
  }
  if (n == 3) {
    out.add({0.0, zp.z1});
    out.add({1.0 / zp.z2, zp.z2});
    out.add({1.0 / zp.z1, kInf});
  } else {
    out.add({0.0, 1.0 / zp.z2});
    out.add({zp.z1, 1.0 / zp.z1});
    out.add({zp.z2, kInf});
  }
  return out;
}

Interval central_admissible_interval(int n, const AnalysisOptions& opt) {
  const IntervalUnion adm = admissible_set(n, opt);
  const int idx = adm.index_of(1.0);
  if (idx < 0) throw InconsistencyError("no admissible component contains a = 1");
  return adm.parts()[static_cast<std::size_t>(idx)];
}

BifurcationData bifurcation_n3(const AnalysisOptions& opt) {
  static std::mutex mu;
  static std::optional<BifurcationData> cache;
  if (opt == AnalysisOptions{}) {
    std::lock_guard<std::mutex> lock(mu);
    if (cache) return *cache;
  }

  const ZeroPair zp = zeros_of_f(3, opt);
  const TwistedCurve& cv = curve_for(3);
  // Critical points via the pole-free numerator of H'(a)/a.
  ScalarFn num = [&cv](double a) { return cv.h_prime_numerator(a); };
  const RefineOptions ropt{opt.refine_tol, 200};

  auto find_unique = [&](double lo, double hi, const char* where) {
    const auto brs = scan_brackets(num, lo, hi, 2001);
    if (brs.size() != 1) {
      throw InconsistencyError("expected exactly one critical point of H in " +
                               std::string(where) + ", found " + std::to_string(brs.size()));
    }
    return refine(brs.front(), num, ropt).value;
  };

  const double a_star = find_unique(1.0 + 1e-9, zp.z2, "(1, z2)");
  double hi = 8.0;  // the outer critical point sits below 6
  while (num(hi) <= 0.0 && hi < 1e3) hi *= 2.0;
  const double a_star_star = find_unique(1.0 / zp.z1, hi, "(1/z1, inf)");

  BifurcationData bif{a_star, a_star_star, cv.h(a_star), cv.h(a_star_star)};
  if (!(1.0 < bif.a_star && bif.a_star < zp.z2 && bif.a_star_star > 1.0 / zp.z1)) {
    throw InconsistencyError("critical points out of their intervals");
  }
  if (!(1.0 < bif.m_star && bif.m_star < bif.m_star_star)) {
    throw InconsistencyError("expected 1 < m* < m**");
  }
  // Second-difference sanity: a* is a local max, a** a local min.
  const double d = 1e-3;
  if (!(cv.h(bif.a_star - d) < bif.m_star && cv.h(bif.a_star + d) < bif.m_star)) {
    throw InconsistencyError("a* is not a local maximum of H");
  }
  if (!(cv.h(bif.a_star_star - d) > bif.m_star_star &&
        cv.h(bif.a_star_star + d) > bif.m_star_star)) {
    throw InconsistencyError("a** is not a local minimum of H");
  }

  if (opt == AnalysisOptions{}) {
    std::lock_guard<std::mutex> lock(mu);
    cache = bif;
  }
  return bif;
}

namespace {

// Solving H(a) = m is done on R(a) = a^2 F(a) - m G(a), which has exactly
// the roots of H - m but is analytic across the poles of H, so admissible
// intervals can be scanned closed-endpoint with no exclusion zones.
struct MassEquation {
  const TwistedCurve& cv;
  double m;
  double operator()(double a) const { return a * a * cv.f(a) - m * cv.g(a); }
  double derivative(double a) const {
    return 2.0 * a * cv.f(a) + a * a * cv.f_prime(a) - m * cv.g_prime(a);
  }
  // Rounding envelope of R(a): used to recognize exact tangencies.
  double noise(double a) const {
    return 64.0 * std::numeric_limits<double>::epsilon() *
           (a * a * std::fabs(cv.f(a)) + m * std::fabs(cv.g(a)));
  }
};

double polish(const MassEquation& eq, const Root& root) {
  double x = root.value;
  for (int i = 0; i < 2; ++i) {
    const double r = eq(x);
    const double rp = eq.derivative(x);
    if (rp == 0.0) break;
    const double nx = x - r / rp;
    if (!(nx > root.bracket.lo && nx < root.bracket.hi) && !root.bracket.exact()) break;
    if (nx <= 0.0 || !std::isfinite(nx)) break;
    x = nx;
  }
  return x;
}

// Upper endpoint for the unbounded admissible component: R ~ S_n a^3 for
// large a, so doubling terminates quickly.
double outer_limit(const MassEquation& eq, double start) {
  double hi = start;
  for (int i = 0; i < 200 && eq(hi) <= 0.0; ++i) hi *= 2.0;
  return hi;
}

void refine_piece(const MassEquation& eq, double lo, double hi, double refine_tol,
                  std::vector<double>& roots) {
  const double flo = eq(lo);
  const double fhi = eq(hi);
  if (std::fabs(flo) <= eq.noise(lo)) {
    roots.push_back(lo);  // tangency at a critical endpoint (double root)
    return;
  }
  if (std::fabs(fhi) <= eq.noise(hi)) {
    roots.push_back(hi);
    return;
  }
  if ((flo > 0.0) == (fhi > 0.0)) return;  // H monotone on a piece: no root
  const Root r = refine(Bracket{lo, hi, flo, fhi}, std::cref(eq), {refine_tol, 200});
  roots.push_back(polish(eq, r));
}

// n = 3: H has exactly four critical points (a*, a** and their reciprocals),
// so the admissible set splits into monotone pieces and endpoint signs give
// exact root counts, including at the bifurcation masses.
std::vector<double> solve_pieces_n3(const MassEquation& eq, const ZeroPair& zp,
                                    const BifurcationData& bif, double refine_tol) {
  const double inv_as = 1.0 / bif.a_star;
  const double inv_ass = 1.0 / bif.a_star_star;
  const double hi = outer_limit(eq, std::max(2.0 * bif.a_star_star,
                                             2.0 * std::cbrt(std::max(1.0, eq.m))));
  const double pieces[][2] = {
      {1e-8, inv_ass},        {inv_ass, zp.z1},          {1.0 / zp.z2, inv_as},
      {inv_as, bif.a_star},   {bif.a_star, zp.z2},       {1.0 / zp.z1, bif.a_star_star},
      {bif.a_star_star, hi},
  };
  std::vector<double> roots;
  for (const auto& p : pieces) refine_piece(eq, p[0], p[1], refine_tol, roots);
  return roots;
}

void solve_scan(const MassEquation& eq, double lo, double hi, int steps, double refine_tol,
                std::vector<double>& roots) {
  for (const Bracket& b : scan_brackets(std::cref(eq), lo, hi, steps)) {
    roots.push_back(b.exact() ? b.lo : polish(eq, refine(b, std::cref(eq), {refine_tol, 200})));
  }
}

std::vector<double> solve_radii(int n, double m, const ZeroPair& zp,
                                const AnalysisOptions& opt) {
  const TwistedCurve& cv = curve_for(n);
  const MassEquation eq{cv, m};
  std::vector<double> roots;
  if (n == 2) {
    refine_piece(eq, zp.z1, zp.z2, opt.refine_tol, roots);
  } else if (n == 3) {
    roots = solve_pieces_n3(eq, zp, bifurcation_n3(opt), opt.refine_tol);
  } else {
    const double inv_z1 = 1.0 / zp.z1;
    const double inv_z2 = 1.0 / zp.z2;
    solve_scan(eq, inv_z2 * 1e-3, inv_z2, opt.solve_steps, opt.refine_tol, roots);
    solve_scan(eq, zp.z1, inv_z1, opt.solve_steps, opt.refine_tol, roots);
    const double hi = outer_limit(eq, std::max(2.0 * zp.z2, 2.0 * std::cbrt(m)));
    solve_scan(eq, zp.z2, hi, opt.solve_steps, opt.refine_tol, roots);
  }

  std::sort(roots.begin(), roots.end());
  // Coalesce refinements that met at the same root (ties near tangency).
  std::vector<double> merged;
  for (double r : roots) {
    if (!merged.empty() && r - merged.back() <= kMergeTol * std::max(1.0, r)) continue;
    merged.push_back(r);
  }
  return merged;
}

bool window_contains(int n, double a) {
  // cos(pi/2) = 0 degenerates the window to (0, inf) for n = 2.
  const double c = std::cos(kPi / n);
  return c == 0.0 || (a > c && a < 1.0 / c);
}

CrownConfiguration pair_crown(int n, double a, double m) {
  return CrownConfiguration{{RingSpec(n, 1.0, 1.0, Phase::nested()),
                             RingSpec(n, a, m, Phase::twisted())}};
}

const char* label_for(int n, int component) {
  if (n == 2) return "central";
  switch (component) {
    case 0:
      return "inner";
    case 1:
      return "central";
    default:
      return "outer";
  }
}

int nearest_component(const IntervalUnion& adm, double a) {
  int best = 0;
  double best_dist = kInf;
  for (std::size_t i = 0; i < adm.size(); ++i) {
    const Interval& iv = adm.parts()[i];
    const double d = a < iv.lo ? iv.lo - a : (iv.unbounded() || a < iv.hi ? 0.0 : a - iv.hi);
    if (d < best_dist) {
      best_dist = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

int deduplicated_count(const std::vector<double>& radii, double m) {
  if (std::fabs(m - 1.0) > kBoundaryTol) return static_cast<int>(radii.size());
  // At m = 1 the crowns (a, 1) and (1/a, 1) coincide up to rescaling.
  std::vector<bool> used(radii.size(), false);
  int classes = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    ++classes;
    for (std::size_t j = i + 1; j < radii.size(); ++j) {
      if (!used[j] && std::fabs(radii[i] * radii[j] - 1.0) <= 1e-6) {
        used[j] = true;
        break;
      }
    }
  }
  return classes;
}

}  // namespace

SolutionSet solve_for_mass(int n, double m, const AnalysisOptions& opt) {
  require_positive_mass(m);
  if (n < 2) throw DomainError("solve_for_mass requires n >= 2");

  const ZeroPair zp = zeros_of_f(n, opt);
  const bool reduced = m < 1.0;
  std::vector<double> radii = solve_radii(n, reduced ? 1.0 / m : m, zp, opt);
  if (reduced) {
    for (double& a : radii) a = 1.0 / a;
    std::sort(radii.begin(), radii.end());
  }

  const IntervalUnion adm = admissible_set(n, opt);
  const TwistedCurve& cv = curve_for(n);

  SolutionSet set;
  set.n = n;
  set.mass_ratio = m;
  set.conjecture_verified = zp.conjecture_verified;
  for (double a : radii) {
    // Defining-equation residual, checked pole-free: |H(a) - m| <= tol*max(1,m)
    // is |R(a)| <= tol*max(1,m)*|G(a)|.  For roots hugging a pole at extreme m
    // the curve is so steep that adjacent doubles straddle the 1e-10 band, so
    // the bound is floored at the representable limit |R'| * eps * a.
    const double fv = cv.f(a);
    const double gv = cv.g(a);
    const double r = a * a * fv - m * gv;
    const double slope =
        std::fabs(2.0 * a * fv + a * a * cv.f_prime(a) - m * cv.g_prime(a));
    const double eps = std::numeric_limits<double>::epsilon();
    const double floor = 8.0 * eps * (slope * a + a * a * std::fabs(fv) + m * std::fabs(gv));
    if (std::fabs(r) > std::max(1e-10 * std::max(1.0, m) * std::fabs(gv), floor)) {
      throw InconsistencyError("solution a = " + std::to_string(a) +
                               " fails the mass-curve residual check");
    }
    const ResidualReport report = full_gradient_residual(pair_crown(n, a, m));
    if (report.max_gradient_residual > kOracleTol) {
      throw InconsistencyError("solution a = " + std::to_string(a) +
                               " fails gradient-oracle verification (residual " +
                               std::to_string(report.max_gradient_residual) + ")");
    }
    int comp = adm.index_of(a);
    if (comp < 0) comp = nearest_component(adm, a);
    set.solutions.push_back(
        {a, label_for(n, comp), window_contains(n, a), report.max_gradient_residual});
  }
  set.count_deduplicated = deduplicated_count(radii, m);
  return set;
}

CountResult count_configurations(int n, double m, const AnalysisOptions& opt) {
  require_positive_mass(m);
  if (m < 1.0) {
    CountResult r = count_configurations(n, 1.0 / m, opt);
    r.clause = "m < 1 reduced through the a -> 1/a symmetry; " + r.clause;
    return r;
  }
  const SolutionSet set = solve_for_mass(n, m, opt);
  CountResult out{set.count_deduplicated, "", false};

  if (n == 2) {
    out.clause = "n = 2: one crown for every mass ratio, a in (1/sqrt(3), sqrt(3))";
    return out;
  }
  if (n == 3) {
    const BifurcationData bif = bifurcation_n3(opt);
    if (std::fabs(m - 1.0) <= kBoundaryTol) {
      out.boundary = true;
      out.clause = "m = 1: reciprocal pair identified, exactly two distinct crowns";
    } else if (std::fabs(m - bif.m_star) <= kBoundaryTol) {
      out.boundary = true;
      out.clause = "m within 1e-9 of the lower bifurcation mass m* (the double root at a* "
                   "counts once; exactly two at m* itself)";
    } else if (std::fabs(m - bif.m_star_star) <= kBoundaryTol) {
      out.boundary = true;
      out.clause = "m within 1e-9 of the upper bifurcation mass m** (the double root at a** "
                   "counts once; exactly two at m** itself)";
    } else if (m < bif.m_star) {
      out.clause = "1 < m < m*: exactly three crowns, all in the central interval";
    } else if (m < bif.m_star_star) {
      out.clause = "m* < m < m**: exactly one crown, radius in (1/z2, 1)";
    } else {
      out.clause = "m > m**: exactly three crowns, one central and two outer";
    }
    return out;
  }
  if (std::fabs(m - 1.0) <= kBoundaryTol) {
    out.boundary = true;
    out.clause = (n % 2 == 0)
                     ? "m = 1, n even: radii {1/a1, 1, a1}, exactly two distinct crowns"
                     : "m = 1, n odd: at least two distinct crowns";
  } else {
    out.clause = "m > 1: at least three crowns, one per admissible component";
  }
  return out;
}

double equal_mass_radius(int n, const AnalysisOptions& opt) {
  if (n < 4) throw DomainError("equal_mass_radius requires n >= 4");
  const TwistedCurve& cv = curve_for(n);
  ScalarFn diff = [&cv](double a) { return cv.g2(a) - cv.g1(a); };
  const auto brs = scan_brackets(diff, 1.0 + 1e-9, 1e3, 4001);
  if (brs.empty()) {
    throw NotFoundError("no sign change of g2 - g1 found on (1, 1e3]");
  }
  if (n % 2 == 0 && brs.size() != 1) {
    throw InconsistencyError("g1 = g2 should have a unique root above 1 for even n; found " +
                             std::to_string(brs.size()));
  }
  const double a1 = refine(brs.front(), diff, {opt.refine_tol, 200}).value;
  if (std::fabs(cv.h(a1) - 1.0) > 1e-9) {
    throw InconsistencyError("equal-mass radius fails H(a1) = 1 cross-check");
  }
  return a1;
}

Interval convexity_window(int n) {
  if (n < 3) throw DomainError("convexity window requires n >= 3");
  const double c = std::cos(kPi / n);
  return {c, 1.0 / c};
}

bool is_convex(int n, double a) {
  if (!(a > 0.0)) throw DomainError("is_convex requires a > 0");
  return convexity_window(n).contains(a);
}

ConvexityReport classify_convex(int n, double m, const AnalysisOptions& opt) {
  if (n < 3) throw DomainError("convexity classification requires n >= 3");
  ConvexityReport report;
  report.solutions = solve_for_mass(n, m, opt);
  report.convex_count = 0;
  for (const Solution& s : report.solutions.solutions) {
    if (s.convex) ++report.convex_count;
  }
  report.m_bar = std::numeric_limits<double>::quiet_NaN();
  report.delta_n = std::numeric_limits<double>::quiet_NaN();

  if (n == 3) {
    const Interval central = central_admissible_interval(n, opt);
    for (const Solution& s : report.solutions.solutions) {
      if (s.convex != central.contains(s.a)) {
        throw InconsistencyError("n = 3: convexity must coincide with the central interval");
      }
    }
    report.regime = "n = 3: convex iff the radius lies in the central admissible interval";
  } else if (n == 4) {
    report.m_bar = curve_for(4).h(1.0 / std::cos(kPi / 4.0));
    report.regime = (m <= report.m_bar)
                        ? "n = 4: m <= m_bar, exactly one convex crown expected"
                        : "n = 4: m > m_bar, no convex crown exists";
  } else {
    const double d = delta_n(n, opt);
    report.delta_n = d;
    report.regime = d > 0.0 ? "n >= 5: delta_n > 0, convex iff in the central interval"
                            : "n >= 5: delta_n <= 0 (unexpected; convexity window is wider)";
  }
  return report;
}

double delta_n(int n, const AnalysisOptions& opt) {
  if (n < 5) throw DomainError("delta_n requires n >= 5");
  return zeros_of_f(n, opt).z1 - std::cos(kPi / n);
}

}  // namespace crowns
