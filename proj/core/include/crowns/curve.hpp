#pragma once

#include <utility>
#include <vector>

namespace crowns {

/// S_n = (1/4) * sum_{k=1}^{n-1} 1/sin(k*pi/n).  Strictly positive, n >= 2.
double s_n(int n);

/// General ring-interaction coefficient
///   C_jl = sum_{k=1}^{n} (a_j - a_l cos(D + 2k*pi/n)) / d_k^{3/2},
///   d_k  = a_j^2 + a_l^2 - 2 a_j a_l cos(D + 2k*pi/n),
/// for leader-phase difference D.  Throws SingularityError when a term's
/// squared distance falls below 1e-14.
double coeff_cjl(int n, double a_j, double a_l, double phase_diff);

/// Scalar functions of the twisted two-ring mass curve at fixed n:
///
///   C12(a), C21(a)  -- coefficients at offset pi/n (angles (2k-1)*pi/n)
///   F(a) = S_n a - C21(a)
///   G(a) = S_n - a^3 C12(a)
///   H(a) = a^2 F(a) / G(a)   -- the mass ratio making radius a a crown
///
/// plus term-wise analytic first derivatives and the equal-mass helper pair
/// g1, g2.  Angles and cosines are cached; sums run over the half range
/// (terms pair up as cos theta_k = cos theta_{n+1-k}) largest-first with
/// compensated accumulation.
class TwistedCurve {
 public:
  explicit TwistedCurve(int n);

  int n() const { return n_; }
  double sn() const { return sn_; }

  double c12(double a) const;
  double c21(double a) const;
  double c12_prime(double a) const;
  double c21_prime(double a) const;

  double f(double a) const;
  double g(double a) const;
  double f_prime(double a) const;
  double g_prime(double a) const;

  /// True when |G(a)| < 1e-13 * max(S_n, a^3 |C12(a)|): H has a pole here.
  bool near_pole(double a) const;

  /// H(a); throws PoleError at poles of H.
  double h(double a) const;
  /// H'(a); throws PoleError at poles of H.
  double h_prime(double a) const;

  /// Numerator 2FG + a F'G - a F G' of H'(a)/a: same zeros as H' for a > 0,
  /// but regular across the poles of H.  Used to locate critical points.
  double h_prime_numerator(double a) const;

  /// g1 = S_n (a^2+a+1) / (a^2 (a+1)),  g2 = sum_k cos(theta_k) / d_k^{3/2}.
  /// H(a) = 1 with a != 1 is equivalent to g1(a) = g2(a).
  double g1(double a) const;
  double g2(double a) const;

  /// Cached theta_k = (2k-1)*pi/n, k = 1..n (full range, for reference).
  std::vector<double> thetas() const;

 private:
  void check_a(double a) const;

  int n_;
  double sn_;
  // Half-range caches: cos(theta_k), sin^2(theta_k) and pair weight (2, or 1
  // for the unpaired theta = pi term when n is odd).
  std::vector<double> cos_;
  std::vector<double> sin2_;
  std::vector<double> w_;
};

/// Shared per-n curve cache (contexts are immutable; creation is idempotent).
const TwistedCurve& curve_for(int n);

/// Convenience free functions over the cached contexts.
double c12(int n, double a);
double c21(int n, double a);
double f_of_a(int n, double a);
double g_of_a(int n, double a);
double h_of_a(int n, double a);
double f_prime(int n, double a);
double g_prime(int n, double a);
double h_prime(int n, double a);
std::pair<double, double> g1_g2(int n, double a);

}  // namespace crowns
