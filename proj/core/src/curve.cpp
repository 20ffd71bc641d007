#include "crowns/curve.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "crowns/errors.hpp"
#include "crowns/kahan.hpp"

namespace crowns {

namespace {
constexpr double kPi = std::numbers::pi;
}

double s_n(int n) { return curve_for(n).sn(); }

double coeff_cjl(int n, double a_j, double a_l, double phase_diff) {
  if (n < 2) throw DomainError("coeff_cjl requires n >= 2");
  if (!(a_j > 0.0) || !(a_l > 0.0)) throw DomainError("coeff_cjl requires positive radii");
  KahanSum sum;
  for (int k = 1; k <= n; ++k) {
    const double ang = phase_diff + 2.0 * kPi * k / n;
    const double c = std::cos(ang);
    const double s = std::sin(ang);
    const double num = a_j - a_l * c;
    // d = a_j^2 + a_l^2 - 2 a_j a_l cos, written cancellation-free.
    const double d = num * num + (a_l * s) * (a_l * s);
    if (d <= 1e-14) {
      throw SingularityError(
          "ring term k=" + std::to_string(k) + " is singular (coincident bodies)", k, k);
    }
    sum.add(num / (d * std::sqrt(d)));
  }
  return sum.value();
}

TwistedCurve::TwistedCurve(int n) : n_(n) {
  if (n < 2) throw DomainError("twisted curve requires n >= 2");

  // S_n: symmetric terms, largest first (k = 1 and k = n-1 dominate).
  {
    KahanSum s;
    const int half = (n - 1) / 2;
    for (int k = 1; k <= half; ++k) s.add(2.0 / std::sin(k * kPi / n));
    if (n % 2 == 0) s.add(1.0);  // middle term sin(pi/2)
    sn_ = 0.25 * s.value();
  }

  // theta_k = (2k-1)pi/n: cos(theta_k) = cos(theta_{n+1-k}), so only the
  // first ceil(n/2) angles are stored, each with weight 2 except the
  // unpaired theta = pi when n is odd.
  const int half = n / 2;
  cos_.reserve(half + 1);
  for (int k = 1; k <= half; ++k) {
    const double th = (2.0 * k - 1.0) * kPi / n;
    const double s = std::sin(th);
    cos_.push_back(std::cos(th));
    sin2_.push_back(s * s);
    w_.push_back(2.0);
  }
  if (n % 2 == 1) {
    cos_.push_back(-1.0);
    sin2_.push_back(0.0);
    w_.push_back(1.0);
  }
}

void TwistedCurve::check_a(double a) const {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("curve functions require a > 0");
}

// d_k = 1 + a^2 - 2 a cos(theta_k) = (a - cos)^2 + sin^2, cancellation-free.

double TwistedCurve::c12(double a) const {
  check_a(a);
  KahanSum s;
  for (std::size_t i = 0; i < cos_.size(); ++i) {
    const double am = a - cos_[i];
    const double d = am * am + sin2_[i];
    s.add(w_[i] * (1.0 - a * cos_[i]) / (d * std::sqrt(d)));
  }
  return s.value();
}

double TwistedCurve::c21(double a) const {
  check_a(a);
  KahanSum s;
  for (std::size_t i = 0; i < cos_.size(); ++i) {
    const double am = a - cos_[i];
    const double d = am * am + sin2_[i];
    s.add(w_[i] * am / (d * std::sqrt(d)));
  }
  return s.value();
}

double TwistedCurve::c12_prime(double a) const {
  check_a(a);
  KahanSum s;
  for (std::size_t i = 0; i < cos_.size(); ++i) {
    const double am = a - cos_[i];
    const double d = am * am + sin2_[i];
    const double num = -cos_[i] * d - 3.0 * (1.0 - a * cos_[i]) * am;
    s.add(w_[i] * num / (d * d * std::sqrt(d)));
  }
  return s.value();
}

double TwistedCurve::c21_prime(double a) const {
  check_a(a);
  KahanSum s;
  for (std::size_t i = 0; i < cos_.size(); ++i) {
    const double am = a - cos_[i];
    const double d = am * am + sin2_[i];
    s.add(w_[i] * (d - 3.0 * am * am) / (d * d * std::sqrt(d)));
  }
  return s.value();
}

double TwistedCurve::f(double a) const { return sn_ * a - c21(a); }

double TwistedCurve::g(double a) const { return sn_ - a * a * a * c12(a); }

double TwistedCurve::f_prime(double a) const { return sn_ - c21_prime(a); }

double TwistedCurve::g_prime(double a) const {
  return -3.0 * a * a * c12(a) - a * a * a * c12_prime(a);
}

bool TwistedCurve::near_pole(double a) const {
  const double gv = g(a);
  const double scale = std::max(sn_, a * a * a * std::fabs(c12(a)));
  return std::fabs(gv) < 1e-13 * scale;
}

double TwistedCurve::h(double a) const {
  check_a(a);
  if (near_pole(a)) throw PoleError("H(a) evaluated at a pole", a);
  return a * a * f(a) / g(a);
}

double TwistedCurve::h_prime(double a) const {
  check_a(a);
  if (near_pole(a)) throw PoleError("H'(a) evaluated at a pole", a);
  const double gv = g(a);
  return a * h_prime_numerator(a) / (gv * gv);
}

double TwistedCurve::h_prime_numerator(double a) const {
  check_a(a);
  const double fv = f(a);
  const double gv = g(a);
  return 2.0 * fv * gv + a * (f_prime(a) * gv - fv * g_prime(a));
}

double TwistedCurve::g1(double a) const {
  check_a(a);
  return sn_ * (a * a + a + 1.0) / (a * a * (a + 1.0));
}

double TwistedCurve::g2(double a) const {
  check_a(a);
  KahanSum s;
  for (std::size_t i = 0; i < cos_.size(); ++i) {
    const double am = a - cos_[i];
    const double d = am * am + sin2_[i];
    s.add(w_[i] * cos_[i] / (d * std::sqrt(d)));
  }
  return s.value();
}

std::vector<double> TwistedCurve::thetas() const {
  std::vector<double> out;
  out.reserve(n_);
  for (int k = 1; k <= n_; ++k) out.push_back((2.0 * k - 1.0) * kPi / n_);
  return out;
}

const TwistedCurve& curve_for(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const TwistedCurve>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<const TwistedCurve>(n)).first;
  }
  return *it->second;
}

double c12(int n, double a) { return curve_for(n).c12(a); }
double c21(int n, double a) { return curve_for(n).c21(a); }
double f_of_a(int n, double a) { return curve_for(n).f(a); }
double g_of_a(int n, double a) { return curve_for(n).g(a); }
double h_of_a(int n, double a) { return curve_for(n).h(a); }
double f_prime(int n, double a) { return curve_for(n).f_prime(a); }
double g_prime(int n, double a) { return curve_for(n).g_prime(a); }
double h_prime(int n, double a) { return curve_for(n).h_prime(a); }

std::pair<double, double> g1_g2(int n, double a) {
  const TwistedCurve& cv = curve_for(n);
  return {cv.g1(a), cv.g2(a)};
}

}  // namespace crowns
