#include "crowns/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "crowns/curve.hpp"
#include "crowns/errors.hpp"
#include "crowns/kahan.hpp"

namespace crowns {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCollisionDist = 1e-12;
constexpr double kPassThreshold = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// Per-body acceleration-like terms A_i = sum_{j != i} m_j (q_j - q_i) / r^3,
// summed with compensation.  The residual equation per body is
// m_i (A_i + lambda q_i) = 0.
std::vector<Vec2> pairwise_terms(const CrownConfiguration& crown, const BodyPositions& pos) {
  const std::size_t count = pos.points.size();
  std::vector<KahanSum> ax(count), ay(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& pi = pos.points[i];
    for (std::size_t j = i + 1; j < count; ++j) {
      const auto& pj = pos.points[j];
      const double dx = pj.x - pi.x;
      const double dy = pj.y - pi.y;
      const double r2 = dx * dx + dy * dy;
      const double r = std::sqrt(r2);
      if (r < kCollisionDist) {
        throw SingularityError("bodies " + std::to_string(i) + " and " + std::to_string(j) +
                                   " coincide",
                               static_cast<int>(i), static_cast<int>(j));
      }
      const double inv_r3 = 1.0 / (r2 * r);
      const double mi = crown.ring(pi.ring).mass;
      const double mj = crown.ring(pj.ring).mass;
      ax[i].add(mj * dx * inv_r3);
      ay[i].add(mj * dy * inv_r3);
      ax[j].add(-mi * dx * inv_r3);
      ay[j].add(-mi * dy * inv_r3);
    }
  }
  std::vector<Vec2> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = {ax[i].value(), ay[i].value()};
  return out;
}

void require_lattice_offsets(const CrownConfiguration& crown, const char* who) {
  if (twist_offsets(crown).classification == TwistClass::NonCrown) {
    throw DomainError(std::string(who) + " requires all pairwise offsets in {0, pi/n}");
  }
}

}  // namespace

ResidualReport full_gradient_residual(const CrownConfiguration& crown) {
  const BodyPositions pos = build_positions(crown);
  const std::vector<Vec2> acc = pairwise_terms(crown, pos);

  // Least-squares lambda over the mass-weighted equations m_i (A_i + l q_i).
  KahanSum num, den;
  for (std::size_t i = 0; i < pos.points.size(); ++i) {
    const auto& p = pos.points[i];
    const double m2 = crown.ring(p.ring).mass * crown.ring(p.ring).mass;
    num.add(m2 * (acc[i].x * p.x + acc[i].y * p.y));
    den.add(m2 * (p.x * p.x + p.y * p.y));
  }
  const double lambda = -num.value() / den.value();

  double force_scale = 0.0;
  double max_residual = 0.0;
  for (std::size_t i = 0; i < pos.points.size(); ++i) {
    const auto& p = pos.points[i];
    const double m = crown.ring(p.ring).mass;
    force_scale = std::max({force_scale, std::fabs(m * acc[i].x), std::fabs(m * acc[i].y)});
    max_residual = std::max({max_residual, std::fabs(m * (acc[i].x + lambda * p.x)),
                             std::fabs(m * (acc[i].y + lambda * p.y))});
  }
  ResidualReport report;
  report.lambda = lambda;
  report.max_gradient_residual = force_scale > 0.0 ? max_residual / force_scale : 0.0;

  // Per-ring lambda from the leader body's radial projection.
  for (int j = 0; j < crown.ring_count(); ++j) {
    const std::size_t leader = static_cast<std::size_t>(j) * pos.n;
    const auto& p = pos.points[leader];
    const double r2 = p.x * p.x + p.y * p.y;
    report.lambda_per_ring.push_back(-(acc[leader].x * p.x + acc[leader].y * p.y) / r2);
  }
  double spread = 0.0;
  for (std::size_t i = 0; i < report.lambda_per_ring.size(); ++i) {
    for (std::size_t j = i + 1; j < report.lambda_per_ring.size(); ++j) {
      spread = std::max(spread,
                        std::fabs(report.lambda_per_ring[i] - report.lambda_per_ring[j]));
    }
  }
  report.lambda_spread = spread / std::fabs(report.lambda_per_ring.front());
  report.max_imag_residual = imag_residual(crown);
  report.passes = report.max_gradient_residual <= kPassThreshold &&
                  report.max_imag_residual <= kPassThreshold;
  return report;
}

double leader_lambda(const CrownConfiguration& crown, int ring_index) {
  if (ring_index < 0 || ring_index >= crown.ring_count()) {
    throw DomainError("ring index out of range");
  }
  require_lattice_offsets(crown, "leader_lambda");
  const int n = crown.n();
  const RingSpec& rj = crown.ring(ring_index);
  KahanSum cross;
  for (int l = 0; l < crown.ring_count(); ++l) {
    if (l == ring_index) continue;
    const RingSpec& rl = crown.ring(l);
    const double dphi = rj.phase_radians() - rl.phase_radians();
    cross.add(rl.mass * coeff_cjl(n, rj.radius, rl.radius, dphi));
  }
  const double a = rj.radius;
  return rj.mass * s_n(n) / (a * a * a) + cross.value() / a;
}

double imag_residual(const CrownConfiguration& crown) {
  const int n = crown.n();
  double worst = 0.0;
  for (int j = 0; j < crown.ring_count(); ++j) {
    const RingSpec& rj = crown.ring(j);
    KahanSum sum;
    double mag = 0.0;
    for (int l = 0; l < crown.ring_count(); ++l) {
      if (l == j) continue;
      const RingSpec& rl = crown.ring(l);
      const double dphi = rl.phase_radians() - rj.phase_radians();
      for (int k = 1; k <= n; ++k) {
        const double ang = dphi + 2.0 * kPi * k / n;
        const double c = std::cos(ang);
        const double s = std::sin(ang);
        const double dx = rj.radius - rl.radius * c;
        const double d2 = dx * dx + (rl.radius * s) * (rl.radius * s);
        const double term = rl.mass * rl.radius * s / (d2 * std::sqrt(d2));
        sum.add(term);
        mag += std::fabs(term);
      }
    }
    if (mag > 0.0) worst = std::max(worst, std::fabs(sum.value()) / mag);
  }
  return worst;
}

std::vector<double> general_kappa_residual(const CrownConfiguration& crown) {
  const int kappa = crown.ring_count();
  if (kappa < 2) throw DomainError("general_kappa_residual requires at least two rings");
  require_lattice_offsets(crown, "general_kappa_residual");

  const int n = crown.n();
  const double sn = s_n(n);
  const double a1 = crown.ring(0).radius;
  const double m1 = crown.ring(0).mass;

  // Normalize by rescaling: radii in units of a1, masses in units of m1.
  std::vector<double> a(kappa), m(kappa), phi(kappa);
  for (int j = 0; j < kappa; ++j) {
    a[j] = crown.ring(j).radius / a1;
    m[j] = crown.ring(j).mass / m1;
    phi[j] = crown.ring(j).phase_radians();
  }
  auto cjl = [&](int j, int l) { return coeff_cjl(n, a[j], a[l], phi[j] - phi[l]); };

  std::vector<double> out;
  out.reserve(kappa - 1);
  for (int j = 1; j < kappa; ++j) {
    KahanSum r;
    r.add(cjl(j, 0) - sn * a[j]);
    for (int l = 1; l < kappa; ++l) {
      if (l == j) continue;
      r.add((cjl(j, l) - a[j] * cjl(0, l)) * m[l]);
    }
    r.add((sn / (a[j] * a[j]) - a[j] * cjl(0, j)) * m[j]);
    out.push_back(r.value());
  }
  return out;
}

}  // namespace crowns
