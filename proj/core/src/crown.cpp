#include "crowns/crown.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "crowns/errors.hpp"
#include "crowns/kahan.hpp"

namespace crowns {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kOffsetTol = 1e-12;
}  // namespace

double Phase::radians(int n) const {
  switch (kind_) {
    case Kind::Nested:
      return 0.0;
    case Kind::TwistedHalfStep:
      return kPi / n;
    case Kind::Raw:
      return raw_;
  }
  return raw_;
}

RingSpec::RingSpec(int n, double radius, double mass, Phase phase)
    : n(n), radius(radius), mass(mass), phase(phase) {
  if (n < 2) throw DomainError("ring requires n >= 2 bodies, got " + std::to_string(n));
  if (!(radius > 0.0)) throw DomainError("ring radius must be positive");
  if (!(mass > 0.0)) throw DomainError("ring mass must be positive");
  if (phase.kind() == Phase::Kind::Raw) {
    const double w = phase.radians(n);
    if (!(w > -kPi / n && w <= kPi / n)) {
      throw DomainError("ring phase must lie in (-pi/n, pi/n]");
    }
  }
}

CrownConfiguration::CrownConfiguration(std::vector<RingSpec> rings)
    : rings_(std::move(rings)) {
  if (rings_.empty()) throw DomainError("crown requires at least one ring");
  n_ = rings_.front().n;
  for (const RingSpec& r : rings_) {
    if (r.n != n_) throw DomainError("all rings of a crown must share the same n");
  }
}

BodyPositions build_positions(const CrownConfiguration& crown) {
  const int n = crown.n();
  BodyPositions out;
  out.n = n;
  out.points.reserve(static_cast<std::size_t>(crown.ring_count()) * n);
  for (int j = 0; j < crown.ring_count(); ++j) {
    const RingSpec& ring = crown.ring(j);
    const double w = ring.phase_radians();
    for (int k = 0; k < n; ++k) {
      const double ang = w + 2.0 * kPi * k / n;
      out.points.push_back({j, k, ring.radius * std::cos(ang), ring.radius * std::sin(ang)});
    }
  }

  // Each regular n-gon (n >= 2) has zero first moment, so the centre of mass
  // is the origin by construction; verify to guard the trig loop.
  KahanSum mx, my;
  double mass_radius = 0.0;
  for (const auto& p : out.points) {
    const double m = crown.ring(p.ring).mass;
    mx.add(m * p.x);
    my.add(m * p.y);
    mass_radius = std::max(mass_radius, crown.ring(p.ring).radius);
  }
  double total_mass = 0.0;
  for (const RingSpec& r : crown.rings()) total_mass += r.mass * n;
  const double bound = 1e-12 * mass_radius * total_mass;
  if (std::abs(mx.value()) > bound || std::abs(my.value()) > bound) {
    throw InconsistencyError("centre of mass drifted from the origin");
  }
  return out;
}

TwistReport twist_offsets(const CrownConfiguration& crown) {
  const int n = crown.n();
  const double step = 2.0 * kPi / n;
  const double half = kPi / n;

  TwistReport report;
  bool any_half = false;
  bool any_bad = false;
  for (int j = 0; j < crown.ring_count(); ++j) {
    for (int l = j + 1; l < crown.ring_count(); ++l) {
      const Phase& pj = crown.ring(j).phase;
      const Phase& pl = crown.ring(l).phase;
      double off;
      if (pj.lattice() && pl.lattice()) {
        off = (pj.kind() == pl.kind()) ? 0.0 : half;  // exact lattice arithmetic
      } else {
        off = std::fabs(crown.ring(j).phase_radians() - crown.ring(l).phase_radians());
        off = std::fmod(off, step);
        if (off < 0.0) off += step;
        // Fold near-multiples of the full step back to 0.
        if (std::min(off, step - off) <= kOffsetTol) {
          off = 0.0;
        } else if (std::fabs(off - half) <= kOffsetTol) {
          off = half;
        }
      }
      report.offsets.push_back({j, l, off});
      if (off == half) {
        any_half = true;
      } else if (off != 0.0) {
        any_bad = true;
      }
    }
  }
  report.classification = any_bad    ? TwistClass::NonCrown
                          : any_half ? TwistClass::Twisted
                                     : TwistClass::Nested;
  return report;
}

const char* to_string(TwistClass c) {
  switch (c) {
    case TwistClass::Nested:
      return "nested";
    case TwistClass::Twisted:
      return "twisted";
    case TwistClass::NonCrown:
      return "non-crown";
  }
  return "?";
}

}  // namespace crowns
