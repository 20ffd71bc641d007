#pragma once

#include <vector>

namespace crowns {

/// Leader phase of a ring.  The two lattice values (0 and pi/n) are stored
/// symbolically so twist classification is exact; arbitrary angles use Raw.
class Phase {
 public:
  enum class Kind { Nested, TwistedHalfStep, Raw };

  static Phase nested() { return Phase(Kind::Nested, 0.0); }
  static Phase twisted() { return Phase(Kind::TwistedHalfStep, 0.0); }
  static Phase raw(double radians) { return Phase(Kind::Raw, radians); }

  Kind kind() const { return kind_; }
  bool lattice() const { return kind_ != Kind::Raw; }

  /// Angle in radians for a ring of n bodies: 0, pi/n, or the raw value.
  double radians(int n) const;

 private:
  Phase(Kind kind, double raw) : kind_(kind), raw_(raw) {}
  Kind kind_;
  double raw_;
};

/// One regular n-gon ring: n bodies of equal mass on a circle, the leader at
/// polar angle phase and the rest rotated by multiples of 2*pi/n.
struct RingSpec {
  int n;
  double radius;
  double mass;
  Phase phase;

  RingSpec(int n, double radius, double mass, Phase phase);

  double phase_radians() const { return phase.radians(n); }
};

/// Ordered list of rings sharing the same n.  Ring order carries no meaning;
/// no radius ordering is assumed or enforced.
class CrownConfiguration {
 public:
  explicit CrownConfiguration(std::vector<RingSpec> rings);

  int n() const { return n_; }
  int ring_count() const { return static_cast<int>(rings_.size()); }
  const std::vector<RingSpec>& rings() const { return rings_; }
  const RingSpec& ring(int j) const { return rings_.at(static_cast<std::size_t>(j)); }

 private:
  std::vector<RingSpec> rings_;
  int n_;
};

struct BodyPositions {
  struct Point {
    int ring;  // 0-based ring index
    int body;  // 0-based body index within the ring
    double x;
    double y;
  };
  int n = 0;
  std::vector<Point> points;  // ring-major, body-minor, size ring_count * n
};

/// Cartesian positions of all kappa*n bodies from the polar parametrization.
BodyPositions build_positions(const CrownConfiguration& crown);

enum class TwistClass { Nested, Twisted, NonCrown };

struct PairOffset {
  int ring_j;
  int ring_l;
  double offset;  // |phase_j - phase_l| reduced to [0, 2*pi/n)
};

struct TwistReport {
  TwistClass classification = TwistClass::Nested;
  std::vector<PairOffset> offsets;
};

/// Pairwise leader-phase offsets and the nested/twisted/non-crown verdict.
/// An offset counts as 0 or pi/n when within 1e-12 (exact for lattice phases).
TwistReport twist_offsets(const CrownConfiguration& crown);

const char* to_string(TwistClass c);

}  // namespace crowns
