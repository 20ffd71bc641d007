#pragma once

#include <vector>

#include "crowns/crown.hpp"

namespace crowns {

/// Ground-truth verdict on a crown against the raw central-configuration
/// equations, computed from direct pairwise Newtonian sums in Cartesian
/// coordinates.  Residual norms are relative to the peak per-body force
/// magnitude, so pass/fail is invariant under rotation and rescaling.
struct ResidualReport {
  std::vector<double> lambda_per_ring;  // leader-equation lambda, one per ring
  double lambda_spread = 0.0;           // max |lambda_i - lambda_j| / |lambda_1|
  double max_gradient_residual = 0.0;   // inf-norm of grad U + lambda M q (relative)
  double max_imag_residual = 0.0;       // inf-norm of the ring imaginary parts (relative)
  double lambda = 0.0;                  // least-squares lambda over all equations
  bool passes = false;                  // both residuals at threshold 1e-9
};

/// Brute-force check of grad U(q) + lambda M q = 0 over all kappa*n bodies.
/// lambda is fit by least squares across every scalar equation (no body is
/// privileged).  Shares no code with the reduced ring sums.
ResidualReport full_gradient_residual(const CrownConfiguration& crown);

/// lambda solving ring j's real-part leader equation:
///   lambda = m_j S_n / a_j^3 + (1/a_j) sum_{l != j} m_l C_jl.
/// Cross-ring agreement of these values is the crown condition.  Requires
/// all pairwise offsets in {0, pi/n}.
double leader_lambda(const CrownConfiguration& crown, int ring_index);

/// Max over rings of the imaginary-part ring equation (relative to the sum
/// of term magnitudes).  Vanishes identically for offsets in {0, pi/n}.
double imag_residual(const CrownConfiguration& crown);

/// The kappa-1 reduced equations with the first ring normalized to radius 1
/// and mass 1 by rescaling.  Zero vector iff the crown is central.  Requires
/// kappa >= 2 and lattice offsets.
std::vector<double> general_kappa_residual(const CrownConfiguration& crown);

}  // namespace crowns
