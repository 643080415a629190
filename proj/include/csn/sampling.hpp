#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "csn/configuration.hpp"
#include "csn/dominance.hpp"

namespace csn {

/// Deterministic Gaussian stream: a fixed 64-bit engine, a fixed
/// uint64→[0,1) mapping, and Box–Muller. Identical seeds give identical
/// streams on a given platform.
class GaussianStream {
 public:
  explicit GaussianStream(uint64_t seed) : eng_(seed) {}
  double uniform01();  // in [0, 1)
  double gaussian();

 private:
  std::mt19937_64 eng_;
  std::optional<double> cached_;
};

/// Nearest rational with denominator 2^precision_bits, reduced.
Rat rationalize(double x, unsigned precision_bits);

/// m i.i.d. Gaussian rows in dimension n, rationalized at the given
/// precision; resampled (up to a small retry budget) while the rows
/// fail to span or contain a zero vector.
CsConfiguration sample_gaussian_configuration(int m, int n, uint64_t seed,
                                              unsigned precision_bits = 32);

/// Exactly orthogonal rational matrix, near-Haar: a product of
/// Householder reflections built from exactly-unit rational vectors
/// (float directions snapped to the rational unit sphere), times a
/// random diagonal of signs. UᵀU = I holds in exact arithmetic.
Matrix random_orthogonal(int d, uint64_t seed);

/// The 2d-element transform-side set {e₁,…,e_d, Ue₁,…,Ue_d} in
/// dimension d for a seeded exactly-orthogonal U.
CsConfiguration kashin_configuration(int d, uint64_t seed);

struct VolumeRatioResult {
  double value;                    // R(d)
  double bound;                    // √(2e/π)
  std::optional<Rat> pi_free_power;  // even d: the exact rational R^d·π^{d/2}
};

/// Volume ratio of the scaled cross-polytope against the Euclidean
/// ball: R = (2^d d^{d/2} Γ(d/2+1) / (d! π^{d/2}))^{1/d}.
VolumeRatioResult volume_ratio(int d);

struct DistortionReport {
  double value;             // sup ‖x‖₂/‖x‖₁ (exact) or best sampled ratio
  bool exact;
  int samples;
  double implied_constant;  // value divided by the rate factor
};

/// Distortion of the subspace of t against the rate
/// √((1+log(m/d))/d), natural log; d must equal m − n.
DistortionReport gg_margin(const CsConfiguration& t, int d);

/// Worst observed ratio ‖x‖₂√d / (4R²(‖Uᵀx‖₁+‖x‖₁)) over seeded random
/// unit directions; ≤ 1 everywhere is consistent with the two-sided
/// l1/l2 bound holding for this U.
DistortionReport kashin_margin(const Matrix& u, int samples, uint64_t seed);

}  // namespace csn
