#ifndef RADMHD_STABILITY_HPP
#define RADMHD_STABILITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "radmhd/symbols.hpp"

namespace radmhd {

/// Deterministic low-discrepancy sphere sample (Fibonacci lattice).
/// `rot` rotates the lattice in azimuth so that fresh, non-overlapping
/// samples can be drawn without an RNG.
std::vector<Vec3> fibonacci_sphere(int n, double rot = 0.0);

/// Result of the Shizuta-Kawashima check at a single frequency direction.
struct SKReport {
  Vec3 xi;
  bool holds;
  double min_angle;  // smallest principal angle between any eigenspace of
                     // A0^-1 A(xi) and ker B(xi), radians
  std::optional<std::pair<double, Vec9>> witness;  // (eigenvalue, vector)
};

SKReport sk_check(const SystemMatrices& sys, const Vec3& xi,
                  double angle_tol = 1e-8);

struct SweepReport {
  bool holds_everywhere;
  double worst_angle;
  Vec3 worst_xi;
  int n_checked;
  int n_failed;
  std::vector<SKReport> reports;  // every checked direction, in order
};

/// sk_check over a Fibonacci lattice of n_dirs points plus the 6 axis
/// directions, plus (for nu = 0) adversarial directions perpendicular to
/// B_bar.
SweepReport sk_sweep(const SystemMatrices& sys, int n_dirs);

/// Explicit kernel eigenpairs in the degenerate nu = 0 case: when
/// xi . B_bar = 0, the velocity vectors perpendicular to xi give eigenvalue-0
/// eigenvectors of A(xi) lying in ker B(xi). Returns a basis of that
/// 2-parameter family, or empty when xi . B_bar != 0.
std::vector<std::pair<double, Vec9>> kernel_eigenpairs_nu0(
    const SystemMatrices& sys, const Vec3& xi, const Vec3& B_bar);

/// Numerical rank of the stacked matrix [B(xi); B(xi)M; ...; B(xi)M^8] with
/// M = A0^-1 A(xi), via singular values with threshold 1e-10 sigma_max.
int kalman_rank(const SystemMatrices& sys, const Vec3& xi);

struct DecayPoint {
  Vec3 xi;
  double abscissa;  // max Re eigenvalue of A0^-1 E(xi)
  double cond;      // eigenvector-matrix condition number, inf if defective
};

DecayPoint spectral_abscissa(const SystemMatrices& sys, const Vec3& xi);

struct DecayMap {
  std::vector<DecayPoint> points;      // sorted by (direction, magnitude)
  std::vector<double> low_freq_slope;  // per direction, log-log fit over the
                                       // lowest decade of magnitudes
  std::vector<double> plateau;         // per direction, abscissa at the
                                       // largest magnitude
};

DecayMap decay_map(const SystemMatrices& sys, const std::vector<double>& mags,
                   const std::vector<Vec3>& dirs);

/// Compensating matrix in the linear-in-omega ansatz K(w) = sum_j w_j K_j,
/// with each K_j A0 skew-symmetric by construction.
struct Compensator {
  std::array<Mat9, 3> K;
  double margin;  // min over the training sphere sample of
                  // lambda_min([K(w)A(w)] + B(w))
  bool found;     // margin > 0

  Mat9 at(const Vec3& omega) const {
    return omega(0) * K[0] + omega(1) * K[1] + omega(2) * K[2];
  }
};

/// Derivative-free search (deterministic coordinate descent with a fixed
/// shrink schedule plus a global multiplier line search) over the 108
/// skew-parametrized entries, maximizing the training margin.
Compensator find_compensator(const SystemMatrices& sys, int n_train = 64,
                             int budget = 20000);

/// Margin of K over a fresh (rotated) Fibonacci sample of n_test points.
/// Throws if the skewness or oddness certificates fail.
double verify_compensator(const Compensator& K, const SystemMatrices& sys,
                          int n_test);

}  // namespace radmhd

#endif
