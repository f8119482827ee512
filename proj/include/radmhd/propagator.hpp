#ifndef RADMHD_PROPAGATOR_HPP
#define RADMHD_PROPAGATOR_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "radmhd/expm.hpp"
#include "radmhd/symbols.hpp"

namespace radmhd {

/// 9-component state sampled on a uniform periodic n x n x n grid of box
/// edge L. Storage is row-major with z fastest, components innermost.
struct Field {
  int n = 0;
  double L = 2.0 * 3.14159265358979323846;
  std::vector<double> data;

  Field() = default;
  Field(int n_, double L_);

  double& at(int i, int j, int k, int c) {
    return data[(((static_cast<size_t>(i) * n + j) * n + k)) * kDim + c];
  }
  double at(int i, int j, int k, int c) const {
    return data[(((static_cast<size_t>(i) * n + j) * n + k)) * kDim + c];
  }
  void scale(double s) {
    for (double& v : data) v *= s;
  }
};

/// Spectral counterpart of Field; coefficients carry the 1/n^3 forward
/// normalization, so Plancherel reads ||f||_L2^2 = L^3 sum_k |fhat(k)|^2.
struct SpectralField {
  int n = 0;
  double L = 0.0;
  std::vector<std::complex<double>> data;

  std::complex<double>& at(int i, int j, int k, int c) {
    return data[(((static_cast<size_t>(i) * n + j) * n + k)) * kDim + c];
  }
  std::complex<double> at(int i, int j, int k, int c) const {
    return data[(((static_cast<size_t>(i) * n + j) * n + k)) * kDim + c];
  }
};

/// Integer frequency of grid index i (in -n/2 .. n/2-1).
inline int kindex(int n, int i) { return i < n - i ? i : i - n; }

/// Physical wavevector of the grid mode (i, j, k).
Vec3 wavevector(int n, double L, int i, int j, int k);

SpectralField forward(const Field& f);
/// Inverse transform; reports the largest imaginary residue dropped.
Field inverse(const SpectralField& s, double* max_imag = nullptr);

/// Exact per-mode evolution: exp(t A0^-1 E(xi)) U0hat.
CVec9 propagate_mode(const SystemMatrices& sys, const CVec9& U0hat,
                     const Vec3& xi, double t);

/// Leray projection of the magnetic block; the k = 0 mean is untouched.
Field project_divfree(const Field& f);

/// Largest |k . bhat(k)| over nonzero modes, for divergence diagnostics.
double max_divergence(const Field& f);

struct NormsRow {
  double t;
  double hd;           // H^d norm of the 9-component state
  double grad_terms;   // instantaneous gradient-norm integrand (squared)
  double relax_terms;  // instantaneous relaxation integrand (squared)
  double N2;           // running discrete N(t)^2
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Field> snapshots;
  std::vector<NormsRow> norms;
  double max_imag_residue = 0.0;
  double max_divergence = 0.0;
};

/// Spectral simulator: one forward transform, every output time advanced
/// exactly from t = 0 by per-mode matrix exponentials, one inverse transform
/// per snapshot. Unpaired Nyquist planes are zeroed on input so that the
/// Hermitian symmetry of the spectrum is preserved exactly.
Trajectory simulate(const SystemMatrices& sys, const Field& field0,
                    double t_end, int n_out, int d = 4);

/// Periodic Sobolev norm of order s over all 9 components.
double sobolev_norm(const Field& f, double s);

/// Discrete N(t)^2: running sup of the squared H^d norm plus trapezoidal
/// time quadrature of the gradient and relaxation terms.
double energy_functional_N2(const Trajectory& traj, const SystemMatrices& sys,
                            int d = 4);

/// cos(k . x) in one component.
Field single_mode_field(int n, double L, const Eigen::Vector3i& kint,
                        int component, double amp = 1.0);

/// Random band-limited smooth field with |Uhat(k)| ~ (1+|k|^2)^-q, seeded;
/// Nyquist planes excluded. Not divergence-free projected.
Field random_band_limited_field(int n, double L, double q, std::uint64_t seed);

/// Spectral first derivatives of every component; index (point, c, axis).
struct FieldGradients {
  int n = 0;
  double L = 0.0;
  std::vector<double> data;  // n^3 * 9 * 3

  double at(int i, int j, int k, int c, int axis) const {
    return data[((((static_cast<size_t>(i) * n + j) * n + k)) * kDim + c) * 3 +
                axis];
  }
};

FieldGradients spectral_gradients(const Field& f);

}  // namespace radmhd

#endif
