#ifndef RADMHD_SYMBOLS_HPP
#define RADMHD_SYMBOLS_HPP

#include <array>
#include <complex>
#include <vector>

#include "radmhd/model.hpp"

namespace radmhd {

// State ordering, fixed globally:
//   0: r (density), 1-3: u (velocity), 4: T (temperature),
//   5: e_r (radiative energy), 6-8: b (magnetic induction).
inline constexpr int kDim = 9;

using Mat9 = Eigen::Matrix<double, kDim, kDim>;
using Vec9 = Eigen::Matrix<double, kDim, 1>;
using CMat9 = Eigen::Matrix<std::complex<double>, kDim, kDim>;
using CVec9 = Eigen::Matrix<std::complex<double>, kDim, 1>;

/// Every matrix of the linearized system: hyperbolic fluxes A_j, diffusion D,
/// relaxation B, the diagonal symmetrizer A0, and the symmetrized
/// counterparts At_j = A0 A_j, Dt = A0 D, Bt = A0 B.
struct SystemMatrices {
  std::array<Mat9, 3> A;
  Mat9 D;
  Mat9 Brelax;
  Mat9 A0;
  std::array<Mat9, 3> At;
  Mat9 Dt;
  Mat9 Bt;

  PhysParams params;
  Equilibrium eq;
  LinCoeffs coeffs;
};

SystemMatrices build_system(const LinCoeffs& coeffs, const Equilibrium& eq,
                            const PhysParams& params);

/// Per-frequency symbols: A(xi) = sum_j xi_j At_j, B(xi) = Bt + |xi|^2 Dt,
/// E(xi) = -B(xi) - i A(xi).
struct FourierSymbol {
  Vec3 xi;
  Mat9 Axi;
  Mat9 Bxi;
  CMat9 Exi;
};

FourierSymbol fourier_symbol(const SystemMatrices& sys, const Vec3& xi);

/// Numerical audit of the symmetry/positivity claims about Bt and B(xi).
/// The asymmetry defect is max_ij |M_ij - M_ji|; for the ideal gas it equals
/// mu sigma_a |1/rho_bar^2 - 1/(rho_bar theta_bar)| in closed form.
struct AuditReport {
  double bt_asym_defect;
  double bt_sym_min_eig;  // min eigenvalue of (Bt + Bt^T)/2
  struct BxiEntry {
    double xi_mag;
    double asym_defect;
    double sym_min_eig;
  };
  std::vector<BxiEntry> bxi;  // at |xi| in {0, 1, 10}
  bool bt_symmetric;
  bool bt_psd;
};

AuditReport consistency_audit(const SystemMatrices& sys);

/// Pointwise full (nonlinear) state.
struct FullState {
  double rho;
  Vec3 u;
  double theta;
  double Er;
  Vec3 B;
};

/// Coefficient matrices of the nonlinear system evaluated at the pointwise
/// state V; Bhat is the relaxation/source column (curl B supplied by the
/// caller).
struct NonlinearCoeffs {
  std::array<Mat9, 3> Ahat;
  Mat9 Dhat;
  Vec9 Bhat;
};

NonlinearCoeffs nonlinear_coefficients(const FullState& V,
                                       const PhysParams& params, const Eos& eos,
                                       const Vec3& curlB);

}  // namespace radmhd

#endif
