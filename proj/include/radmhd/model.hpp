#ifndef RADMHD_MODEL_HPP
#define RADMHD_MODEL_HPP

#include <Eigen/Dense>
#include <functional>

#include "radmhd/errors.hpp"

namespace radmhd {

using Vec3 = Eigen::Vector3d;

/// Fixed transport and coupling constants. All are strictly positive except
/// the damping coefficient nu, which may vanish (the degenerate case probed
/// by the Shizuta-Kawashima checks).
struct PhysParams {
  double mu = 1.0;       // magnetic permeability
  double sigma = 1.0;    // electrical conductivity
  double sigma_a = 1.0;  // absorption coefficient
  double sigma_s = 1.0;  // scattering coefficient
  double a = 1.0;        // Planck coefficient
  double kappa = 1.0;    // heat conductivity
  double nu = 1.0;       // damping coefficient, >= 0

  /// Magnetic diffusivity; lambda * mu * sigma == 1 holds by construction.
  double lambda() const { return 1.0 / (mu * sigma); }

  void validate() const;
};

/// Pressure/energy closure. Supplied derivatives must be the exact partials
/// of p and e; validate_eos cross-checks them against central differences.
struct Eos {
  std::function<double(double, double)> p;        // p(rho, theta)
  std::function<double(double, double)> e;        // e(rho, theta)
  std::function<double(double, double)> p_rho;    // dp/drho
  std::function<double(double, double)> p_theta;  // dp/dtheta
  std::function<double(double, double)> e_theta;  // de/dtheta = C_v
  std::function<double(double, double)> s;        // specific entropy

  // Set for the ideal-gas closure; enables closed-form paths in the
  // Helmholtz/coercivity computations.
  bool ideal = false;
  double R = 0.0;
  double Cv = 0.0;
};

/// Ideal gas: p = R rho theta, e = Cv theta, s = Cv ln(theta) - R ln(rho).
/// Satisfies the monotonicity assumptions and the Gibbs law identically.
Eos make_ideal_gas_eos(double R, double Cv);

/// Checks p_rho > 0 and e_theta > 0 by sampling [rho0/2, 2 rho0] x
/// [theta0/2, 2 theta0] on a grid_n x grid_n grid, and checks the supplied
/// derivatives against central differences to 1e-6 relative tolerance.
void validate_eos(const Eos& eos, double rho0, double theta0, int grid_n = 32);

struct Equilibrium {
  double rho_bar = 1.0;
  double theta_bar = 1.0;
  double Er_bar = 1.0;  // must equal a * theta_bar^4
  Vec3 B_bar = Vec3::Zero();
};

/// Returns eq unchanged if rho_bar, theta_bar > 0 and the radiative
/// compatibility condition Er_bar = a theta_bar^4 holds to 1e-12 relative.
Equilibrium validate_equilibrium(const PhysParams& params, const Equilibrium& eq);

/// Coefficients of the linearized system, evaluated at the equilibrium.
struct LinCoeffs {
  double alpha_p;   // p_rho / rho_bar
  double beta_p;    // p_theta / rho_bar
  double beta_pp;   // 1 / (3 rho_bar)
  double gamma_p;   // p_theta / Cv
  double gamma_pp;  // (4/3) Er_bar
  double delta_p;   // kappa / (rho_bar Cv)
  double delta_pp;  // 1 / (3 sigma_s)
  double zeta;      // 4 a sigma_a theta_bar^3 / (rho_bar Cv)
  double eta;       // sigma_a / (rho_bar Cv)
  double pi;        // 4 a sigma_a theta_bar^3

  bool all_positive() const;
};

LinCoeffs derive_coefficients(const PhysParams& params, const Eos& eos,
                              const Equilibrium& eq);

}  // namespace radmhd

#endif
