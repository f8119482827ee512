#ifndef RADMHD_ENTROPY_HPP
#define RADMHD_ENTROPY_HPP

#include "radmhd/model.hpp"
#include "radmhd/propagator.hpp"

namespace radmhd {

/// Relative matter Helmholtz functional
///   H(rho,theta) - (rho - rho_bar) dH/drho(rho_bar,theta_bar) - H(rho_bar,theta_bar)
/// with H(rho,theta) = rho (e - theta_bar s). The anchor derivative is
/// analytic for the ideal gas and a central difference otherwise.
double relative_helmholtz_matter(double rho, double theta, const Eos& eos,
                                 const Equilibrium& eq);

/// Relative radiation Helmholtz functional
///   a Tr^4 - theta_bar (4/3) a Tr^3 + (a/3) theta_bar^4.
double relative_helmholtz_radiation(double Tr, double a, double theta_bar);

/// Grid-certified coercivity constants of the sandwich inequalities:
/// C1 dist^2 <= matter functional <= C2 dist^2 on O1, and similarly C3/C4
/// for the radiation functional on O2. The 0/0 anchor ratio is replaced by
/// the analytic second-order (Hessian) limit.
struct CoercivityConstants {
  double C1, C2;  // matter, on O1 = (rho_bar/2, 2 rho_bar) x (theta_bar/2, 2 theta_bar)
  double C3, C4;  // radiation, on O2 = (theta_bar/2, 2 theta_bar)
  double anchor_matter_min, anchor_matter_max;  // Hessian/2 eigenvalue limits
  double anchor_radiation;                      // H_r''(theta_bar)/2
};

CoercivityConstants coercivity_constants(const Eos& eos, const Equilibrium& eq,
                                         int grid_n);

/// Integral over the box of the relative-entropy density eta evaluated on an
/// absolute state snapshot (components rho, u, theta, E_r, B). With
/// `extended` the kinetic term rho|u|^2/2 and magnetic term |B|^2/(2 mu) are
/// added to the integrand.
double relative_entropy_eta(const Field& state, const Eos& eos,
                            const Equilibrium& eq, const PhysParams& params,
                            bool extended = false);

/// The five sign-definite production integrals of the total entropy balance.
/// The radiative term is computed in the T_r-gradient form; the E_r-gradient
/// variant is reported alongside (the two differ by (4 a Tr^3)^2).
struct ProductionTerms {
  double heat;              // kappa |grad theta|^2 / theta^2
  double radiative;         // (4a/3 sigma_s) Tr |grad Tr|^2
  double radiative_er_form; // (4a/3 sigma_s) Tr |grad E_r|^2
  double relaxation;        // a sigma_a (theta-Tr)^2 (theta+Tr)(theta^2+Tr^2)/(theta Tr)
  double ohmic;             // |curl B|^2 / (sigma mu^2 theta)
  double damping;           // nu |u|^2 / theta
};

ProductionTerms entropy_production(const Field& state,
                                   const FieldGradients& grads, const Eos& eos,
                                   const PhysParams& params);

/// Convenience overload computing the spectral gradients internally.
ProductionTerms entropy_production(const Field& state, const Eos& eos,
                                   const PhysParams& params);

}  // namespace radmhd

#endif
