#include "radmhd/model.hpp"

#include <cmath>
#include <string>

namespace radmhd {

void PhysParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0))
      throw Error(std::string(name) + " must be strictly positive");
  };
  positive(mu, "mu");
  positive(sigma, "sigma");
  positive(sigma_a, "sigma_a");
  positive(sigma_s, "sigma_s");
  positive(a, "a");
  positive(kappa, "kappa");
  if (nu < 0.0) throw Error("nu must be nonnegative");
}

Eos make_ideal_gas_eos(double R, double Cv) {
  if (!(R > 0.0) || !(Cv > 0.0))
    throw Error("ideal gas EOS requires R > 0 and C_v > 0");
  Eos eos;
  eos.p = [R](double rho, double theta) { return R * rho * theta; };
  eos.e = [Cv](double, double theta) { return Cv * theta; };
  eos.p_rho = [R](double, double theta) { return R * theta; };
  eos.p_theta = [R](double rho, double) { return R * rho; };
  eos.e_theta = [Cv](double, double) { return Cv; };
  eos.s = [R, Cv](double rho, double theta) {
    return Cv * std::log(theta) - R * std::log(rho);
  };
  eos.ideal = true;
  eos.R = R;
  eos.Cv = Cv;
  return eos;
}

void validate_eos(const Eos& eos, double rho0, double theta0, int grid_n) {
  if (!(rho0 > 0.0) || !(theta0 > 0.0))
    throw NonPositiveState("validate_eos: anchor state must be positive");
  const double rel_tol = 1e-6;
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      double rho = 0.5 * rho0 + 1.5 * rho0 * (i + 0.5) / grid_n;
      double theta = 0.5 * theta0 + 1.5 * theta0 * (j + 0.5) / grid_n;
      if (!(eos.p_rho(rho, theta) > 0.0))
        throw Error("EOS violates p_rho > 0 at sampled state");
      if (!(eos.e_theta(rho, theta) > 0.0))
        throw Error("EOS violates e_theta > 0 at sampled state");
      // Supplied derivatives against central differences.
      double hr = 1e-5 * rho;
      double ht = 1e-5 * theta;
      double fd_p_rho = (eos.p(rho + hr, theta) - eos.p(rho - hr, theta)) / (2 * hr);
      double fd_p_theta = (eos.p(rho, theta + ht) - eos.p(rho, theta - ht)) / (2 * ht);
      double fd_e_theta = (eos.e(rho, theta + ht) - eos.e(rho, theta - ht)) / (2 * ht);
      auto close = [rel_tol](double got, double ref) {
        return std::abs(got - ref) <= rel_tol * (1.0 + std::abs(ref));
      };
      if (!close(eos.p_rho(rho, theta), fd_p_rho) ||
          !close(eos.p_theta(rho, theta), fd_p_theta) ||
          !close(eos.e_theta(rho, theta), fd_e_theta))
        throw Error("EOS derivative does not match finite differences");
    }
  }
}

Equilibrium validate_equilibrium(const PhysParams& params, const Equilibrium& eq) {
  if (!(eq.rho_bar > 0.0) || !(eq.theta_bar > 0.0))
    throw NonPositiveState("equilibrium requires rho_bar > 0 and theta_bar > 0");
  double target = params.a * std::pow(eq.theta_bar, 4);
  if (std::abs(eq.Er_bar - target) > 1e-12 * target)
    throw CompatibilityViolation("Er_bar != a * theta_bar^4");
  return eq;
}

bool LinCoeffs::all_positive() const {
  return alpha_p > 0 && beta_p > 0 && beta_pp > 0 && gamma_p > 0 &&
         gamma_pp > 0 && delta_p > 0 && delta_pp > 0 && zeta > 0 && eta > 0 &&
         pi > 0;
}

LinCoeffs derive_coefficients(const PhysParams& params, const Eos& eos,
                              const Equilibrium& eq) {
  const double rho = eq.rho_bar;
  const double theta = eq.theta_bar;
  const double p_rho = eos.p_rho(rho, theta);
  const double p_theta = eos.p_theta(rho, theta);
  const double Cv = eos.e_theta(rho, theta);
  const double th3 = theta * theta * theta;

  LinCoeffs c;
  c.alpha_p = p_rho / rho;
  c.beta_p = p_theta / rho;
  c.beta_pp = 1.0 / (3.0 * rho);
  c.gamma_p = p_theta / Cv;
  c.gamma_pp = (4.0 / 3.0) * eq.Er_bar;
  c.delta_p = params.kappa / (rho * Cv);
  c.delta_pp = 1.0 / (3.0 * params.sigma_s);
  c.zeta = 4.0 * params.a * params.sigma_a * th3 / (rho * Cv);
  c.eta = params.sigma_a / (rho * Cv);
  c.pi = 4.0 * params.a * params.sigma_a * th3;
  return c;
}

}  // namespace radmhd
