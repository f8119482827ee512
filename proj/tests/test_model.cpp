#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "radmhd/model.hpp"

using namespace radmhd;

TEST_CASE("ideal gas closure") {
  Eos eos = make_ideal_gas_eos(1.0, 1.0);
  CHECK(eos.p(2.0, 3.0) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(eos.p_rho(2.0, 3.0) == doctest::Approx(3.0).epsilon(1e-15));

  Eos eos2 = make_ideal_gas_eos(2.0, 5.0);
  CHECK(eos2.e_theta(7.0, 0.5) == doctest::Approx(5.0).epsilon(1e-15));

  CHECK_THROWS_AS(make_ideal_gas_eos(0.0, 1.0), Error);
  CHECK_THROWS_AS(make_ideal_gas_eos(1.0, -2.0), Error);
}

TEST_CASE("ideal gas satisfies the monotonicity and derivative checks") {
  Eos eos = make_ideal_gas_eos(1.5, 0.7);
  CHECK_NOTHROW(validate_eos(eos, 1.0, 1.0));
  CHECK_NOTHROW(validate_eos(eos, 3.0, 0.2));

  // A deliberately wrong derivative must be caught.
  Eos broken = eos;
  broken.p_rho = [](double, double theta) { return theta + 0.5; };
  CHECK_THROWS_AS(validate_eos(broken, 1.0, 1.0), Error);
}

TEST_CASE("Gibbs and Maxwell identities for the ideal gas") {
  Eos eos = make_ideal_gas_eos(1.3, 2.1);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> U(0.5, 2.0);
  for (int i = 0; i < 20; ++i) {
    double rho = U(rng), theta = U(rng);
    double h = 1e-6 * theta;
    double ds_dtheta =
        (eos.s(rho, theta + h) - eos.s(rho, theta - h)) / (2.0 * h);
    // Central difference: truncation is O(h^2) but cancellation in s leaves
    // roundoff of order eps/h ~ 1e-10 relative.
    CHECK(theta * ds_dtheta ==
          doctest::Approx(eos.e_theta(rho, theta)).epsilon(5e-9));
    // de/drho = (p - theta dp/dtheta)/rho^2, identically zero here.
    double maxwell =
        (eos.p(rho, theta) - theta * eos.p_theta(rho, theta)) / (rho * rho);
    CHECK(std::abs(maxwell) <= 1e-10);
  }
}

TEST_CASE("equilibrium compatibility condition") {
  PhysParams params;
  Equilibrium eq;

  eq.theta_bar = 1.0;
  eq.Er_bar = 1.0;
  CHECK_NOTHROW(validate_equilibrium(params, eq));

  eq.theta_bar = 2.0;
  eq.Er_bar = 16.0;
  CHECK_NOTHROW(validate_equilibrium(params, eq));

  eq.theta_bar = 1.0;
  eq.Er_bar = 2.0;
  CHECK_THROWS_AS(validate_equilibrium(params, eq), CompatibilityViolation);

  eq.Er_bar = 1.0;
  eq.rho_bar = -1.0;
  CHECK_THROWS_AS(validate_equilibrium(params, eq), NonPositiveState);
}

TEST_CASE("physical parameter validation") {
  PhysParams p;
  CHECK_NOTHROW(p.validate());
  p.nu = 0.0;
  CHECK_NOTHROW(p.validate());
  p.nu = -1.0;
  CHECK_THROWS_AS(p.validate(), Error);
  p.nu = 1.0;
  p.sigma_s = 0.0;
  CHECK_THROWS_AS(p.validate(), Error);

  PhysParams q;
  q.mu = 4.0;
  q.sigma = 0.5;
  CHECK(q.lambda() * q.mu * q.sigma == 1.0);
}

TEST_CASE("derived coefficients, all-ones configuration") {
  PhysParams params;
  Equilibrium eq;
  Eos eos = make_ideal_gas_eos(1.0, 1.0);
  LinCoeffs c = derive_coefficients(params, eos, eq);

  CHECK(c.alpha_p == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.beta_p == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.beta_pp == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(c.gamma_p == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.gamma_pp == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(c.delta_p == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.delta_pp == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(c.zeta == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(c.eta == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.pi == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(c.all_positive());
}

TEST_CASE("derived coefficients, theta_bar = 2") {
  PhysParams params;
  Equilibrium eq;
  eq.theta_bar = 2.0;
  eq.Er_bar = 16.0;
  Eos eos = make_ideal_gas_eos(1.0, 1.0);
  LinCoeffs c = derive_coefficients(params, eos, eq);

  CHECK(c.eta == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.pi == doctest::Approx(32.0).epsilon(1e-15));
  CHECK(c.gamma_pp == doctest::Approx(64.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("kappa only enters delta_p") {
  PhysParams params;
  Equilibrium eq;
  eq.rho_bar = 1.3;
  eq.theta_bar = 0.9;
  eq.Er_bar = params.a * std::pow(eq.theta_bar, 4);
  Eos eos = make_ideal_gas_eos(1.0, 2.0);

  LinCoeffs c1 = derive_coefficients(params, eos, eq);
  params.kappa *= 2.0;
  LinCoeffs c2 = derive_coefficients(params, eos, eq);

  CHECK(c2.delta_p == doctest::Approx(2.0 * c1.delta_p).epsilon(1e-15));
  CHECK(c2.alpha_p == c1.alpha_p);
  CHECK(c2.beta_p == c1.beta_p);
  CHECK(c2.beta_pp == c1.beta_pp);
  CHECK(c2.gamma_p == c1.gamma_p);
  CHECK(c2.gamma_pp == c1.gamma_pp);
  CHECK(c2.delta_pp == c1.delta_pp);
  CHECK(c2.zeta == c1.zeta);
  CHECK(c2.eta == c1.eta);
  CHECK(c2.pi == c1.pi);
}

TEST_CASE("ideal gas closed-form identities and positivity over random states") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> U(0.5, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    PhysParams params;
    params.mu = U(rng);
    params.sigma = U(rng);
    params.sigma_a = U(rng);
    params.sigma_s = U(rng);
    params.a = U(rng);
    params.kappa = U(rng);
    double R = U(rng), Cv = U(rng);
    Eos eos = make_ideal_gas_eos(R, Cv);
    Equilibrium eq;
    eq.rho_bar = U(rng);
    eq.theta_bar = U(rng);
    eq.Er_bar = params.a * std::pow(eq.theta_bar, 4);

    LinCoeffs c = derive_coefficients(params, eos, eq);
    CHECK(c.all_positive());
    CHECK(c.gamma_p == doctest::Approx(R * eq.rho_bar / Cv).epsilon(1e-14));
    CHECK(c.beta_p == doctest::Approx(R).epsilon(1e-14));
    CHECK(c.gamma_pp == doctest::Approx((4.0 / 3.0) * eq.Er_bar).epsilon(1e-15));
    CHECK(c.pi ==
          doctest::Approx(4.0 * params.a * params.sigma_a *
                          std::pow(eq.theta_bar, 3)).epsilon(1e-14));

    // Purity: identical inputs give bit-identical outputs.
    LinCoeffs c2 = derive_coefficients(params, eos, eq);
    CHECK(c.alpha_p == c2.alpha_p);
    CHECK(c.zeta == c2.zeta);
    CHECK(c.delta_p == c2.delta_p);
  }
}
