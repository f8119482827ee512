#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "radmhd/entropy.hpp"

using namespace radmhd;

namespace {

Field uniform_state(int n, double L, double rho, const Vec3& u, double theta,
                    double Er, const Vec3& B) {
  Field f(n, L);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        f.at(i, j, k, 0) = rho;
        for (int c = 0; c < 3; ++c) f.at(i, j, k, 1 + c) = u(c);
        f.at(i, j, k, 4) = theta;
        f.at(i, j, k, 5) = Er;
        for (int c = 0; c < 3; ++c) f.at(i, j, k, 6 + c) = B(c);
      }
  return f;
}

}  // namespace

TEST_CASE("relative matter Helmholtz functional") {
  Eos eos = make_ideal_gas_eos(1.0, 1.0);
  Equilibrium eq;

  CHECK(relative_helmholtz_matter(1.0, 1.0, eos, eq) == 0.0);
  CHECK(relative_helmholtz_matter(1.0, 2.0, eos, eq) ==
        doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-14));

  // Strict positivity away from the anchor.
  for (double rho : {0.6, 0.9, 1.4, 1.9})
    for (double theta : {0.55, 0.8, 1.3, 1.95}) {
      double v = relative_helmholtz_matter(rho, theta, eos, eq);
      CHECK(v > 0.0);
    }

  CHECK_THROWS_AS(relative_helmholtz_matter(-1.0, 1.0, eos, eq),
                  NonPositiveState);
  CHECK_THROWS_AS(relative_helmholtz_matter(1.0, 0.0, eos, eq),
                  NonPositiveState);
}

TEST_CASE("relative radiation Helmholtz functional") {
  CHECK(std::abs(relative_helmholtz_radiation(1.0, 1.0, 1.0)) <= 1e-14);
  CHECK(std::abs(relative_helmholtz_radiation(2.0, 1.5, 2.0)) <= 1e-14);
  CHECK(relative_helmholtz_radiation(2.0, 1.0, 1.0) ==
        doctest::Approx(17.0 / 3.0).epsilon(1e-12));
  CHECK(relative_helmholtz_radiation(0.5, 1.0, 1.0) ==
        doctest::Approx(11.0 / 48.0).epsilon(1e-12));

  // Factored form: a (Tr - tb)^2 (Tr^2 + (2/3) tb Tr + tb^2/3).
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> U(0.25, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    double Tr = U(rng), a = U(rng), tb = U(rng);
    double d = Tr - tb;
    double expect =
        a * d * d * (Tr * Tr + (2.0 / 3.0) * tb * Tr + tb * tb / 3.0);
    CHECK(relative_helmholtz_radiation(Tr, a, tb) ==
          doctest::Approx(expect).epsilon(1e-12));
  }

  CHECK_THROWS_AS(relative_helmholtz_radiation(0.0, 1.0, 1.0),
                  NonPositiveState);
}

TEST_CASE("coercivity constants and sandwich inequalities") {
  Eos eos = make_ideal_gas_eos(1.0, 1.0);
  Equilibrium eq;
  CoercivityConstants cc = coercivity_constants(eos, eq, 256);

  CHECK(std::abs(cc.anchor_radiation - 2.0) <= 1e-8);
  CHECK(cc.C3 == doctest::Approx(0.9167).epsilon(1e-2));
  CHECK(cc.C1 > 0.0);
  CHECK(cc.C2 >= cc.C1);
  CHECK(cc.C4 >= cc.C3);
  CHECK(cc.anchor_matter_min > 0.0);

  // Independent re-verification of the sandwich bounds on fresh points.
  // Sampling stays a few grid cells inside the boundary: the constants are
  // certified on the inset grid and the ratios are monotone toward the edges.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(0.55, 1.95);
  for (int trial = 0; trial < 200; ++trial) {
    double rho = U(rng), theta = U(rng);
    double d2 = (rho - 1.0) * (rho - 1.0) + (theta - 1.0) * (theta - 1.0);
    double F = relative_helmholtz_matter(rho, theta, eos, eq);
    CHECK(F >= (cc.C1 - 1e-3) * d2);
    CHECK(F <= (cc.C2 + 1e-3) * d2);

    double Tr = U(rng);
    double G = relative_helmholtz_radiation(Tr, 1.0, 1.0);
    double e2 = (Tr - 1.0) * (Tr - 1.0);
    CHECK(G >= (cc.C3 - 1e-3) * e2);
    CHECK(G <= (cc.C4 + 1e-3) * e2);
  }

  CHECK_THROWS_AS(coercivity_constants(eos, eq, 8), Error);
}

TEST_CASE("coercivity anchor tracks the equilibrium temperature") {
  Eos eos = make_ideal_gas_eos(1.0, 1.0);
  PhysParams params;
  Equilibrium eq;
  eq.theta_bar = 2.0;
  eq.Er_bar = params.a * 16.0;
  CoercivityConstants cc = coercivity_constants(eos, eq, 64);
  CHECK(std::abs(cc.anchor_radiation - 8.0) <= 1e-8);  // 2 a theta_bar^2
}

TEST_CASE("relative-entropy integral") {
  Eos eos = make_ideal_gas_eos(1.0, 1.0);
  Equilibrium eq;
  PhysParams params;
  const int n = 8;
  const double L = 2.0;
  const double V = L * L * L;

  Field base =
      uniform_state(n, L, 1.0, Vec3::Zero(), 1.0, 1.0, Vec3(1, 0, 0));
  CHECK(std::abs(relative_entropy_eta(base, eos, eq, params)) <= 1e-13);

  // Uniform radiation excursion Tr = 2 (Er = 16): eta = 17/3 per unit volume.
  Field rad = uniform_state(n, L, 1.0, Vec3::Zero(), 1.0, 16.0, Vec3::Zero());
  CHECK(relative_entropy_eta(rad, eos, eq, params) ==
        doctest::Approx(V * 17.0 / 3.0).epsilon(1e-12));

  // Extended variant adds kinetic and magnetic energy densities.
  Field mov =
      uniform_state(n, L, 1.0, Vec3(1, 0, 0), 1.0, 1.0, Vec3(0, 2, 0));
  double plain = relative_entropy_eta(mov, eos, eq, params);
  double ext = relative_entropy_eta(mov, eos, eq, params, true);
  CHECK(ext - plain ==
        doctest::Approx(V * (0.5 + 4.0 / (2.0 * params.mu))).epsilon(1e-12));

  Field bad = base;
  bad.at(0, 0, 0, 0) = -1.0;
  CHECK_THROWS_AS(relative_entropy_eta(bad, eos, eq, params), NonPositiveState);
}

TEST_CASE("entropy production at equilibrium and under pure relaxation") {
  Eos eos = make_ideal_gas_eos(1.0, 1.0);
  PhysParams params;
  const int n = 8;
  const double L = 2.0;
  const double V = L * L * L;

  Field base =
      uniform_state(n, L, 1.0, Vec3::Zero(), 1.0, 1.0, Vec3(0.3, 0, 0));
  ProductionTerms pt = entropy_production(base, eos, params);
  CHECK(std::abs(pt.heat) <= 1e-12);
  CHECK(std::abs(pt.radiative) <= 1e-12);
  CHECK(std::abs(pt.relaxation) <= 1e-12);
  CHECK(std::abs(pt.ohmic) <= 1e-12);
  CHECK(std::abs(pt.damping) <= 1e-12);

  // theta = 1, Tr = 2: density (theta-Tr)^2 (theta+Tr)(theta^2+Tr^2)/(theta Tr).
  Field relax =
      uniform_state(n, L, 1.0, Vec3::Zero(), 1.0, 16.0, Vec3::Zero());
  ProductionTerms pr = entropy_production(relax, eos, params);
  CHECK(pr.relaxation == doctest::Approx(7.5 * V).epsilon(1e-12));
  CHECK(std::abs(pr.heat) <= 1e-12);
  CHECK(std::abs(pr.ohmic) <= 1e-12);

  // Velocity damping scales with nu |u|^2 / theta.
  Field mov =
      uniform_state(n, L, 1.0, Vec3(0, 2, 0), 1.0, 1.0, Vec3::Zero());
  ProductionTerms pm = entropy_production(mov, eos, params);
  CHECK(pm.damping == doctest::Approx(4.0 * V).epsilon(1e-12));

  Field bad = base;
  bad.at(0, 0, 0, 4) = -1.0;
  CHECK_THROWS_AS(entropy_production(bad, eos, params), NonPositiveState);
}

TEST_CASE("production terms are non-negative on random positive snapshots") {
  Eos eos = make_ideal_gas_eos(1.0, 1.0);
  PhysParams params;
  const int n = 8;
  const double L = 2.0 * M_PI;

  std::mt19937 rng(101);
  std::uniform_int_distribution<unsigned> S(0, 1u << 30);
  for (int trial = 0; trial < 25; ++trial) {
    Field pert = random_band_limited_field(n, L, 3.0, S(rng));
    double amp = 0.0;
    for (double v : pert.data) amp = std::max(amp, std::abs(v));
    Field state =
        uniform_state(n, L, 1.0, Vec3::Zero(), 1.0, 1.0, Vec3(1, 0, 0));
    for (size_t p = 0; p < state.data.size(); ++p)
      state.data[p] += 0.2 * pert.data[p] / amp;
    ProductionTerms pt = entropy_production(state, eos, params);
    CHECK(pt.heat >= 0.0);
    CHECK(pt.radiative >= 0.0);
    CHECK(pt.radiative_er_form >= 0.0);
    CHECK(pt.relaxation >= 0.0);
    CHECK(pt.ohmic >= 0.0);
    CHECK(pt.damping >= 0.0);
  }
}
