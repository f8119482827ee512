#include "radmhd/entropy.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace radmhd {

namespace {

double helmholtz_matter(double rho, double theta, const Eos& eos,
                        double theta_bar) {
  return rho * (eos.e(rho, theta) - theta_bar * eos.s(rho, theta));
}

double dH_drho_at_anchor(const Eos& eos, const Equilibrium& eq) {
  const double rb = eq.rho_bar, tb = eq.theta_bar;
  if (eos.ideal) {
    // H = rho Cv theta - theta_bar rho (Cv ln theta - R ln rho)
    return eos.Cv * tb - tb * (eos.Cv * std::log(tb) - eos.R * std::log(rb)) +
           tb * eos.R;
  }
  const double h = 1e-6 * rb;
  return (helmholtz_matter(rb + h, tb, eos, tb) -
          helmholtz_matter(rb - h, tb, eos, tb)) /
         (2.0 * h);
}

}  // namespace

double relative_helmholtz_matter(double rho, double theta, const Eos& eos,
                                 const Equilibrium& eq) {
  if (!(rho > 0.0) || !(theta > 0.0))
    throw NonPositiveState("relative_helmholtz_matter: state must be positive");
  const double tb = eq.theta_bar;
  return helmholtz_matter(rho, theta, eos, tb) -
         (rho - eq.rho_bar) * dH_drho_at_anchor(eos, eq) -
         helmholtz_matter(eq.rho_bar, tb, eos, tb);
}

double relative_helmholtz_radiation(double Tr, double a, double theta_bar) {
  if (!(Tr > 0.0))
    throw NonPositiveState("relative_helmholtz_radiation: Tr must be positive");
  const double T3 = Tr * Tr * Tr;
  return a * T3 * Tr - theta_bar * (4.0 / 3.0) * a * T3 +
         (a / 3.0) * std::pow(theta_bar, 4);
}

CoercivityConstants coercivity_constants(const Eos& eos, const Equilibrium& eq,
                                         int grid_n) {
  if (grid_n < 16) throw Error("coercivity_constants requires grid_n >= 16");
  const double rb = eq.rho_bar, tb = eq.theta_bar;
  // Radiation Planck coefficient recovered from the compatibility condition.
  const double a = eq.Er_bar / std::pow(tb, 4);

  CoercivityConstants cc;

  // Anchor limits: second-order Taylor ratio.
  {
    Eigen::Matrix2d hess;
    if (eos.ideal) {
      hess << tb * eos.R / rb, 0.0, 0.0, rb * eos.Cv / tb;
    } else {
      const double hr = 1e-4 * rb, ht = 1e-4 * tb;
      auto F = [&](double r, double t) {
        return relative_helmholtz_matter(r, t, eos, eq);
      };
      hess(0, 0) = (F(rb + hr, tb) - 2 * F(rb, tb) + F(rb - hr, tb)) / (hr * hr);
      hess(1, 1) = (F(rb, tb + ht) - 2 * F(rb, tb) + F(rb, tb - ht)) / (ht * ht);
      hess(0, 1) = hess(1, 0) =
          (F(rb + hr, tb + ht) - F(rb + hr, tb - ht) - F(rb - hr, tb + ht) +
           F(rb - hr, tb - ht)) /
          (4 * hr * ht);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(hess);
    cc.anchor_matter_min = es.eigenvalues().minCoeff() / 2.0;
    cc.anchor_matter_max = es.eigenvalues().maxCoeff() / 2.0;
  }
  cc.anchor_radiation = 2.0 * a * tb * tb;  // H_r''(theta_bar)/2

  // Matter sandwich on the half-cell-inset grid of O1.
  double c1 = cc.anchor_matter_min, c2 = cc.anchor_matter_max;
  for (int i = 0; i < grid_n; ++i)
    for (int j = 0; j < grid_n; ++j) {
      double rho = 0.5 * rb + 1.5 * rb * (i + 0.5) / grid_n;
      double theta = 0.5 * tb + 1.5 * tb * (j + 0.5) / grid_n;
      double d2 = (rho - rb) * (rho - rb) + (theta - tb) * (theta - tb);
      if (d2 == 0.0) continue;
      double ratio = relative_helmholtz_matter(rho, theta, eos, eq) / d2;
      c1 = std::min(c1, ratio);
      c2 = std::max(c2, ratio);
    }
  cc.C1 = c1;
  cc.C2 = c2;

  // Radiation sandwich on O2.
  double c3 = cc.anchor_radiation, c4 = cc.anchor_radiation;
  for (int i = 0; i < grid_n; ++i) {
    double Tr = 0.5 * tb + 1.5 * tb * (i + 0.5) / grid_n;
    double d2 = (Tr - tb) * (Tr - tb);
    if (d2 == 0.0) continue;
    double ratio = relative_helmholtz_radiation(Tr, a, tb) / d2;
    c3 = std::min(c3, ratio);
    c4 = std::max(c4, ratio);
  }
  cc.C3 = c3;
  cc.C4 = c4;

  if (!(cc.C1 > 0.0) || !(cc.C3 > 0.0))
    throw NonCoercive("coercivity infimum is non-positive");
  return cc;
}

double relative_entropy_eta(const Field& state, const Eos& eos,
                            const Equilibrium& eq, const PhysParams& params,
                            bool extended) {
  const int n = state.n;
  const double a = params.a;
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double rho = state.at(i, j, k, 0);
        double theta = state.at(i, j, k, 4);
        double Er = state.at(i, j, k, 5);
        if (!(rho > 0.0) || !(theta > 0.0) || !(Er > 0.0))
          throw NonPositiveState("relative_entropy_eta: non-positive state");
        double Tr = std::pow(Er / a, 0.25);
        double eta = relative_helmholtz_matter(rho, theta, eos, eq) +
                     relative_helmholtz_radiation(Tr, a, eq.theta_bar);
        if (extended) {
          double u2 = 0.0, B2 = 0.0;
          for (int c = 1; c <= 3; ++c) u2 += state.at(i, j, k, c) * state.at(i, j, k, c);
          for (int c = 6; c <= 8; ++c) B2 += state.at(i, j, k, c) * state.at(i, j, k, c);
          eta += 0.5 * rho * u2 + B2 / (2.0 * params.mu);
        }
        sum += eta;
      }
  const double cell = std::pow(state.L / n, 3);
  return sum * cell;
}

ProductionTerms entropy_production(const Field& state,
                                   const FieldGradients& grads, const Eos& eos,
                                   const PhysParams& params) {
  (void)eos;
  const int n = state.n;
  ProductionTerms pt{0, 0, 0, 0, 0, 0};
  const double a = params.a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double theta = state.at(i, j, k, 4);
        double Er = state.at(i, j, k, 5);
        if (!(theta > 0.0) || !(Er > 0.0))
          throw NonPositiveState("entropy_production: non-positive state");
        double Tr = std::pow(Er / a, 0.25);

        double gtheta2 = 0.0, gEr2 = 0.0, u2 = 0.0;
        for (int ax = 0; ax < 3; ++ax) {
          gtheta2 += grads.at(i, j, k, 4, ax) * grads.at(i, j, k, 4, ax);
          gEr2 += grads.at(i, j, k, 5, ax) * grads.at(i, j, k, 5, ax);
        }
        for (int c = 1; c <= 3; ++c)
          u2 += state.at(i, j, k, c) * state.at(i, j, k, c);
        // grad Tr = grad Er / (4 a Tr^3)
        double dTr = 4.0 * a * Tr * Tr * Tr;
        double gTr2 = gEr2 / (dTr * dTr);

        Vec3 curl(grads.at(i, j, k, 8, 1) - grads.at(i, j, k, 7, 2),
                  grads.at(i, j, k, 6, 2) - grads.at(i, j, k, 8, 0),
                  grads.at(i, j, k, 7, 0) - grads.at(i, j, k, 6, 1));

        pt.heat += params.kappa * gtheta2 / (theta * theta);
        pt.radiative += (4.0 * a / (3.0 * params.sigma_s)) * Tr * gTr2;
        pt.radiative_er_form += (4.0 * a / (3.0 * params.sigma_s)) * Tr * gEr2;
        double dth = theta - Tr;
        pt.relaxation += a * params.sigma_a * dth * dth * (theta + Tr) *
                         (theta * theta + Tr * Tr) / (theta * Tr);
        pt.ohmic += curl.squaredNorm() /
                    (params.sigma * params.mu * params.mu * theta);
        pt.damping += params.nu * u2 / theta;
      }
  const double cell = std::pow(state.L / n, 3);
  pt.heat *= cell;
  pt.radiative *= cell;
  pt.radiative_er_form *= cell;
  pt.relaxation *= cell;
  pt.ohmic *= cell;
  pt.damping *= cell;
  return pt;
}

ProductionTerms entropy_production(const Field& state, const Eos& eos,
                                   const PhysParams& params) {
  return entropy_production(state, spectral_gradients(state), eos, params);
}

}  // namespace radmhd
