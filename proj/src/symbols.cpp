#include "radmhd/symbols.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace radmhd {

namespace {

// Flux matrices A_1, A_2, A_3 of the linearized system.
std::array<Mat9, 3> build_fluxes(const LinCoeffs& c, const Equilibrium& eq,
                                 const PhysParams& params) {
  const double mu = params.mu;
  const double B1 = eq.B_bar(0), B2 = eq.B_bar(1), B3 = eq.B_bar(2);

  std::array<Mat9, 3> A;
  for (auto& m : A) m.setZero();

  Mat9& A1 = A[0];
  A1(0, 1) = eq.rho_bar;
  A1(1, 0) = c.alpha_p;
  A1(1, 4) = c.beta_p;
  A1(1, 5) = c.beta_pp;
  A1(1, 7) = B2 / mu;
  A1(1, 8) = B3 / mu;
  A1(2, 7) = -B1 / mu;
  A1(3, 8) = -B1 / mu;
  A1(4, 1) = c.gamma_p;
  A1(5, 1) = c.gamma_pp;
  A1(7, 1) = B2;
  A1(7, 2) = -B1;
  A1(8, 1) = B3;
  A1(8, 3) = -B1;

  Mat9& A2 = A[1];
  A2(0, 2) = eq.rho_bar;
  A2(1, 6) = -B2 / mu;
  A2(2, 0) = c.alpha_p;
  A2(2, 4) = c.beta_p;
  A2(2, 5) = c.beta_pp;
  A2(2, 6) = B1 / mu;
  A2(2, 8) = B3 / mu;
  A2(3, 8) = -B2 / mu;
  A2(4, 2) = c.gamma_p;
  A2(5, 2) = c.gamma_pp;
  A2(6, 1) = -B2;
  A2(6, 2) = B1;
  A2(8, 2) = B3;
  A2(8, 3) = -B2;

  Mat9& A3 = A[2];
  A3(0, 3) = eq.rho_bar;
  A3(1, 6) = -B3 / mu;
  A3(2, 7) = -B3 / mu;
  A3(3, 0) = c.alpha_p;
  A3(3, 4) = c.beta_p;
  A3(3, 5) = c.beta_pp;
  A3(3, 6) = B1 / mu;
  A3(3, 7) = B2 / mu;
  A3(4, 3) = c.gamma_p;
  A3(5, 3) = c.gamma_pp;
  A3(6, 1) = -B3;
  A3(6, 3) = B1;
  A3(7, 2) = -B3;
  A3(7, 3) = B2;

  return A;
}

double max_entry_asymmetry(const Mat9& m) {
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

double symmetric_part_min_eig(const Mat9& m) {
  Mat9 s = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Mat9> es(s, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

SystemMatrices build_system(const LinCoeffs& coeffs, const Equilibrium& eq,
                            const PhysParams& params) {
  SystemMatrices sys;
  sys.params = params;
  sys.eq = eq;
  sys.coeffs = coeffs;

  sys.A = build_fluxes(coeffs, eq, params);

  sys.D.setZero();
  sys.D(4, 4) = coeffs.delta_p;
  sys.D(5, 5) = coeffs.delta_pp;
  sys.D(6, 6) = sys.D(7, 7) = sys.D(8, 8) = params.lambda();

  sys.Brelax.setZero();
  sys.Brelax(1, 1) = sys.Brelax(2, 2) = sys.Brelax(3, 3) = params.nu;
  sys.Brelax(4, 4) = coeffs.zeta;
  sys.Brelax(4, 5) = -coeffs.eta;
  sys.Brelax(5, 4) = -coeffs.pi;
  sys.Brelax(5, 5) = params.sigma_a;

  sys.A0.setZero();
  sys.A0(0, 0) = params.mu * coeffs.alpha_p / eq.rho_bar;
  sys.A0(1, 1) = sys.A0(2, 2) = sys.A0(3, 3) = params.mu;
  sys.A0(4, 4) = params.mu * coeffs.beta_p / coeffs.gamma_p;
  sys.A0(5, 5) = params.mu * coeffs.beta_pp / coeffs.gamma_pp;
  sys.A0(6, 6) = sys.A0(7, 7) = sys.A0(8, 8) = 1.0;

  for (int j = 0; j < 3; ++j) sys.At[j] = sys.A0 * sys.A[j];
  sys.Dt = sys.A0 * sys.D;
  sys.Bt = sys.A0 * sys.Brelax;
  return sys;
}

FourierSymbol fourier_symbol(const SystemMatrices& sys, const Vec3& xi) {
  FourierSymbol f;
  f.xi = xi;
  f.Axi = xi(0) * sys.At[0] + xi(1) * sys.At[1] + xi(2) * sys.At[2];
  f.Bxi = sys.Bt + xi.squaredNorm() * sys.Dt;
  f.Exi = -f.Bxi.cast<std::complex<double>>() -
          std::complex<double>(0.0, 1.0) * f.Axi.cast<std::complex<double>>();
  return f;
}

AuditReport consistency_audit(const SystemMatrices& sys) {
  AuditReport rep;
  rep.bt_asym_defect = max_entry_asymmetry(sys.Bt);
  rep.bt_sym_min_eig = symmetric_part_min_eig(sys.Bt);

  const double scale = 1.0 + sys.Bt.cwiseAbs().maxCoeff();
  rep.bt_symmetric = rep.bt_asym_defect <= 1e-12 * scale;
  rep.bt_psd = rep.bt_sym_min_eig >= -1e-12 * scale;

  for (double mag : {0.0, 1.0, 10.0}) {
    Mat9 Bxi = sys.Bt + mag * mag * sys.Dt;
    rep.bxi.push_back(
        {mag, max_entry_asymmetry(Bxi), symmetric_part_min_eig(Bxi)});
  }
  return rep;
}

NonlinearCoeffs nonlinear_coefficients(const FullState& V,
                                       const PhysParams& params, const Eos& eos,
                                       const Vec3& curlB) {
  if (!(V.rho > 0.0) || !(V.theta > 0.0))
    throw NonPositiveState("nonlinear_coefficients: rho and theta must be positive");

  const double rho = V.rho, theta = V.theta;
  const double mu = params.mu;
  const double B1 = V.B(0), B2 = V.B(1), B3 = V.B(2);
  const double u1 = V.u(0), u2 = V.u(1), u3 = V.u(2);

  const double p_rho = eos.p_rho(rho, theta);
  const double p_theta = eos.p_theta(rho, theta);
  const double Cv = eos.e_theta(rho, theta);

  const double ah = p_rho / rho;       // alpha-hat
  const double bh = p_theta / rho;     // beta-hat
  const double bhh = 1.0 / (3.0 * rho);
  const double gh = p_theta / Cv;      // gamma-hat
  const double ghh = (4.0 / 3.0) * V.Er;

  NonlinearCoeffs nc;
  for (auto& m : nc.Ahat) m.setZero();

  Mat9& A1 = nc.Ahat[0];
  A1(0, 1) = rho;
  A1(1, 0) = ah;
  A1(1, 4) = bh;
  A1(1, 5) = bhh;
  A1(1, 7) = B2 / (rho * mu);
  A1(1, 8) = B3 / (rho * mu);
  A1(2, 7) = -B1 / (rho * mu);
  A1(3, 8) = -B1 / (rho * mu);
  A1(4, 1) = gh;
  A1(5, 1) = ghh;
  A1(5, 5) = u1;
  A1(6, 6) = u1;
  A1(7, 1) = B2;
  A1(7, 2) = -B1;
  A1(7, 7) = u1;
  A1(8, 1) = B3;
  A1(8, 3) = -B1;
  A1(8, 8) = u1;

  Mat9& A2 = nc.Ahat[1];
  A2(0, 2) = rho;
  A2(1, 6) = -B2 / (rho * mu);
  A2(2, 0) = ah;
  A2(2, 4) = bh;
  A2(2, 5) = bhh;
  A2(2, 6) = B1 / (rho * mu);
  A2(2, 8) = B3 / (rho * mu);
  A2(3, 8) = -B2 / (rho * mu);
  A2(4, 2) = gh;
  A2(5, 2) = ghh;
  A2(5, 5) = u2;
  A2(6, 1) = -B2;
  A2(6, 2) = B1;
  A2(6, 6) = u2;
  A2(7, 7) = u2;
  A2(8, 2) = B3;
  A2(8, 3) = -B2;
  A2(8, 8) = u2;

  Mat9& A3 = nc.Ahat[2];
  A3(0, 3) = rho;
  A3(1, 6) = -B3 / (rho * mu);
  A3(2, 7) = -B3 / (rho * mu);
  A3(3, 0) = ah;
  A3(3, 4) = bh;
  A3(3, 5) = bhh;
  A3(3, 6) = B1 / (rho * mu);
  A3(3, 7) = B2 / (rho * mu);
  A3(4, 3) = gh;
  A3(5, 3) = ghh;
  A3(5, 5) = u3;
  A3(6, 1) = -B3;
  A3(6, 3) = B1;
  A3(6, 6) = u3;
  A3(7, 2) = -B3;
  A3(7, 3) = B2;
  A3(7, 7) = u3;
  A3(8, 8) = u3;

  nc.Dhat.setZero();
  nc.Dhat(4, 4) = params.kappa / (rho * Cv);
  nc.Dhat(5, 5) = 1.0 / (3.0 * params.sigma_s);
  nc.Dhat(6, 6) = nc.Dhat(7, 7) = nc.Dhat(8, 8) = params.lambda();

  const double relax = params.sigma_a * (params.a * std::pow(theta, 4) - V.Er);
  nc.Bhat.setZero();
  nc.Bhat(1) = -params.nu * u1 / rho;
  nc.Bhat(2) = -params.nu * u2 / rho;
  nc.Bhat(3) = -params.nu * u3 / rho;
  nc.Bhat(4) = -relax / (rho * Cv) +
               (params.lambda() / mu) * curlB.squaredNorm() / (rho * Cv) +
               params.nu * V.u.squaredNorm() / (rho * Cv);
  nc.Bhat(5) = relax;
  return nc;
}

}  // namespace radmhd
