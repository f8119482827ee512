#include "radmhd/stability.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace radmhd {

namespace {

constexpr double kRankTol = 1e-10;

void require_unit(const Vec3& xi) {
  if (std::abs(xi.norm() - 1.0) > 1e-12)
    throw Error("xi must be a unit vector");
}

Mat9 a0_inv(const SystemMatrices& sys) {
  return sys.A0.diagonal().cwiseInverse().asDiagonal();
}

// Orthonormal basis of ker B(xi), columns of the returned matrix.
Eigen::MatrixXd kernel_basis(const Mat9& B) {
  Eigen::JacobiSVD<Mat9> svd(B, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv(0);
  int rank = 0;
  for (int i = 0; i < kDim; ++i)
    if (sv(i) > kRankTol * smax) ++rank;
  if (smax == 0.0) rank = 0;
  return svd.matrixV().rightCols(kDim - rank);
}

}  // namespace

std::vector<Vec3> fibonacci_sphere(int n, double rot) {
  const double golden = std::numbers::phi;
  std::vector<Vec3> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    double z = 1.0 - (2.0 * i + 1.0) / n;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double phi = 2.0 * std::numbers::pi * (std::fmod(i * golden, 1.0)) + rot;
    pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return pts;
}

SKReport sk_check(const SystemMatrices& sys, const Vec3& xi, double angle_tol) {
  require_unit(xi);
  FourierSymbol f = fourier_symbol(sys, xi);

  // Generalized symmetric problem A(xi) X = lambda A0 X in definite form:
  // with Y = A0^{1/2} X it becomes S Y = lambda Y, S = A0^{-1/2} A A0^{-1/2}.
  Vec9 d = sys.A0.diagonal();
  Vec9 dh = d.cwiseSqrt();
  Vec9 dhi = dh.cwiseInverse();
  Mat9 S = dhi.asDiagonal() * f.Axi * dhi.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Mat9> es(S);
  if (es.info() != Eigen::Success)
    throw EigenFailure("symmetric eigensolve did not converge");

  Eigen::MatrixXd kerB = kernel_basis(f.Bxi);

  SKReport rep;
  rep.xi = xi;
  rep.min_angle = std::numbers::pi / 2.0;
  rep.holds = true;
  if (kerB.cols() == 0) return rep;

  const auto& lam = es.eigenvalues();
  double specrad = std::max(std::abs(lam(0)), std::abs(lam(kDim - 1)));
  double cluster_tol = 1e-8 * std::max(specrad, 1e-300);

  int i = 0;
  while (i < kDim) {
    int j = i + 1;
    while (j < kDim && lam(j) - lam(i) <= cluster_tol) ++j;
    // Eigenspace basis in X coordinates, re-orthonormalized.
    Eigen::MatrixXd Xc = dhi.asDiagonal() * es.eigenvectors().middleCols(i, j - i);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(Xc);
    Eigen::MatrixXd Qc =
        qr.householderQ() * Eigen::MatrixXd::Identity(kDim, j - i);

    Eigen::JacobiSVD<Eigen::MatrixXd> psvd(
        Qc.transpose() * kerB, Eigen::ComputeFullU | Eigen::ComputeFullV);
    double cosang = std::min(1.0, psvd.singularValues()(0));
    // acos alone loses half the mantissa near 1; recover small angles from
    // the orthogonal residual of the closest kernel vector.
    Eigen::VectorXd v = kerB * psvd.matrixV().col(0);
    double sinang = (v - Qc * (Qc.transpose() * v)).norm();
    double angle = std::atan2(sinang, cosang);
    if (angle < rep.min_angle) {
      rep.min_angle = angle;
      if (angle <= 1e-8) {
        Vec9 w = Qc * psvd.matrixU().col(0);
        w.normalize();
        rep.witness = {lam(i), w};
      }
    }
    i = j;
  }
  rep.holds = rep.min_angle > angle_tol;
  if (rep.holds) rep.witness.reset();
  return rep;
}

SweepReport sk_sweep(const SystemMatrices& sys, int n_dirs) {
  if (n_dirs < 1) throw Error("sk_sweep requires n_dirs >= 1");
  std::vector<Vec3> dirs = fibonacci_sphere(n_dirs);
  for (int j = 0; j < 3; ++j) {
    dirs.push_back(Vec3::Unit(j));
    dirs.push_back(-Vec3::Unit(j));
  }
  if (sys.params.nu == 0.0 && sys.eq.B_bar.norm() > 0.0) {
    // Adversarial directions perpendicular to B_bar.
    Vec3 b = sys.eq.B_bar.normalized();
    int m;
    b.cwiseAbs().minCoeff(&m);
    Vec3 v1 = (Vec3::Unit(m) - Vec3::Unit(m).dot(b) * b).normalized();
    Vec3 v2 = b.cross(v1);
    const int n_adv = 16;
    for (int k = 0; k < n_adv; ++k) {
      double phi = 2.0 * std::numbers::pi * k / n_adv;
      dirs.push_back((std::cos(phi) * v1 + std::sin(phi) * v2).normalized());
    }
  }

  SweepReport rep;
  rep.holds_everywhere = true;
  rep.worst_angle = std::numbers::pi;
  rep.n_checked = 0;
  rep.n_failed = 0;
  for (const auto& xi : dirs) {
    SKReport r = sk_check(sys, xi);
    ++rep.n_checked;
    if (r.min_angle < rep.worst_angle) {
      rep.worst_angle = r.min_angle;
      rep.worst_xi = xi;
    }
    if (!r.holds) {
      rep.holds_everywhere = false;
      ++rep.n_failed;
    }
    rep.reports.push_back(std::move(r));
  }
  return rep;
}

std::vector<std::pair<double, Vec9>> kernel_eigenpairs_nu0(
    const SystemMatrices& sys, const Vec3& xi, const Vec3& B_bar) {
  if (sys.params.nu > 0.0)
    throw DampingPresent("kernel_eigenpairs_nu0 requires nu = 0");
  Vec3 xin = xi.normalized();
  if (std::abs(xin.dot(B_bar)) > 1e-12 * (1.0 + B_bar.norm())) return {};

  // Deterministic orthonormal pair perpendicular to xi: start from the axis
  // least aligned with xi.
  int m;
  xin.cwiseAbs().minCoeff(&m);
  Vec3 v1 = (Vec3::Unit(m) - Vec3::Unit(m).dot(xin) * xin).normalized();
  Vec3 v2 = xin.cross(v1);

  std::vector<std::pair<double, Vec9>> out;
  for (const Vec3& v : {v1, v2}) {
    Vec9 X = Vec9::Zero();
    X.segment<3>(1) = v;
    out.emplace_back(0.0, X);
  }
  return out;
}

int kalman_rank(const SystemMatrices& sys, const Vec3& xi) {
  require_unit(xi);
  FourierSymbol f = fourier_symbol(sys, xi);
  Mat9 M = a0_inv(sys) * f.Axi;

  Eigen::Matrix<double, 9 * kDim, kDim> stack;
  Mat9 BMk = f.Bxi;
  for (int k = 0; k < kDim; ++k) {
    stack.middleRows<kDim>(k * kDim) = BMk;
    BMk = BMk * M;
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 9 * kDim, kDim>> svd(stack);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < kDim; ++i)
    if (sv(i) > kRankTol * sv(0)) ++rank;
  return rank;
}

DecayPoint spectral_abscissa(const SystemMatrices& sys, const Vec3& xi) {
  FourierSymbol f = fourier_symbol(sys, xi);
  CMat9 G = a0_inv(sys).cast<std::complex<double>>() * f.Exi;
  Eigen::ComplexEigenSolver<CMat9> ces(G);
  if (ces.info() != Eigen::Success)
    throw EigenFailure("complex eigensolve did not converge");

  DecayPoint p;
  p.xi = xi;
  p.abscissa = ces.eigenvalues().real().maxCoeff();
  Eigen::JacobiSVD<CMat9> svd(ces.eigenvectors());
  const auto& sv = svd.singularValues();
  if (sv(kDim - 1) < 1e-8 * sv(0))
    p.cond = std::numeric_limits<double>::infinity();
  else
    p.cond = sv(0) / sv(kDim - 1);
  return p;
}

DecayMap decay_map(const SystemMatrices& sys, const std::vector<double>& mags,
                   const std::vector<Vec3>& dirs) {
  DecayMap map;
  std::vector<double> sorted_mags = mags;
  std::sort(sorted_mags.begin(), sorted_mags.end());
  for (const auto& dir : dirs) {
    Vec3 d = dir.normalized();
    std::vector<double> lx, ly;
    double plateau = 0.0;
    for (double m : sorted_mags) {
      DecayPoint p = spectral_abscissa(sys, m * d);
      map.points.push_back(p);
      plateau = p.abscissa;
      if (!sorted_mags.empty() && m <= 10.0 * sorted_mags.front() &&
          std::abs(p.abscissa) > 0.0) {
        lx.push_back(std::log10(m));
        ly.push_back(std::log10(std::abs(p.abscissa)));
      }
    }
    // Least-squares slope over the lowest decade.
    double slope = 0.0;
    if (lx.size() >= 2) {
      double n = static_cast<double>(lx.size());
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
      }
      slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    if (!sorted_mags.empty()) {
      map.low_freq_slope.push_back(slope);
      map.plateau.push_back(plateau);
    }
  }
  return map;
}

namespace {

// Index helpers for the skew parametrization: 36 strictly-lower entries per
// matrix, S_j = L_j - L_j^T, K_j = S_j A0^{-1}.
std::array<Mat9, 3> params_to_K(const std::vector<double>& p, const Vec9& a0d) {
  std::array<Mat9, 3> K;
  for (int j = 0; j < 3; ++j) {
    Mat9 S = Mat9::Zero();
    int idx = j * 36;
    for (int r = 1; r < kDim; ++r)
      for (int c = 0; c < r; ++c) {
        double v = p[idx++];
        S(r, c) = v;
        S(c, r) = -v;
      }
    K[j] = S * a0d.cwiseInverse().asDiagonal();
  }
  return K;
}

double training_margin(const std::array<Mat9, 3>& K,
                       const std::vector<Mat9>& Aw,
                       const std::vector<Mat9>& Bw,
                       const std::vector<Vec3>& omegas) {
  double margin = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < omegas.size(); ++i) {
    const Vec3& w = omegas[i];
    Mat9 Kw = w(0) * K[0] + w(1) * K[1] + w(2) * K[2];
    Mat9 KA = Kw * Aw[i];
    Mat9 Msym = 0.5 * (KA + KA.transpose()) + 0.5 * (Bw[i] + Bw[i].transpose());
    Eigen::SelfAdjointEigenSolver<Mat9> es(Msym, Eigen::EigenvaluesOnly);
    margin = std::min(margin, es.eigenvalues().minCoeff());
  }
  return margin;
}

}  // namespace

Compensator find_compensator(const SystemMatrices& sys, int n_train,
                             int budget) {
  if (!(sys.params.nu > 0.0))
    throw Error("find_compensator requires nu > 0 (SK condition)");
  if (n_train < 12) throw Error("find_compensator requires n_train >= 12");

  std::vector<Vec3> omegas = fibonacci_sphere(n_train);
  std::vector<Mat9> Aw, Bw;
  Aw.reserve(omegas.size());
  Bw.reserve(omegas.size());
  for (const auto& w : omegas) {
    FourierSymbol f = fourier_symbol(sys, w);
    Aw.push_back(f.Axi);
    Bw.push_back(f.Bxi);
  }

  const Vec9 a0d = sys.A0.diagonal();
  int evals = 0;
  auto objective = [&](const std::vector<double>& p) {
    ++evals;
    return training_margin(params_to_K(p, a0d), Aw, Bw, omegas);
  };

  // Seed: couple density to velocity along omega; this is the classical
  // rank-one compensation of the undamped density direction.
  std::vector<double> p(108, 0.0);
  for (int j = 0; j < 3; ++j) {
    // strictly-lower index of entry (row j+1, col 0) within block j
    int idx = j * 36 + (j + 1) * j / 2;
    p[idx] = -0.25;
  }

  double best = objective(p);
  double step = 0.25;
  while (evals < budget && step > 1e-7) {
    bool improved = false;
    for (size_t i = 0; i < p.size() && evals < budget; ++i) {
      for (double sgn : {1.0, -1.0}) {
        std::vector<double> q = p;
        q[i] += sgn * step;
        double v = objective(q);
        if (v > best) {
          best = v;
          p = std::move(q);
          improved = true;
          break;
        }
      }
    }
    // Global multiplier line search.
    for (double s : {0.5, 0.75, 1.5, 2.0}) {
      if (evals >= budget) break;
      std::vector<double> q = p;
      for (double& v : q) v *= s;
      double val = objective(q);
      if (val > best) {
        best = val;
        p = std::move(q);
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }

  Compensator comp;
  comp.K = params_to_K(p, a0d);
  comp.margin = best;
  comp.found = best > 0.0;
  return comp;
}

double verify_compensator(const Compensator& K, const SystemMatrices& sys,
                          int n_test) {
  std::vector<Vec3> omegas = fibonacci_sphere(n_test, 0.7);
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& w : omegas) {
    Mat9 Kw = K.at(w);
    // Oddness is exact in the linear ansatz.
    if ((K.at(-w) + Kw).cwiseAbs().maxCoeff() != 0.0)
      throw Error("compensator oddness violated");
    Mat9 KA0 = Kw * sys.A0;
    double skew = (KA0 + KA0.transpose()).cwiseAbs().maxCoeff();
    if (skew > 1e-12 * (1.0 + KA0.cwiseAbs().maxCoeff()))
      throw Error("compensator skewness violated");

    FourierSymbol f = fourier_symbol(sys, w);
    Mat9 KA = Kw * f.Axi;
    Mat9 Msym = 0.5 * (KA + KA.transpose()) +
                0.5 * (f.Bxi + f.Bxi.transpose());
    Eigen::SelfAdjointEigenSolver<Mat9> es(Msym, Eigen::EigenvaluesOnly);
    margin = std::min(margin, es.eigenvalues().minCoeff());
  }
  return margin;
}

}  // namespace radmhd
