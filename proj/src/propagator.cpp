#include "radmhd/propagator.hpp"

#include <fftw3.h>

#include <cmath>
#include <random>

namespace radmhd {

namespace {

void check_grid(int n) {
  if (n < 4) throw GridTooSmall("grid requires n >= 4");
  if ((n & (n - 1)) != 0) throw Error("grid size must be a power of two");
}

size_t point_index(int n, int i, int j, int k) {
  return (static_cast<size_t>(i) * n + j) * n + k;
}

// Complex 3D transform of one component plane, in-place on buf.
void fft3(std::vector<std::complex<double>>& buf, int n, int sign) {
  fftw_complex* p = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_plan plan = fftw_plan_dft_3d(n, n, n, p, p, sign, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

}  // namespace

Field::Field(int n_, double L_) : n(n_), L(L_) {
  check_grid(n_);
  if (!(L_ > 0.0)) throw Error("box edge L must be positive");
  data.assign(static_cast<size_t>(n) * n * n * kDim, 0.0);
}

Vec3 wavevector(int n, double L, int i, int j, int k) {
  double f = 2.0 * M_PI / L;
  return Vec3(f * kindex(n, i), f * kindex(n, j), f * kindex(n, k));
}

SpectralField forward(const Field& f) {
  check_grid(f.n);
  const int n = f.n;
  const size_t npts = static_cast<size_t>(n) * n * n;
  SpectralField s;
  s.n = n;
  s.L = f.L;
  s.data.assign(npts * kDim, 0.0);

  std::vector<std::complex<double>> buf(npts);
  for (int c = 0; c < kDim; ++c) {
    for (size_t p = 0; p < npts; ++p) buf[p] = f.data[p * kDim + c];
    fft3(buf, n, FFTW_FORWARD);
    const double norm = 1.0 / static_cast<double>(npts);
    for (size_t p = 0; p < npts; ++p) s.data[p * kDim + c] = buf[p] * norm;
  }
  return s;
}

Field inverse(const SpectralField& s, double* max_imag) {
  const int n = s.n;
  const size_t npts = static_cast<size_t>(n) * n * n;
  Field f(n, s.L);
  double resid = 0.0;

  std::vector<std::complex<double>> buf(npts);
  for (int c = 0; c < kDim; ++c) {
    for (size_t p = 0; p < npts; ++p) buf[p] = s.data[p * kDim + c];
    fft3(buf, n, FFTW_BACKWARD);
    for (size_t p = 0; p < npts; ++p) {
      f.data[p * kDim + c] = buf[p].real();
      resid = std::max(resid, std::abs(buf[p].imag()));
    }
  }
  if (max_imag) *max_imag = resid;
  return f;
}

CVec9 propagate_mode(const SystemMatrices& sys, const CVec9& U0hat,
                     const Vec3& xi, double t) {
  if (t < 0.0) throw Error("propagate_mode requires t >= 0");
  FourierSymbol f = fourier_symbol(sys, xi);
  CMat9 G = sys.A0.diagonal().cwiseInverse().asDiagonal().toDenseMatrix().cast<std::complex<double>>() * f.Exi;
  return expm(t * G) * U0hat;
}

Field project_divfree(const Field& f) {
  SpectralField s = forward(f);
  const int n = s.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec3 kv = wavevector(n, s.L, i, j, k);
        double k2 = kv.squaredNorm();
        if (k2 == 0.0) continue;
        Eigen::Vector3cd b(s.at(i, j, k, 6), s.at(i, j, k, 7),
                           s.at(i, j, k, 8));
        std::complex<double> kb = kv(0) * b(0) + kv(1) * b(1) + kv(2) * b(2);
        for (int c = 0; c < 3; ++c)
          s.at(i, j, k, 6 + c) -= kv(c) * kb / k2;
      }
  return inverse(s);
}

double max_divergence(const Field& f) {
  SpectralField s = forward(f);
  const int n = s.n;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec3 kv = wavevector(n, s.L, i, j, k);
        std::complex<double> kb = kv(0) * s.at(i, j, k, 6) +
                                  kv(1) * s.at(i, j, k, 7) +
                                  kv(2) * s.at(i, j, k, 8);
        worst = std::max(worst, std::abs(kb));
      }
  return worst;
}

namespace {

// Squared H^s-type sum over a component subset; with_gradient inserts the
// extra |k|^2 factor of a gradient norm.
double sob2(const SpectralField& s, double order, int c0, int c1,
            bool with_gradient) {
  const int n = s.n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec3 kv = wavevector(n, s.L, i, j, k);
        double k2 = kv.squaredNorm();
        double w = std::pow(1.0 + k2, order);
        if (with_gradient) w *= k2;
        double mag2 = 0.0;
        for (int c = c0; c <= c1; ++c) mag2 += std::norm(s.at(i, j, k, c));
        sum += w * mag2;
      }
  return sum * s.L * s.L * s.L;
}

// Squared H^{d-1} norm of the linearized relaxation quantities:
// theta - T_r ~ T - e_r/(4 a theta_bar^3), and u.
double relax2(const SpectralField& s, int d, const SystemMatrices& sys) {
  const int n = s.n;
  const double tr_coef =
      1.0 / (4.0 * sys.params.a * std::pow(sys.eq.theta_bar, 3));
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec3 kv = wavevector(n, s.L, i, j, k);
        double w = std::pow(1.0 + kv.squaredNorm(), d - 1);
        std::complex<double> diff =
            s.at(i, j, k, 4) - tr_coef * s.at(i, j, k, 5);
        double mag2 = std::norm(diff);
        for (int c = 1; c <= 3; ++c) mag2 += std::norm(s.at(i, j, k, c));
        sum += w * mag2;
      }
  return sum * s.L * s.L * s.L;
}

double grad2(const SpectralField& s, int d) {
  // |grad V|^2 in H^{d-1} over all components, plus the parabolic components
  // (T, e_r, b) one order higher.
  return sob2(s, d - 1, 0, kDim - 1, true) + sob2(s, d, 4, 4, true) +
         sob2(s, d, 5, 5, true) + sob2(s, d, 6, 8, true);
}

}  // namespace

Trajectory simulate(const SystemMatrices& sys, const Field& field0,
                    double t_end, int n_out, int d) {
  check_grid(field0.n);
  if (!(t_end > 0.0)) throw Error("simulate requires t_end > 0");
  if (n_out < 1) throw Error("simulate requires n_out >= 1");

  const int n = field0.n;
  const size_t npts = static_cast<size_t>(n) * n * n;
  SpectralField s0 = forward(field0);

  // Zero the unpaired Nyquist planes: they are self-conjugate and cannot stay
  // real under the odd part of the symbol.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (i == n / 2 || j == n / 2 || k == n / 2)
          for (int c = 0; c < kDim; ++c) s0.at(i, j, k, c) = 0.0;

  // Per-mode generators, cached for canonical (lexicographically first)
  // members of each conjugate pair.
  Mat9 A0inv = sys.A0.diagonal().cwiseInverse().asDiagonal();
  std::vector<CMat9> gen(npts);
  std::vector<int> role(npts, 0);  // 1 canonical, -1 mirror, 0 self-paired
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        size_t p = point_index(n, i, j, k);
        size_t m = point_index(n, (n - i) % n, (n - j) % n, (n - k) % n);
        if (p < m)
          role[p] = 1;
        else if (p > m)
          role[p] = -1;
        if (role[p] >= 0) {
          FourierSymbol f = fourier_symbol(sys, wavevector(n, s0.L, i, j, k));
          gen[p] = A0inv.cast<std::complex<double>>() * f.Exi;
        }
      }

  Trajectory traj;
  const double dt = t_end / n_out;
  for (int step = 0; step <= n_out; ++step) {
    double t = step * dt;
    SpectralField st = s0;
    st.data.assign(npts * kDim, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          size_t p = point_index(n, i, j, k);
          if (role[p] < 0) continue;
          CVec9 u0;
          for (int c = 0; c < kDim; ++c) u0(c) = s0.data[p * kDim + c];
          CVec9 ut = (t == 0.0) ? u0 : CVec9(expm(t * gen[p]) * u0);
          for (int c = 0; c < kDim; ++c) st.data[p * kDim + c] = ut(c);
          if (role[p] > 0) {
            size_t m = point_index(n, (n - i) % n, (n - j) % n, (n - k) % n);
            for (int c = 0; c < kDim; ++c)
              st.data[m * kDim + c] = std::conj(ut(c));
          }
        }

    double hd2 = sob2(st, d, 0, kDim - 1, false);
    NormsRow row;
    row.t = t;
    row.hd = std::sqrt(hd2);
    row.grad_terms = grad2(st, d);
    row.relax_terms = relax2(st, d, sys);

    double resid = 0.0;
    traj.snapshots.push_back(inverse(st, &resid));
    traj.max_imag_residue = std::max(traj.max_imag_residue, resid);
    traj.times.push_back(t);
    traj.norms.push_back(row);

    // Running N(t)^2: sup of hd^2 so far plus the trapezoid of the
    // gradient/relaxation integrands.
    double run_sup = 0.0, run_int = 0.0;
    for (size_t q = 0; q < traj.norms.size(); ++q) {
      run_sup = std::max(run_sup, traj.norms[q].hd * traj.norms[q].hd);
      if (q > 0) {
        double h = traj.times[q] - traj.times[q - 1];
        run_int += 0.5 * h *
                   (traj.norms[q].grad_terms + traj.norms[q].relax_terms +
                    traj.norms[q - 1].grad_terms + traj.norms[q - 1].relax_terms);
      }
    }
    traj.norms.back().N2 = run_sup + run_int;
  }

  for (const Field& snap : traj.snapshots)
    traj.max_divergence = std::max(traj.max_divergence, max_divergence(snap));
  return traj;
}

double sobolev_norm(const Field& f, double s) {
  if (s < 0.0) throw Error("sobolev_norm requires s >= 0");
  return std::sqrt(sob2(forward(f), s, 0, kDim - 1, false));
}

double energy_functional_N2(const Trajectory& traj, const SystemMatrices& sys,
                            int d) {
  if (traj.times.empty()) throw Error("empty trajectory");
  double run_sup = 0.0, run_int = 0.0;
  double prev_g = 0.0, prev_r = 0.0;
  for (size_t q = 0; q < traj.times.size(); ++q) {
    SpectralField s = forward(traj.snapshots[q]);
    double hd2 = sob2(s, d, 0, kDim - 1, false);
    double g = grad2(s, d);
    double r = relax2(s, d, sys);
    run_sup = std::max(run_sup, hd2);
    if (q > 0) {
      double h = traj.times[q] - traj.times[q - 1];
      run_int += 0.5 * h * (g + r + prev_g + prev_r);
    }
    prev_g = g;
    prev_r = r;
  }
  return run_sup + run_int;
}

Field single_mode_field(int n, double L, const Eigen::Vector3i& kint,
                        int component, double amp) {
  Field f(n, L);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double phase = 2.0 * M_PI *
                       (static_cast<double>(kint(0)) * i +
                        static_cast<double>(kint(1)) * j +
                        static_cast<double>(kint(2)) * k) /
                       n;
        f.at(i, j, k, component) = amp * std::cos(phase);
      }
  return f;
}

Field random_band_limited_field(int n, double L, double q, std::uint64_t seed) {
  check_grid(n);
  SpectralField s;
  s.n = n;
  s.L = L;
  s.data.assign(static_cast<size_t>(n) * n * n * kDim, 0.0);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.0, 2.0 * M_PI);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == n / 2 || j == n / 2 || k == n / 2) continue;
        size_t p = point_index(n, i, j, k);
        size_t m = point_index(n, (n - i) % n, (n - j) % n, (n - k) % n);
        if (p > m || p == m) continue;  // mirrors set below; mean stays zero
        Vec3 kv = wavevector(n, L, i, j, k);
        double amp_k = std::pow(1.0 + kv.squaredNorm(), -q);
        for (int c = 0; c < kDim; ++c) {
          double mag = amp_k * gauss(rng);
          double ph = uni(rng);
          std::complex<double> v = 0.5 * mag *
                                   std::complex<double>(std::cos(ph), std::sin(ph));
          s.data[p * kDim + c] = v;
          s.data[m * kDim + c] = std::conj(v);
        }
      }
  return inverse(s);
}

FieldGradients spectral_gradients(const Field& f) {
  SpectralField s = forward(f);
  const int n = s.n;
  const size_t npts = static_cast<size_t>(n) * n * n;

  FieldGradients g;
  g.n = n;
  g.L = f.L;
  g.data.assign(npts * kDim * 3, 0.0);

  std::vector<std::complex<double>> buf(npts);
  for (int c = 0; c < kDim; ++c)
    for (int axis = 0; axis < 3; ++axis) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            size_t p = point_index(n, i, j, k);
            int idx[3] = {i, j, k};
            // First-derivative convention: the unpaired Nyquist frequency
            // carries no odd derivative and is dropped.
            double kw = (idx[axis] == n / 2)
                            ? 0.0
                            : 2.0 * M_PI / f.L * kindex(n, idx[axis]);
            buf[p] = std::complex<double>(0.0, kw) * s.data[p * kDim + c];
          }
      fft3(buf, n, FFTW_BACKWARD);
      for (size_t p = 0; p < npts; ++p)
        g.data[(p * kDim + c) * 3 + axis] = buf[p].real();
    }
  return g;
}

}  // namespace radmhd
