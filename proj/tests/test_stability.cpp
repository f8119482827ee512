#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "radmhd/stability.hpp"

using namespace radmhd;

namespace {

SystemMatrices make_sys(double nu, const Vec3& B_bar) {
  PhysParams params;
  params.nu = nu;
  Equilibrium eq;
  eq.B_bar = B_bar;
  Eos eos = make_ideal_gas_eos(1.0, 1.0);
  return build_system(derive_coefficients(params, eos, eq), eq, params);
}

}  // namespace

TEST_CASE("fibonacci lattice is deterministic and on the sphere") {
  auto a = fibonacci_sphere(64);
  auto b = fibonacci_sphere(64);
  REQUIRE(a.size() == 64);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK((a[i] - b[i]).norm() == 0.0);
    CHECK(std::abs(a[i].norm() - 1.0) <= 1e-14);
  }
  auto c = fibonacci_sphere(64, 0.7);
  CHECK((a[1] - c[1]).norm() > 1e-3);
}

TEST_CASE("SK holds for nu > 0") {
  SystemMatrices sys = make_sys(1.0, Vec3(1, 0, 0));
  for (const Vec3& xi :
       {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1),
        Vec3(1, 1, 1).normalized(), Vec3(-0.3, 0.2, 0.5).normalized()}) {
    SKReport rep = sk_check(sys, xi);
    CHECK(rep.holds);
    CHECK(rep.min_angle > 1e-8);
    CHECK_FALSE(rep.witness.has_value());
  }
  CHECK_THROWS_AS(sk_check(sys, Vec3(2, 0, 0)), Error);
}

TEST_CASE("SK fails for nu = 0 on directions perpendicular to the field") {
  SystemMatrices sys = make_sys(0.0, Vec3(1, 0, 0));

  SKReport bad = sk_check(sys, Vec3(0, 1, 0));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->first == doctest::Approx(0.0).epsilon(1e-12));
  const Vec9& X = bad.witness->second;
  CHECK(std::abs(X.norm() - 1.0) <= 1e-12);
  FourierSymbol f = fourier_symbol(sys, Vec3(0, 1, 0));
  CHECK((f.Axi * X - bad.witness->first * sys.A0 * X).norm() <= 1e-10);
  CHECK((f.Bxi * X).norm() <= 1e-10);
  // The witness lives in the velocity block, perpendicular to xi.
  CHECK(std::abs(X(0)) <= 1e-10);
  CHECK(std::abs(X(2)) <= 1e-10);  // u2-component parallel to xi
  CHECK(X.tail<4>().cwiseAbs().maxCoeff() <= 1e-10);

  // Along the field the reduced system forces x = 0: the check passes there.
  SKReport good = sk_check(sys, Vec3(1, 0, 0));
  CHECK(good.holds);
}

TEST_CASE("sweep counting contract and aggregate verdicts") {
  SystemMatrices on = make_sys(1.0, Vec3(1, 0, 0));
  SweepReport small = sk_sweep(on, 1);
  CHECK(small.n_checked == 7);

  SweepReport full = sk_sweep(on, 200);
  CHECK(full.holds_everywhere);
  CHECK(full.n_failed == 0);
  CHECK(full.worst_angle > 1e-8);

  SystemMatrices off = make_sys(0.0, Vec3(1, 0, 0));
  SweepReport deg = sk_sweep(off, 200);
  CHECK_FALSE(deg.holds_everywhere);
  CHECK(deg.n_failed > 0);
  for (const SKReport& r : deg.reports) {
    bool perp = std::abs(r.xi.dot(Vec3(1, 0, 0))) <= 1e-12;
    CHECK(perp == !r.holds);
  }
}

TEST_CASE("explicit kernel eigenpairs in the degenerate case") {
  SystemMatrices sys = make_sys(0.0, Vec3(1, 0, 0));

  auto pairs = kernel_eigenpairs_nu0(sys, Vec3(0, 0, 1), Vec3(1, 0, 0));
  REQUIRE(pairs.size() == 2);
  FourierSymbol f = fourier_symbol(sys, Vec3(0, 0, 1));
  for (const auto& [lam, X] : pairs) {
    CHECK(lam == 0.0);
    CHECK((f.Axi * X).norm() <= 1e-10);
    CHECK((f.Bxi * X).norm() <= 1e-10);
    CHECK(std::abs(X(0)) == 0.0);
    CHECK(X.tail<5>().cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(X.segment<3>(1).dot(Vec3(0, 0, 1))) <= 1e-14);
  }
  // The two velocity directions are orthonormal.
  CHECK(std::abs(pairs[0].second.dot(pairs[1].second)) <= 1e-14);

  CHECK(kernel_eigenpairs_nu0(sys, Vec3(1, 0, 0), Vec3(1, 0, 0)).empty());
  CHECK(kernel_eigenpairs_nu0(sys, Vec3(0.2, 0.5, -1).normalized(), Vec3::Zero())
            .size() == 2);

  SystemMatrices damped = make_sys(1.0, Vec3(1, 0, 0));
  CHECK_THROWS_AS(kernel_eigenpairs_nu0(damped, Vec3(0, 0, 1), Vec3(1, 0, 0)),
                  DampingPresent);
}

TEST_CASE("Kalman rank matches the SK verdicts") {
  SystemMatrices on = make_sys(1.0, Vec3(1, 0, 0));
  CHECK(kalman_rank(on, Vec3(1, 0, 0)) == 9);

  SystemMatrices off = make_sys(0.0, Vec3(1, 0, 0));
  CHECK(kalman_rank(off, Vec3(0, 1, 0)) < 9);

  SystemMatrices hollow = on;
  hollow.Bt.setZero();
  hollow.Dt.setZero();
  CHECK(kalman_rank(hollow, Vec3(1, 0, 0)) == 0);

  for (const Vec3& xi : fibonacci_sphere(40)) {
    CHECK((kalman_rank(on, xi) == 9) == sk_check(on, xi).holds);
    CHECK((kalman_rank(off, xi) == 9) == sk_check(off, xi).holds);
  }
}

TEST_CASE("spectral abscissa: zero frequency, decay, and quadratic scaling") {
  SystemMatrices sys = make_sys(1.0, Vec3(1, 0, 0));

  CHECK(std::abs(spectral_abscissa(sys, Vec3::Zero()).abscissa) <= 1e-12);
  CHECK(spectral_abscissa(sys, Vec3(1, 0, 0)).abscissa < 0.0);

  double a1 = spectral_abscissa(sys, Vec3(1e-3, 0, 0)).abscissa;
  double a2 = spectral_abscissa(sys, Vec3(1e-2, 0, 0)).abscissa;
  CHECK(std::abs(a2 / a1) == doctest::Approx(100.0).epsilon(0.05));
}

TEST_CASE("conjugate symmetry of the per-mode spectrum") {
  SystemMatrices sys = make_sys(1.0, Vec3(0.5, -0.2, 0.9));
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    Vec3 xi(U(rng), U(rng), U(rng));
    DecayPoint p = spectral_abscissa(sys, xi);
    DecayPoint q = spectral_abscissa(sys, -xi);
    CHECK(p.abscissa == doctest::Approx(q.abscissa).epsilon(1e-10));
  }
}

TEST_CASE("decay map: low-frequency slope and high-frequency plateau") {
  SystemMatrices sys = make_sys(1.0, Vec3(1, 0, 0));

  std::vector<double> lows(9);
  for (int i = 0; i < 9; ++i)
    lows[i] = std::pow(10.0, -3.0 + 2.0 * i / 8.0);
  DecayMap low = decay_map(sys, lows, {Vec3(1, 0, 0)});
  REQUIRE(low.low_freq_slope.size() == 1);
  CHECK(std::abs(low.low_freq_slope[0] - 2.0) <= 0.2);

  DecayMap high = decay_map(sys, {1e2, 1e3}, {Vec3(1, 0, 0)});
  REQUIRE(high.points.size() == 2);
  CHECK(std::abs(high.points[1].abscissa - high.points[0].abscissa) <=
        0.05 * std::abs(high.points[0].abscissa));

  CHECK(decay_map(sys, {}, {Vec3(1, 0, 0)}).points.empty());

  // Points come out sorted by (direction, magnitude).
  DecayMap two = decay_map(sys, {2.0, 1.0}, {Vec3(1, 0, 0), Vec3(0, 1, 0)});
  REQUIRE(two.points.size() == 4);
  CHECK(two.points[0].xi.norm() == doctest::Approx(1.0));
  CHECK(two.points[1].xi.norm() == doctest::Approx(2.0));
  CHECK(two.points[2].xi(1) == doctest::Approx(1.0));
}

TEST_CASE("compensating matrix: search, certificates, generalization") {
  SystemMatrices sys = make_sys(1.0, Vec3(1, 0, 0));
  Compensator K = find_compensator(sys, 32, 4000);
  CHECK(K.found);
  CHECK(K.margin > 0.0);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    Vec3 w = Vec3(U(rng), U(rng), U(rng)).normalized();
    CHECK((K.at(-w) + K.at(w)).cwiseAbs().maxCoeff() == 0.0);
    Mat9 KA0 = K.at(w) * sys.A0;
    CHECK((KA0 + KA0.transpose()).cwiseAbs().maxCoeff() <=
          1e-12 * (1.0 + KA0.cwiseAbs().maxCoeff()));
  }

  double m300 = verify_compensator(K, sys, 300);
  double m500 = verify_compensator(K, sys, 500);
  CHECK(std::abs(m500 - K.margin) <= 0.5 * K.margin);
  CHECK(std::abs(m300 - m500) <= 0.1 * std::max(std::abs(m300), std::abs(m500)));

  // Zero compensator leaves the undamped density direction untouched.
  Compensator zero;
  zero.K = {Mat9::Zero(), Mat9::Zero(), Mat9::Zero()};
  zero.margin = 0.0;
  zero.found = false;
  double mzero = verify_compensator(zero, sys, 100);
  CHECK(std::abs(mzero) <= 1e-12);

  SystemMatrices off = make_sys(0.0, Vec3(1, 0, 0));
  CHECK_THROWS_AS(find_compensator(off, 32, 100), Error);
  CHECK_THROWS_AS(find_compensator(sys, 4, 100), Error);
}
