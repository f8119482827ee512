#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "radmhd/config.hpp"
#include "radmhd/entropy.hpp"
#include "radmhd/propagator.hpp"
#include "radmhd/stability.hpp"

namespace py = pybind11;
using namespace radmhd;

namespace {

SystemMatrices system_from_config(const RunConfig& cfg) {
  cfg.validate();
  return build_system(derive_coefficients(cfg.params, cfg.eos(), cfg.equilibrium),
                      cfg.equilibrium, cfg.params);
}

Field field_from_array(py::array_t<double, py::array::c_style> arr, double L) {
  auto b = arr.request();
  if (b.ndim != 4 || b.shape[3] != kDim || b.shape[0] != b.shape[1] ||
      b.shape[1] != b.shape[2])
    throw std::invalid_argument("expected array of shape (n, n, n, 9)");
  Field f(static_cast<int>(b.shape[0]), L);
  std::copy_n(static_cast<double*>(b.ptr), f.data.size(), f.data.data());
  return f;
}

py::array_t<double> array_from_field(const Field& f) {
  py::array_t<double> arr({f.n, f.n, f.n, kDim});
  std::copy_n(f.data.data(), f.data.size(), arr.mutable_data());
  return arr;
}

}  // namespace

PYBIND11_MODULE(_radmhd, m) {
  m.doc() = "linearized radiative Euler-MHD stability toolkit";

  py::class_<PhysParams>(m, "PhysParams")
      .def(py::init<>())
      .def_readwrite("mu", &PhysParams::mu)
      .def_readwrite("sigma", &PhysParams::sigma)
      .def_readwrite("sigma_a", &PhysParams::sigma_a)
      .def_readwrite("sigma_s", &PhysParams::sigma_s)
      .def_readwrite("a", &PhysParams::a)
      .def_readwrite("kappa", &PhysParams::kappa)
      .def_readwrite("nu", &PhysParams::nu)
      .def_property_readonly("lam", &PhysParams::lambda);

  py::class_<Equilibrium>(m, "Equilibrium")
      .def(py::init<>())
      .def_readwrite("rho_bar", &Equilibrium::rho_bar)
      .def_readwrite("theta_bar", &Equilibrium::theta_bar)
      .def_readwrite("Er_bar", &Equilibrium::Er_bar)
      .def_readwrite("B_bar", &Equilibrium::B_bar);

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("params", &RunConfig::params)
      .def_readwrite("equilibrium", &RunConfig::equilibrium)
      .def_readwrite("R", &RunConfig::R)
      .def_readwrite("Cv", &RunConfig::Cv)
      .def("validate", &RunConfig::validate);

  m.def("parse_config_file", &parse_config_file);
  m.def("config_hash", &config_hash);

  py::class_<LinCoeffs>(m, "LinCoeffs")
      .def_readonly("alpha_p", &LinCoeffs::alpha_p)
      .def_readonly("beta_p", &LinCoeffs::beta_p)
      .def_readonly("beta_pp", &LinCoeffs::beta_pp)
      .def_readonly("gamma_p", &LinCoeffs::gamma_p)
      .def_readonly("gamma_pp", &LinCoeffs::gamma_pp)
      .def_readonly("delta_p", &LinCoeffs::delta_p)
      .def_readonly("delta_pp", &LinCoeffs::delta_pp)
      .def_readonly("zeta", &LinCoeffs::zeta)
      .def_readonly("eta", &LinCoeffs::eta)
      .def_readonly("pi", &LinCoeffs::pi)
      .def("all_positive", &LinCoeffs::all_positive);

  py::class_<SystemMatrices>(m, "SystemMatrices")
      .def_property_readonly("A",
                             [](const SystemMatrices& s) {
                               return std::vector<Mat9>(s.A.begin(), s.A.end());
                             })
      .def_readonly("D", &SystemMatrices::D)
      .def_readonly("B", &SystemMatrices::Brelax)
      .def_readonly("A0", &SystemMatrices::A0)
      .def_property_readonly("At",
                             [](const SystemMatrices& s) {
                               return std::vector<Mat9>(s.At.begin(),
                                                        s.At.end());
                             })
      .def_readonly("Dt", &SystemMatrices::Dt)
      .def_readonly("Bt", &SystemMatrices::Bt)
      .def_readonly("coeffs", &SystemMatrices::coeffs);

  m.def("build_system", &system_from_config, py::arg("config"));

  m.def("fourier_symbol", [](const SystemMatrices& sys, const Vec3& xi) {
    FourierSymbol s = fourier_symbol(sys, xi);
    return py::make_tuple(s.Axi, s.Bxi, s.Exi);
  });

  py::class_<SKReport>(m, "SKReport")
      .def_readonly("xi", &SKReport::xi)
      .def_readonly("holds", &SKReport::holds)
      .def_readonly("min_angle", &SKReport::min_angle)
      .def_property_readonly("witness", [](const SKReport& r) -> py::object {
        if (!r.witness) return py::none();
        return py::make_tuple(r.witness->first, r.witness->second);
      });

  m.def("sk_check", &sk_check, py::arg("sys"), py::arg("xi"),
        py::arg("angle_tol") = 1e-8);
  m.def("sk_sweep", [](const SystemMatrices& sys, int n) {
    SweepReport r = sk_sweep(sys, n);
    return py::make_tuple(r.holds_everywhere, r.worst_angle, r.n_checked,
                          r.n_failed);
  });
  m.def("kalman_rank", &kalman_rank);
  m.def("spectral_abscissa", [](const SystemMatrices& sys, const Vec3& xi) {
    DecayPoint p = spectral_abscissa(sys, xi);
    return py::make_tuple(p.abscissa, p.cond);
  });

  py::class_<Compensator>(m, "Compensator")
      .def_property_readonly("K",
                             [](const Compensator& c) {
                               return std::vector<Mat9>(c.K.begin(), c.K.end());
                             })
      .def_readonly("margin", &Compensator::margin)
      .def_readonly("found", &Compensator::found)
      .def("at", &Compensator::at);

  m.def("find_compensator", &find_compensator, py::arg("sys"),
        py::arg("n_train") = 64, py::arg("budget") = 20000);
  m.def("verify_compensator", &verify_compensator);

  m.def("propagate_mode", &propagate_mode);
  m.def(
      "simulate",
      [](const SystemMatrices& sys, py::array_t<double, py::array::c_style> f0,
         double L, double t_end, int n_out, int d) {
        Trajectory traj = simulate(sys, field_from_array(f0, L), t_end, n_out, d);
        py::list snaps;
        for (const Field& f : traj.snapshots) snaps.append(array_from_field(f));
        py::list norms;
        for (const NormsRow& r : traj.norms)
          norms.append(py::make_tuple(r.t, r.hd, r.grad_terms, r.relax_terms,
                                      r.N2));
        return py::make_tuple(traj.times, snaps, norms, traj.max_imag_residue,
                              traj.max_divergence);
      },
      py::arg("sys"), py::arg("field0"), py::arg("L"), py::arg("t_end"),
      py::arg("n_out"), py::arg("d") = 4);
  m.def("project_divfree",
        [](py::array_t<double, py::array::c_style> f, double L) {
          return array_from_field(project_divfree(field_from_array(f, L)));
        });
  m.def("sobolev_norm",
        [](py::array_t<double, py::array::c_style> f, double L, double s) {
          return sobolev_norm(field_from_array(f, L), s);
        });
  m.def("random_band_limited_field",
        [](int n, double L, double q, std::uint64_t seed) {
          return array_from_field(random_band_limited_field(n, L, q, seed));
        });

  m.def("relative_helmholtz_matter",
        [](double rho, double theta, const RunConfig& cfg) {
          return relative_helmholtz_matter(rho, theta, cfg.eos(),
                                           cfg.equilibrium);
        });
  m.def("relative_helmholtz_radiation", &relative_helmholtz_radiation);
  m.def("coercivity_constants", [](const RunConfig& cfg, int grid_n) {
    CoercivityConstants c =
        coercivity_constants(cfg.eos(), cfg.equilibrium, grid_n);
    return py::make_tuple(c.C1, c.C2, c.C3, c.C4);
  });
  m.def("relative_entropy_eta",
        [](py::array_t<double, py::array::c_style> state, double L,
           const RunConfig& cfg, bool extended) {
          return relative_entropy_eta(field_from_array(state, L), cfg.eos(),
                                      cfg.equilibrium, cfg.params, extended);
        },
        py::arg("state"), py::arg("L"), py::arg("config"),
        py::arg("extended") = false);
  m.def("entropy_production",
        [](py::array_t<double, py::array::c_style> state, double L,
           const RunConfig& cfg) {
          ProductionTerms p =
              entropy_production(field_from_array(state, L), cfg.eos(),
                                 cfg.params);
          return py::make_tuple(p.heat, p.radiative, p.relaxation, p.ohmic,
                                p.damping);
        });

  py::register_exception<Error>(m, "RadmhdError");
}
