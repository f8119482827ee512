// Command-line front end: every library operation as a subcommand, plus the
// end-to-end `report` pipeline with deterministic artifacts.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "radmhd/config.hpp"
#include "radmhd/entropy.hpp"
#include "radmhd/io.hpp"
#include "radmhd/propagator.hpp"
#include "radmhd/stability.hpp"

namespace fs = std::filesystem;
using namespace radmhd;

namespace {

struct Global {
  std::string config_path;
  std::string out_dir;
  int jobs = 1;
  std::uint64_t seed = 7;

  RunConfig cfg;
  void load() {
    if (!config_path.empty()) cfg = parse_config_file(config_path);
    cfg.validate();
  }
};

SystemMatrices make_system(const RunConfig& cfg) {
  LinCoeffs coeffs = derive_coefficients(cfg.params, cfg.eos(), cfg.equilibrium);
  return build_system(coeffs, cfg.equilibrium, cfg.params);
}

Vec3 parse_xi(const std::vector<double>& v) {
  if (v.size() != 3) throw CLI::ValidationError("--xi needs three components");
  Vec3 xi(v[0], v[1], v[2]);
  if (xi.norm() == 0.0) throw CLI::ValidationError("--xi must be nonzero");
  return xi / xi.norm();
}

std::vector<double> parse_mags(const std::string& s) {
  double lo, hi;
  int count;
  if (std::sscanf(s.c_str(), "%lf:%lf:log:%d", &lo, &hi, &count) != 3 ||
      count < 1 || lo <= 0.0 || hi < lo)
    throw CLI::ValidationError("--mags must be lo:hi:log:count with lo > 0");
  std::vector<double> mags(count);
  for (int i = 0; i < count; ++i)
    mags[i] = count == 1 ? lo
                         : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) *
                                                       i / (count - 1));
  return mags;
}

std::vector<Vec3> parse_dirs(const std::string& s) {
  if (s == "axes")
    return {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  int n;
  if (std::sscanf(s.c_str(), "fib:%d", &n) == 1 && n >= 1)
    return fibonacci_sphere(n);
  throw CLI::ValidationError("--dirs must be 'axes' or 'fib:n'");
}

std::ofstream open_out(const Global& g, const std::string& name) {
  fs::create_directories(g.out_dir);
  std::ofstream f(fs::path(g.out_dir) / name);
  if (!f) throw Error("cannot write " + name + " in " + g.out_dir);
  return f;
}

void print_coeffs(std::ostream& os, const LinCoeffs& c) {
  os << "alpha_p: " << fmt(c.alpha_p) << "\n"
     << "beta_p: " << fmt(c.beta_p) << "\n"
     << "beta_pp: " << fmt(c.beta_pp) << "\n"
     << "gamma_p: " << fmt(c.gamma_p) << "\n"
     << "gamma_pp: " << fmt(c.gamma_pp) << "\n"
     << "delta_p: " << fmt(c.delta_p) << "\n"
     << "delta_pp: " << fmt(c.delta_pp) << "\n"
     << "zeta: " << fmt(c.zeta) << "\n"
     << "eta: " << fmt(c.eta) << "\n"
     << "pi: " << fmt(c.pi) << "\n"
     << "all_positive: " << (c.all_positive() ? "yes" : "no") << "\n";
}

void print_audit(std::ostream& os, const AuditReport& a) {
  os << "Bt_asymmetry_defect: " << fmt(a.bt_asym_defect) << "\n"
     << "Bt_sym_min_eig: " << fmt(a.bt_sym_min_eig) << "\n"
     << "Bt_symmetric: " << (a.bt_symmetric ? "yes" : "no") << "\n"
     << "Bt_psd: " << (a.bt_psd ? "yes" : "no") << "\n";
  for (const auto& e : a.bxi)
    os << "Bxi(|xi|=" << fmt(e.xi_mag) << ") defect: " << fmt(e.asym_defect)
       << " sym_min_eig: " << fmt(e.sym_min_eig) << "\n";
}

void dump_all_matrices(std::ostream& os, const SystemMatrices& sys,
                       const std::string& hash) {
  const char* anames[3] = {"A1", "A2", "A3"};
  const char* atnames[3] = {"At1", "At2", "At3"};
  for (int j = 0; j < 3; ++j) write_matrix_csv(os, anames[j], hash, sys.A[j]);
  write_matrix_csv(os, "D", hash, sys.D);
  write_matrix_csv(os, "B", hash, sys.Brelax);
  write_matrix_csv(os, "A0", hash, sys.A0);
  for (int j = 0; j < 3; ++j) write_matrix_csv(os, atnames[j], hash, sys.At[j]);
  write_matrix_csv(os, "Dt", hash, sys.Dt);
  write_matrix_csv(os, "Bt", hash, sys.Bt);
}

Field equilibrium_plus(const Field& pert, const Equilibrium& eq) {
  Field f = pert;
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j)
      for (int k = 0; k < f.n; ++k) {
        f.at(i, j, k, 0) += eq.rho_bar;
        f.at(i, j, k, 4) += eq.theta_bar;
        f.at(i, j, k, 5) += eq.Er_bar;
        for (int c = 0; c < 3; ++c) f.at(i, j, k, 6 + c) += eq.B_bar(c);
      }
  return f;
}

// The end-to-end pipeline. Returns the failure message of the first check
// that contradicts the expected (nu > 0) behavior, or empty on success.
std::string run_report(Global& g) {
  if (g.out_dir.empty()) g.out_dir = "out";
  const RunConfig& cfg = g.cfg;
  const std::string hash = config_hash(cfg);

  std::ostringstream rep;
  rep << "configuration " << hash << "\n";
  rep << "seed " << g.seed << "\n\n";

  std::string failure;
  auto check = [&](bool ok, const std::string& name) {
    rep << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    if (!ok && failure.empty()) failure = name;
  };

  // Coefficients and matrices.
  SystemMatrices sys = make_system(cfg);
  {
    auto f = open_out(g, "coeffs.txt");
    print_coeffs(f, sys.coeffs);
    auto m = open_out(g, "matrices.csv");
    dump_all_matrices(m, sys, hash);
  }
  check(sys.coeffs.all_positive(), "coefficients all positive");

  // Consistency audit of Bt.
  AuditReport audit = consistency_audit(sys);
  {
    auto f = open_out(g, "audit.txt");
    print_audit(f, audit);
  }
  const double expected_defect =
      cfg.params.mu * cfg.params.sigma_a *
      std::abs(1.0 / (cfg.equilibrium.rho_bar * cfg.equilibrium.rho_bar) -
               1.0 / (cfg.equilibrium.rho_bar * cfg.equilibrium.theta_bar));
  check(std::abs(audit.bt_asym_defect - expected_defect) <= 1e-12,
        "Bt asymmetry defect matches closed form");
  check(audit.bt_sym_min_eig >= -1e-10, "Bt symmetric part PSD");

  // SK sweeps: one with damping on, one with damping forced off.
  RunConfig cfg_on = cfg;
  if (cfg_on.params.nu == 0.0) cfg_on.params.nu = 1.0;
  RunConfig cfg_off = cfg;
  cfg_off.params.nu = 0.0;
  SystemMatrices sys_on = make_system(cfg_on);
  SystemMatrices sys_off = make_system(cfg_off);

  SweepReport sw_on = sk_sweep(sys_on, 200);
  SweepReport sw_off = sk_sweep(sys_off, 200);
  rep << "SK: " << (sw_on.holds_everywhere ? "holds" : "fails")
      << " (nu > 0, " << sw_on.n_checked
      << " directions, worst angle " << fmt(sw_on.worst_angle) << ")\n";
  rep << "SK: " << (sw_off.holds_everywhere ? "holds" : "fails")
      << " (nu = 0, " << sw_off.n_checked << " directions, " << sw_off.n_failed
      << " failed)\n";
  check(sw_on.holds_everywhere, "SK holds everywhere for nu > 0");
  {
    // With damping off the condition must fail exactly on xi . B_bar = 0.
    bool pattern = true;
    for (const SKReport& r : sw_off.reports) {
      bool perp = std::abs(r.xi.dot(cfg.equilibrium.B_bar)) <= 1e-12;
      if (perp == r.holds) pattern = false;
    }
    check(pattern, "SK failure for nu = 0 exactly on xi perpendicular to B");
  }

  // Kalman ranks agree with the SK verdicts on the axes.
  {
    bool agree = true;
    std::array<Vec3, 3> axes = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
    for (const Vec3& xi : axes) {
      int r_on = kalman_rank(sys_on, xi);
      int r_off = kalman_rank(sys_off, xi);
      rep << "kalman rank (" << xi(0) << "," << xi(1) << "," << xi(2)
          << "): nu>0 " << r_on << ", nu=0 " << r_off << "\n";
      if ((r_on == kDim) != sk_check(sys_on, xi).holds) agree = false;
      if ((r_off == kDim) != sk_check(sys_off, xi).holds) agree = false;
    }
    check(agree, "Kalman rank agrees with SK verdicts");
  }

  // Decay map.
  {
    std::vector<double> mags = parse_mags("1e-3:1e3:log:25");
    DecayMap dm = decay_map(sys_on, mags, parse_dirs("axes"));
    auto f = open_out(g, "decay.csv");
    write_decay_csv(f, dm);
    bool neg = true;
    for (const DecayPoint& p : dm.points)
      if (!(p.abscissa < 0.0)) neg = false;
    bool slope_ok = true, plateau_ok = true;
    for (size_t d = 0; d < dm.low_freq_slope.size(); ++d) {
      rep << "decay slope dir " << d << ": " << fmt(dm.low_freq_slope[d])
          << ", plateau " << fmt(dm.plateau[d]) << "\n";
      if (std::abs(dm.low_freq_slope[d] - 2.0) > 0.2) slope_ok = false;
    }
    for (size_t d = 0; d < dm.plateau.size(); ++d) {
      double at_1e2 = 0.0, at_1e3 = 0.0;
      for (const DecayPoint& p : dm.points) {
        if (std::abs(p.xi.norm() - 1e2) < 1e-9 * 1e2) at_1e2 = p.abscissa;
        if (std::abs(p.xi.norm() - 1e3) < 1e-9 * 1e3) at_1e3 = p.abscissa;
      }
      if (std::abs(at_1e3 - at_1e2) > 0.05 * std::abs(at_1e2))
        plateau_ok = false;
    }
    double a0 = spectral_abscissa(sys_on, Vec3::Zero()).abscissa;
    rep << "abscissa(0): " << fmt(a0) << "\n";
    check(std::abs(a0) <= 1e-12, "zero-frequency abscissa vanishes");
    check(neg, "abscissa negative for all sampled xi != 0");
    check(slope_ok, "low-frequency slope 2.0 +/- 0.2");
    check(plateau_ok, "high-frequency plateau");
  }

  // Compensating matrix.
  {
    Compensator K = find_compensator(sys_on, 64, 20000);
    double test_margin = verify_compensator(K, sys_on, 500);
    rep << "compensator training margin: " << fmt(K.margin) << "\n";
    rep << "compensator test margin: " << fmt(test_margin) << "\n";
    auto f = open_out(g, "compensator.csv");
    write_matrix_csv(f, "K1", hash, K.K[0]);
    write_matrix_csv(f, "K2", hash, K.K[1]);
    write_matrix_csv(f, "K3", hash, K.K[2]);
    check(K.found && K.margin > 0.0, "compensator margin positive");
    check(std::abs(test_margin - K.margin) <= 0.5 * K.margin,
          "compensator generalizes to fresh sphere sample");
  }

  // Coercivity constants.
  {
    CoercivityConstants cc = coercivity_constants(cfg.eos(), cfg.equilibrium, 1024);
    rep << "coercivity C1: " << fmt(cc.C1) << " C2: " << fmt(cc.C2)
        << " C3: " << fmt(cc.C3) << " C4: " << fmt(cc.C4) << "\n";
    check(cc.C1 > 0.0 && cc.C3 > 0.0, "coercivity constants positive");
  }

  // Linear simulation decay table.
  {
    const int n = 16;
    Field f0 = random_band_limited_field(n, 2.0 * M_PI, 3.0, g.seed);
    f0 = project_divfree(f0);
    double h4 = sobolev_norm(f0, 4.0);
    f0.scale(1e-2 / h4);
    Trajectory traj = simulate(sys_on, f0, 10.0, 20);
    auto f = open_out(g, "norms.csv");
    write_norms_csv(f, traj);
    write_snapshot_file((fs::path(g.out_dir) / "snapshot_t0.txt").string(),
                        traj.snapshots.front(), traj.times.front());
    write_snapshot_file((fs::path(g.out_dir) / "snapshot_final.txt").string(),
                        traj.snapshots.back(), traj.times.back());
    rep << "simulation H^4: " << fmt(traj.norms.front().hd) << " -> "
        << fmt(traj.norms.back().hd) << "\n";
    rep << "simulation N2(final): " << fmt(traj.norms.back().N2) << "\n";
    check(traj.norms.back().hd < traj.norms.front().hd,
          "simulated H^4 norm decays");
    check(traj.max_imag_residue <= 1e-10, "imaginary residue bounded");
    check(traj.max_divergence <= 1e-10, "divergence-free preserved");

    // Entropy machinery on an absolute-state snapshot built from the field.
    Field abs_state = equilibrium_plus(traj.snapshots.back(), cfg.equilibrium);
    double eta = relative_entropy_eta(abs_state, cfg.eos(), cfg.equilibrium,
                                      cfg.params, true);
    ProductionTerms pt = entropy_production(abs_state, cfg.eos(), cfg.params);
    rep << "eta integral: " << fmt(eta) << "\n";
    rep << "production heat: " << fmt(pt.heat) << " radiative: "
        << fmt(pt.radiative) << " relaxation: " << fmt(pt.relaxation)
        << " ohmic: " << fmt(pt.ohmic) << " damping: " << fmt(pt.damping)
        << "\n";
    check(eta >= 0.0, "relative entropy nonnegative");
    check(pt.heat >= 0 && pt.radiative >= 0 && pt.relaxation >= 0 &&
              pt.ohmic >= 0 && pt.damping >= 0,
          "entropy production terms nonnegative");
  }

  rep << "\nresult: " << (failure.empty() ? "PASS" : "FAIL " + failure) << "\n";
  auto f = open_out(g, "report.txt");
  f << rep.str();
  std::cout << rep.str();
  return failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linearized radiative Euler-MHD stability toolkit"};
  app.require_subcommand(1);

  Global g;
  app.add_option("--config", g.config_path, "configuration file");
  app.add_option("--out", g.out_dir, "output directory for artifacts");
  app.add_option("--jobs", g.jobs, "worker cap (orchestration is sequential)");
  app.add_option("--seed", g.seed, "RNG seed for random initial data");

  auto* c_coeffs = app.add_subcommand("coeffs", "derived linearization coefficients");
  auto* c_dump = app.add_subcommand("dump-matrices", "emit all system matrices as CSV");
  auto* c_audit = app.add_subcommand("audit", "symmetry/positivity audit of Bt and B(xi)");

  std::vector<double> xi_in{1, 0, 0};
  auto* c_skcheck = app.add_subcommand("sk-check", "eigenspace/kernel intersection at one direction");
  c_skcheck->add_option("--xi", xi_in, "direction (3 components)")->delimiter(',');

  int sweep_n = 200;
  auto* c_sksweep = app.add_subcommand("sk-sweep", "sphere sweep of the intersection check");
  c_sksweep->add_option("--n", sweep_n, "number of lattice directions");

  auto* c_kalman = app.add_subcommand("kalman", "stacked-matrix rank at one direction");
  c_kalman->add_option("--xi", xi_in, "direction (3 components)")->delimiter(',');

  std::string mags_in = "1e-3:1e2:log:25", dirs_in = "axes";
  auto* c_decay = app.add_subcommand("decay-map", "spectral abscissa sweep");
  c_decay->add_option("--mags", mags_in, "lo:hi:log:count");
  c_decay->add_option("--dirs", dirs_in, "'axes' or 'fib:n'");

  int train_n = 64, test_n = 500, budget = 20000;
  auto* c_comp = app.add_subcommand("compensator", "search for a compensating matrix");
  c_comp->add_option("--train", train_n, "training sphere points");
  c_comp->add_option("--test", test_n, "verification sphere points");
  c_comp->add_option("--budget", budget, "objective evaluation cap");

  int sim_n = 32, n_out = 50, sim_d = 4;
  double sim_L = 2.0 * M_PI, t_end = 10.0, amp = 1e-2;
  std::string init = "random";
  auto* c_sim = app.add_subcommand("simulate", "spectral linear evolution on a periodic box");
  c_sim->add_option("--n", sim_n, "grid points per axis (power of two)");
  c_sim->add_option("--L", sim_L, "box edge length");
  c_sim->add_option("--t-end", t_end, "final time");
  c_sim->add_option("--n-out", n_out, "output snapshots");
  c_sim->add_option("--init", init, "'mode' or 'random'");
  c_sim->add_option("--amp", amp, "initial H^d amplitude");
  c_sim->add_option("--d", sim_d, "Sobolev order of the tracked norms");

  std::string snap_path;
  auto* c_ent = app.add_subcommand("entropy-audit", "entropy functionals of a snapshot");
  c_ent->add_option("--snapshot", snap_path, "absolute-state snapshot file")->required();

  int coer_grid = 1024;
  auto* c_coer = app.add_subcommand("coercivity", "Helmholtz coercivity constants");
  c_coer->add_option("--grid", coer_grid, "certification grid resolution");

  auto* c_report = app.add_subcommand("report", "full pipeline with artifacts");

  CLI11_PARSE(app, argc, argv);

  try {
    g.load();
    const std::string hash = config_hash(g.cfg);

    if (c_coeffs->parsed()) {
      print_coeffs(std::cout, make_system(g.cfg).coeffs);
    } else if (c_dump->parsed()) {
      SystemMatrices sys = make_system(g.cfg);
      if (!g.out_dir.empty()) {
        auto f = open_out(g, "matrices.csv");
        dump_all_matrices(f, sys, hash);
      } else {
        dump_all_matrices(std::cout, sys, hash);
      }
    } else if (c_audit->parsed()) {
      print_audit(std::cout, consistency_audit(make_system(g.cfg)));
    } else if (c_skcheck->parsed()) {
      Vec3 xi = parse_xi(xi_in);
      SKReport r = sk_check(make_system(g.cfg), xi);
      std::cout << "xi: " << fmt(xi(0)) << ' ' << fmt(xi(1)) << ' '
                << fmt(xi(2)) << "\n"
                << "holds: " << (r.holds ? "yes" : "no") << "\n"
                << "min_angle: " << fmt(r.min_angle) << "\n";
      if (r.witness) {
        std::cout << "witness_eigenvalue: " << fmt(r.witness->first) << "\n"
                  << "witness:";
        for (int i = 0; i < kDim; ++i)
          std::cout << ' ' << fmt(r.witness->second(i));
        std::cout << "\n";
      }
      return r.holds ? 0 : 1;
    } else if (c_sksweep->parsed()) {
      SweepReport r = sk_sweep(make_system(g.cfg), sweep_n);
      std::cout << "checked: " << r.n_checked << "\n"
                << "failed: " << r.n_failed << "\n"
                << "holds_everywhere: " << (r.holds_everywhere ? "yes" : "no")
                << "\n"
                << "worst_angle: " << fmt(r.worst_angle) << "\n"
                << "worst_xi: " << fmt(r.worst_xi(0)) << ' '
                << fmt(r.worst_xi(1)) << ' ' << fmt(r.worst_xi(2)) << "\n";
      return r.holds_everywhere ? 0 : 1;
    } else if (c_kalman->parsed()) {
      Vec3 xi = parse_xi(xi_in);
      std::cout << "rank: " << kalman_rank(make_system(g.cfg), xi) << "\n";
    } else if (c_decay->parsed()) {
      DecayMap dm = decay_map(make_system(g.cfg), parse_mags(mags_in),
                              parse_dirs(dirs_in));
      if (!g.out_dir.empty()) {
        auto f = open_out(g, "decay.csv");
        write_decay_csv(f, dm);
      } else {
        write_decay_csv(std::cout, dm);
      }
      for (size_t d = 0; d < dm.low_freq_slope.size(); ++d)
        std::cout << "dir " << d << " slope: " << fmt(dm.low_freq_slope[d])
                  << " plateau: " << fmt(dm.plateau[d]) << "\n";
    } else if (c_comp->parsed()) {
      SystemMatrices sys = make_system(g.cfg);
      Compensator K = find_compensator(sys, train_n, budget);
      double m = verify_compensator(K, sys, test_n);
      std::cout << "found: " << (K.found ? "yes" : "no") << "\n"
                << "train_margin: " << fmt(K.margin) << "\n"
                << "test_margin: " << fmt(m) << "\n";
      if (!g.out_dir.empty()) {
        auto f = open_out(g, "compensator.csv");
        write_matrix_csv(f, "K1", hash, K.K[0]);
        write_matrix_csv(f, "K2", hash, K.K[1]);
        write_matrix_csv(f, "K3", hash, K.K[2]);
      }
      return K.found ? 0 : 1;
    } else if (c_sim->parsed()) {
      SystemMatrices sys = make_system(g.cfg);
      Field f0;
      if (init == "mode") {
        f0 = single_mode_field(sim_n, sim_L, Eigen::Vector3i(1, 0, 0), 4, 1.0);
      } else if (init == "random") {
        f0 = random_band_limited_field(sim_n, sim_L, 3.0, g.seed);
      } else {
        throw CLI::ValidationError("--init must be 'mode' or 'random'");
      }
      f0 = project_divfree(f0);
      double h = sobolev_norm(f0, sim_d);
      if (h > 0.0) f0.scale(amp / h);
      Trajectory traj = simulate(sys, f0, t_end, n_out, sim_d);
      if (!g.out_dir.empty()) {
        auto f = open_out(g, "norms.csv");
        write_norms_csv(f, traj);
        write_snapshot_file((fs::path(g.out_dir) / "snapshot_final.txt").string(),
                            traj.snapshots.back(), traj.times.back());
      } else {
        write_norms_csv(std::cout, traj);
      }
      std::cout << "seed: " << g.seed << "\n"
                << "H^" << sim_d << ": " << fmt(traj.norms.front().hd) << " -> "
                << fmt(traj.norms.back().hd) << "\n"
                << "max_imag_residue: " << fmt(traj.max_imag_residue) << "\n"
                << "max_divergence: " << fmt(traj.max_divergence) << "\n";
    } else if (c_ent->parsed()) {
      Field state = read_snapshot_file(snap_path);
      double eta = relative_entropy_eta(state, g.cfg.eos(), g.cfg.equilibrium,
                                        g.cfg.params, true);
      ProductionTerms pt = entropy_production(state, g.cfg.eos(), g.cfg.params);
      CoercivityConstants cc =
          coercivity_constants(g.cfg.eos(), g.cfg.equilibrium, coer_grid);
      std::cout << "eta: " << fmt(eta) << "\n"
                << "heat: " << fmt(pt.heat) << "\n"
                << "radiative: " << fmt(pt.radiative) << "\n"
                << "radiative_er_form: " << fmt(pt.radiative_er_form) << "\n"
                << "relaxation: " << fmt(pt.relaxation) << "\n"
                << "ohmic: " << fmt(pt.ohmic) << "\n"
                << "damping: " << fmt(pt.damping) << "\n"
                << "C1: " << fmt(cc.C1) << "\nC2: " << fmt(cc.C2) << "\nC3: "
                << fmt(cc.C3) << "\nC4: " << fmt(cc.C4) << "\n";
    } else if (c_coer->parsed()) {
      CoercivityConstants cc =
          coercivity_constants(g.cfg.eos(), g.cfg.equilibrium, coer_grid);
      std::cout << "C1: " << fmt(cc.C1) << "\nC2: " << fmt(cc.C2) << "\nC3: "
                << fmt(cc.C3) << "\nC4: " << fmt(cc.C4) << "\n"
                << "anchor_matter_min: " << fmt(cc.anchor_matter_min) << "\n"
                << "anchor_matter_max: " << fmt(cc.anchor_matter_max) << "\n"
                << "anchor_radiation: " << fmt(cc.anchor_radiation) << "\n";
    } else if (c_report->parsed()) {
      std::string failure = run_report(g);
      if (!failure.empty()) {
        std::cerr << "failed check: " << failure << "\n";
        return 1;
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
