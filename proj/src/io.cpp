#include "radmhd/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

namespace radmhd {

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_snapshot(std::ostream& out, const Field& f, double t) {
  out << f.n << ' ' << fmt(f.L) << ' ' << fmt(t) << '\n';
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j)
      for (int k = 0; k < f.n; ++k) {
        for (int c = 0; c < kDim; ++c) {
          if (c) out << ' ';
          out << fmt(f.at(i, j, k, c));
        }
        out << '\n';
      }
}

Field read_snapshot(std::istream& in, double* t) {
  int n;
  double L, tt;
  if (!(in >> n >> L >> tt)) throw Error("snapshot: malformed header");
  if (n < 1) throw Error("snapshot: bad grid size");
  Field f(n, L);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int c = 0; c < kDim; ++c)
          if (!(in >> f.at(i, j, k, c)))
            throw Error("snapshot: truncated data");
  if (t) *t = tt;
  return f;
}

void write_snapshot_file(const std::string& path, const Field& f, double t) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  write_snapshot(out, f, t);
}

Field read_snapshot_file(const std::string& path, double* t) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open snapshot: " + path);
  return read_snapshot(in, t);
}

void write_matrix_csv(std::ostream& out, const std::string& name,
                      const std::string& config_hash, const Mat9& m) {
  out << "# " << name << " config=" << config_hash << '\n';
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      if (j) out << ',';
      out << fmt(m(i, j));
    }
    out << '\n';
  }
}

void write_decay_csv(std::ostream& out, const DecayMap& map) {
  out << "xi1,xi2,xi3,abscissa,cond\n";
  for (const DecayPoint& p : map.points)
    out << fmt(p.xi(0)) << ',' << fmt(p.xi(1)) << ',' << fmt(p.xi(2)) << ','
        << fmt(p.abscissa) << ',' << fmt(p.cond) << '\n';
}

void write_norms_csv(std::ostream& out, const Trajectory& traj) {
  out << "t,H^d,grad_terms,relax_terms,N2\n";
  for (const NormsRow& r : traj.norms)
    out << fmt(r.t) << ',' << fmt(r.hd) << ',' << fmt(r.grad_terms) << ','
        << fmt(r.relax_terms) << ',' << fmt(r.N2) << '\n';
}

}  // namespace radmhd
