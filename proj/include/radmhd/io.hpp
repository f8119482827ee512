#ifndef RADMHD_IO_HPP
#define RADMHD_IO_HPP

#include <iosfwd>
#include <string>

#include "radmhd/propagator.hpp"
#include "radmhd/stability.hpp"

namespace radmhd {

/// Formats a double with 17 significant digits (shortest round-trip superset)
/// so that artifacts are byte-stable across runs.
std::string fmt(double v);

/// Snapshot format: header line `n L t`, then n^3 lines of 9 space-separated
/// decimals, row-major with z fastest.
void write_snapshot(std::ostream& out, const Field& f, double t);
Field read_snapshot(std::istream& in, double* t = nullptr);

void write_snapshot_file(const std::string& path, const Field& f, double t);
Field read_snapshot_file(const std::string& path, double* t = nullptr);

/// 9x9 matrix as CSV: one header line `# <name> config=<hash>`, then 9 rows
/// of 9 comma-separated decimals.
void write_matrix_csv(std::ostream& out, const std::string& name,
                      const std::string& config_hash, const Mat9& m);

/// Decay table CSV with header `xi1,xi2,xi3,abscissa,cond`.
void write_decay_csv(std::ostream& out, const DecayMap& map);

/// Norms table CSV with header `t,H^d,grad_terms,relax_terms,N2`.
void write_norms_csv(std::ostream& out, const Trajectory& traj);

}  // namespace radmhd

#endif
