#ifndef RADMHD_CONFIG_HPP
#define RADMHD_CONFIG_HPP

#include <iosfwd>
#include <string>

#include "radmhd/model.hpp"

namespace radmhd {

/// Parsed run configuration. The file format is flat `key = value` lines in
/// sections [params], [equilibrium], [eos]; keys are exactly the field
/// names; `B_bar` takes three whitespace-separated reals. Unknown keys and
/// malformed lines are errors carrying the line number. Er_bar may be
/// omitted, in which case the compatible value a theta_bar^4 is used.
struct RunConfig {
  PhysParams params;
  Equilibrium equilibrium;
  double R = 1.0;
  double Cv = 1.0;

  Eos eos() const { return make_ideal_gas_eos(R, Cv); }
  /// Validates parameters, the EOS and the equilibrium; throws otherwise.
  void validate() const;
};

RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);

/// FNV-1a hash over the canonical serialization; identical parsed configs
/// hash identically regardless of formatting.
std::string config_hash(const RunConfig& cfg);

}  // namespace radmhd

#endif
