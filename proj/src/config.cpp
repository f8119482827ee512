#include "radmhd/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace radmhd {

void RunConfig::validate() const {
  params.validate();
  validate_eos(eos(), equilibrium.rho_bar, equilibrium.theta_bar);
  validate_equilibrium(params, equilibrium);
}

namespace {

double parse_real(const std::string& tok, int line) {
  size_t pos = 0;
  double v;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ConfigError(line, "expected a real number, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ConfigError(line, "trailing characters after number '" + tok + "'");
  return v;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  bool er_set = false;
  std::string section;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(lineno, "malformed section header");
      section = line.substr(1, line.size() - 2);
      if (section != "params" && section != "equilibrium" && section != "eos")
        throw ConfigError(lineno, "unknown section [" + section + "]");
      continue;
    }

    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(lineno, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(lineno, "expected 'key = value'");

    auto one = [&] { return parse_real(value, lineno); };

    if (section == "params") {
      if (key == "mu") cfg.params.mu = one();
      else if (key == "sigma") cfg.params.sigma = one();
      else if (key == "sigma_a") cfg.params.sigma_a = one();
      else if (key == "sigma_s") cfg.params.sigma_s = one();
      else if (key == "a") cfg.params.a = one();
      else if (key == "kappa") cfg.params.kappa = one();
      else if (key == "nu") cfg.params.nu = one();
      else throw ConfigError(lineno, "unknown key '" + key + "' in [params]");
    } else if (section == "equilibrium") {
      if (key == "rho_bar") cfg.equilibrium.rho_bar = one();
      else if (key == "theta_bar") cfg.equilibrium.theta_bar = one();
      else if (key == "Er_bar") {
        cfg.equilibrium.Er_bar = one();
        er_set = true;
      } else if (key == "B_bar") {
        std::istringstream vs(value);
        double x, y, z;
        if (!(vs >> x >> y >> z))
          throw ConfigError(lineno, "B_bar needs three reals");
        std::string rest;
        if (vs >> rest)
          throw ConfigError(lineno, "B_bar needs exactly three reals");
        cfg.equilibrium.B_bar = Vec3(x, y, z);
      } else {
        throw ConfigError(lineno, "unknown key '" + key + "' in [equilibrium]");
      }
    } else if (section == "eos") {
      if (key == "R") cfg.R = one();
      else if (key == "C_v") cfg.Cv = one();
      else throw ConfigError(lineno, "unknown key '" + key + "' in [eos]");
    } else {
      throw ConfigError(lineno, "key outside of any section");
    }
  }
  if (!er_set)
    cfg.equilibrium.Er_bar =
        cfg.params.a * std::pow(cfg.equilibrium.theta_bar, 4);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  return parse_config(in);
}

std::string config_hash(const RunConfig& cfg) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "%.17g %.17g %.17g %.17g %.17g %.17g %.17g|%.17g %.17g %.17g "
                "%.17g %.17g %.17g|%.17g %.17g",
                cfg.params.mu, cfg.params.sigma, cfg.params.sigma_a,
                cfg.params.sigma_s, cfg.params.a, cfg.params.kappa,
                cfg.params.nu, cfg.equilibrium.rho_bar,
                cfg.equilibrium.theta_bar, cfg.equilibrium.Er_bar,
                cfg.equilibrium.B_bar(0), cfg.equilibrium.B_bar(1),
                cfg.equilibrium.B_bar(2), cfg.R, cfg.Cv);
  std::uint64_t h = 1469598103934665603ull;
  for (const char* p = buf; *p; ++p) {
    h ^= static_cast<unsigned char>(*p);
    h *= 1099511628211ull;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

}  // namespace radmhd
