#ifndef RADMHD_ERRORS_HPP
#define RADMHD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace radmhd {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A state with rho <= 0 or theta <= 0 (or Tr <= 0) was supplied.
struct NonPositiveState : Error {
  using Error::Error;
};

/// Er_bar does not match a*theta_bar^4.
struct CompatibilityViolation : Error {
  using Error::Error;
};

/// An eigensolver failed to converge.
struct EigenFailure : Error {
  using Error::Error;
};

/// kernel_eigenpairs_nu0 called with nu > 0.
struct DampingPresent : Error {
  using Error::Error;
};

/// A coercivity infimum came out non-positive.
struct NonCoercive : Error {
  using Error::Error;
};

struct GridTooSmall : Error {
  using Error::Error;
};

/// Configuration file parse error; carries the offending line number.
struct ConfigError : Error {
  int line;
  ConfigError(int line_, const std::string& msg)
      : Error("config line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace radmhd

#endif
