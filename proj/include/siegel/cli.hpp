#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "siegel/theta_numeric.hpp"

namespace siegel {

/// Options shared by every subcommand. Randomness comes from `seed` only, so an
/// identical configuration reproduces the output byte for byte.
struct RunConfig {
  int genus = 2;
  std::string weight;  // empty or "symbolic" selects a symbolic weight
  int trunc = 48;
  double tol_modularity = 1e-8;
  double tol_heat = 1e-10;
  double tol_zero = 1e-10;
  std::uint64_t seed = 1;
  std::string out;

  /// One-line summary of the defaults in effect, starting with "# ".
  std::string header(const std::string& command) const;
};

/// "diag:1.1,1.7" for diag(1.1i, 1.7i), or a file with one row of "re,im" entries per line.
CMatrix parse_tau(const std::string& spec);

/// Runs one command line (without the program name). Returns the number of failed
/// checks; usage and input errors return 1.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace siegel
