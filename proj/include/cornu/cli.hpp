#pragma once

// Command-line front end. Kept in the library so tests can drive it
// without spawning processes.

#include <iosfwd>
#include <string>
#include <vector>

#include "cornu/hyperbolic.hpp"

namespace cornu::cli {

enum ExitCode { kOk = 0, kDomainError = 2, kInputError = 3 };

/// key=value lines; '#' starts a comment. Keys: eps, max_depth, seed, width, height.
struct Config {
  double eps = kEpsGeo;
  int max_depth = 7;
  unsigned seed = 1;
  int width = 800;
  int height = 800;
};
/// Throws MalformedInput.
Config parse_config(const std::string& text);

/// Runs `cornu <args>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cornu::cli
