#ifndef GISEMI_TOOLS_CLI_HPP_
#define GISEMI_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace gisemi::cli {

  enum ExitStatus : int { ok = 0, counterexample = 1, input_error = 2 };

  // Runs the gis command line with args (excluding the program name).
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace gisemi::cli

#endif  // GISEMI_TOOLS_CLI_HPP_
