#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lf::cli {

enum ExitCode : int { ok = 0, input_error = 1, counterexample = 2, internal_error = 3 };

/// Runs one command. args excludes the program name. `in` backs "--input -".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lf::cli
