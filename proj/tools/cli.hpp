#pragma once

#include <iosfwd>
#include <string>

#include "tablut/counting.hpp"

namespace tablut::cli {

enum class OutputFormat { Text, Json, Csv };

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kVerificationFailed = 2,
};

// Runs one command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string render_bounds(const counting::BoundsReport& report, OutputFormat format);

}  // namespace tablut::cli
