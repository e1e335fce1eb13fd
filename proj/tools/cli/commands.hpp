#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qca::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kSchema = 2,       // I/O, schema, parameter and usage errors
  kConditioning = 3  // numerical-conditioning refusal
};

/// Entry point shared by the qca binary and the tests. `args` excludes the
/// program name. Verdicts never influence the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qca::cli
