#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace tricenter::cli {

enum ExitCode { kPass = 0, kCheckFailed = 1, kConfigError = 2, kMathError = 3 };

int cmd_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err);
// suite: group | centers | local | semi | invariant | brocard | inverse
int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_inverse_design(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_catalog(std::ostream& out);

const std::vector<std::string>& verify_suites();
Real default_tolerance(const std::string& suite);

// Full command line (args exclude the program name). Maps errors to exit codes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tricenter::cli
