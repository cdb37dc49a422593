#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace prelie::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadArguments = 2,
  kDegreeCap = 3,
  kMethodDisagreement = 4,
};

/// Runs one command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A library operation and a command line that reaches it. Example command
/// lines may contain @SECTION_FILE@ and @MONOMIAL_FILE@ placeholders.
struct OpEntry {
  std::string_view library_op;
  std::vector<std::string> example;
};

const std::vector<OpEntry>& op_registry();

}  // namespace prelie::cli
