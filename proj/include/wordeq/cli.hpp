#pragma once

#include <iosfwd>

namespace wordeq {

// Exit codes shared by every command.
enum ExitCode : int {
  kExitSat = 0,
  kExitUnsat = 1,
  kExitUnknown = 2,
  kExitParse = 3,  // unreadable input, bad flags, or a witness that does not verify
  kExitViolation = 4,
  kExitGenFailed = 5,
  kExitCompressBound = 6,
};

// Entry point of the wordeq tool: solve, oracle, profile, gen, compress.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wordeq
