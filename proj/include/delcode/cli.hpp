#pragma once

#include <iosfwd>

namespace delcode {

// Full command-line driver (subcommands: build, encode, corrupt, decode,
// verify, analyze, report). Streams are injected so tests can run the CLI
// in-process. Returns the process exit code:
//   0 success, 1 contract violation or runtime failure,
//   2 usage error, 3 enumeration budget exceeded.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace delcode
