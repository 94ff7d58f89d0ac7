#pragma once

#include <iosfwd>

namespace eldef::cli {

// Exit codes.
inline constexpr int kOk = 0;            // definable / entailed / done
inline constexpr int kUsage = 1;         // usage, I/O or parse error
inline constexpr int kTruncated = 2;     // caps exhausted before any definition
inline constexpr int kNegative = 3;      // not definable / not entailed

// Runs one `eldef` invocation. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eldef::cli
