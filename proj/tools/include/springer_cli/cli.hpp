#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace springer::cli {

// Exit statuses: success, a mathematical failure (no preimage, failed
// invariant), or malformed input.
inline constexpr int kOk = 0;
inline constexpr int kLogicalFailure = 1;
inline constexpr int kInputError = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for tests: argv[0] is supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace springer::cli
