#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace syzstab::cli {

/// Exit codes: 0 success (whatever the verdict), 1 malformed input or usage,
/// 2 precondition violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitPrecondition = 2;

/// Runs one command line (without the program name). Reads a JSON family from
/// `in` when neither --file nor --monomials is given and the command needs one.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace syzstab::cli
