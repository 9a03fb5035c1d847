#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pawns::cli {

/// Exit statuses of `pawns`.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // computation error, failed check or table mismatch
inline constexpr int kUsage = 2;    // bad flags or invalid input

/// Runs the command line (args excludes the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count from PAWNS_WORKERS, else the hardware thread count.
unsigned default_workers();

}  // namespace pawns::cli
