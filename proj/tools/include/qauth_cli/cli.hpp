#pragma once

#include <cstdint>
#include <ostream>

namespace qauth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitVerification = 3;

/// Seed used when --seed is not given.
inline constexpr std::uint64_t kDefaultSeed = 20240229;

/// Runs one `qauth` invocation. Reports go to `out` (or the --out file),
/// diagnostics to `err`. Returns one of the kExit* codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qauth::cli
