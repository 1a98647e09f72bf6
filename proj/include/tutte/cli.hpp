#pragma once

#include <cstddef>
#include <iosfwd>

namespace tutte {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitInfeasible = 3,
};

/// Environment variable overriding the subset-expansion edge limit.
inline constexpr const char* kSubsetLimitEnv = "TUTTE_SUBSET_EDGE_LIMIT";

/// Largest chain graph the Kirchhoff counter will build, in vertices.
inline constexpr std::size_t kKirchhoffVertexLimit = 1000;

/// Entry point of the tutte tool; all output goes to out and err.
///
///   compute (--family NAME --n N | --graph FILE | --base FILE --marks v,u[,w]
///            --shape S --n N) [--method auto|closed|delcon|subset]
///           [--output text|json]
///   tau --family NAME --n N [--method recurrence|eval|kirchhoff]
///   verify [all|oracles|appendix|duality|corollaries]
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tutte
