#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tutte/bivar_poly.hpp"

namespace tutte {

enum class VerifyScope { all, oracles, appendix, duality, corollaries };

/// Throws Error on unknown names.
VerifyScope parse_verify_scope(std::string_view name);

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Empty on success; otherwise the first counterexample.
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// One "PASS name" / "FAIL name: detail" line per check.
  void print(std::ostream& os) const;
};

VerifyReport run_verify(VerifyScope scope);

/// The fan corollary as a binomial sum in x + y + 1 and -xy.
BivarPoly fan_corollary(unsigned n);
/// The wheel corollary double sum, n >= 3.
BivarPoly wheel_corollary(unsigned n);

}  // namespace tutte
