#pragma once

#include <array>
#include <string>
#include <vector>

#include "tutte/benzenoid.hpp"
#include "tutte/bivar_poly.hpp"

namespace tutte {

/// A stored Tutte polynomial of one chain member.
struct PolynomialFixture {
  Chain chain;
  unsigned n;
  std::string source;
  BivarPoly poly;
};

/// Spanning tree counts of the first four members of a chain.
struct TauFixture {
  Chain chain;
  std::string source;
  std::array<BigInt, 4> values;
};

struct FixtureSet {
  std::vector<PolynomialFixture> polynomials;
  std::vector<TauFixture> spanning_trees;

  /// Throws Error when absent.
  const PolynomialFixture& polynomial(Chain chain, unsigned n) const;
  const TauFixture& tau(Chain chain) const;
};

/// The fixture files compiled into the library (data/fixtures).
/// Parsed once; throws ParseError if a file is malformed.
const FixtureSet& appendix_fixtures();

}  // namespace tutte
