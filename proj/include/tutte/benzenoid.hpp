#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "tutte/bivar_poly.hpp"
#include "tutte/fanlike.hpp"
#include "tutte/hex_system.hpp"
#include "tutte/multigraph.hpp"

namespace tutte {

/// Benzenoid chain families: linear chains L_n, pyrene chains R_n and
/// triphenylene chains T_n.
enum class Chain { linear, pyrene, triphenylene };

std::string_view chain_name(Chain chain);
/// "linear"/"L", "pyrene"/"R", "triphenylene"/"T". Throws Error otherwise.
Chain parse_chain(std::string_view name);

/// Hexagons of the n-th member. Consecutive units share exactly one edge:
/// linear hexagons side by side, pyrene units through their two central
/// hexagons, triphenylene units through two outer hexagons.
/// Throws BadN for n == 0.
std::vector<HexCell> chain_cells(Chain chain, unsigned n);
MultiGraph build_chain(Chain chain, unsigned n);

/// Marked multigraph whose fan-like family (dual_family) is the planar dual
/// of the chain: a 4-fold dipole for L, the pyrene/triphenylene dual with
/// one outer edge removed from each linking hexagon for R/T.
MarkedGraph build_dual_base(Chain chain);
Family dual_family(Chain chain);

/// The printed constants I, J, K for pyrene and triphenylene; in terms of
/// the dual base G they are T(G; y, x), T(G/{v,u}; y, x) and
/// T((G + vw)/{v,u}; y, x) - J. Throws Error for the linear chain.
struct IJKConstants {
  BivarPoly i;
  BivarPoly j;
  BivarPoly k;
};
const IJKConstants& ijk_constants(Chain chain);

/// Transfer quotients A..D formed from I, J, K.
TransferCoeffs chain_coeffs(Chain chain);

/// T(chain_n; x, y) = head * S_n + tail * S_{n-1}.
const FamilyClosedForm& chain_closed_form(Chain chain);
BivarPoly closed_chain(Chain chain, unsigned n, Evaluation how = Evaluation::lambda_power);

/// (trace, det) of the chain kernel at x = y = 1.
std::pair<BigInt, BigInt> tau_kernel(Chain chain);
/// Spanning trees of the n-th member by the integer recurrence
/// a_n = trace * a_{n-1} - det * a_{n-2}, seeded from closed_chain at 1, 2.
BigInt tau_chain(Chain chain, unsigned n);

}  // namespace tutte
