#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tutte/bivar_poly.hpp"
#include "tutte/multigraph.hpp"

namespace tutte {

/// Connected base graph with the hub mark v, the link mark u and, for the
/// second kind of fan-like families, the outgoing link mark w.
class MarkedGraph {
 public:
  /// Throws MissingMark unless v, u (and w) are distinct valid vertices,
  /// Disconnected unless base is connected.
  MarkedGraph(MultiGraph base, VertexId v, VertexId u, std::optional<VertexId> w = std::nullopt);

  const MultiGraph& base() const noexcept { return base_; }
  VertexId v() const noexcept { return v_; }
  VertexId u() const noexcept { return u_; }
  std::optional<VertexId> w() const noexcept { return w_; }
  /// Throws MissingMark when the base has no w.
  VertexId require_w() const;

 private:
  MultiGraph base_;
  VertexId v_;
  VertexId u_;
  std::optional<VertexId> w_;
};

/// Fan-like constructions over n copies H_1..H_n of a marked base, all v
/// identified into one hub.
enum class Family {
  F,           ///< u_i -- u_{i+1} links
  F_plus,      ///< F plus hub -- u_1
  F_plusplus,  ///< F plus hub -- u_1 and hub -- u_n
  W,           ///< F plus the closing edge u_1 -- u_n (n >= 2)
  G,           ///< w_i -- u_{i+1} links
  pG,          ///< G plus hub -- u_1
  pGp,         ///< G plus hub -- u_1 and hub -- w_n
};

std::string_view family_name(Family family);
/// Accepts the names printed by family_name plus the CLI spellings
/// "F+", "F++", "+G", "+G+". Throws Error on anything else.
Family parse_family(std::string_view name);
bool needs_w(Family family);

/// Hub is vertex 0; the remaining base vertices of H_1, H_2, ... follow in
/// base order. Link edges follow all copy edges; hub edges come last.
/// Throws MissingMark, BadN.
MultiGraph build_family(const MarkedGraph& g, Family family, unsigned n);

/// Quotients of the bracketed transfer expressions by xy - x - y. d is
/// present for the second kind of families.
struct TransferCoeffs {
  BivarPoly a;
  BivarPoly b;
  BivarPoly c;
  std::optional<BivarPoly> d;
};

/// trace = l1 + l2 and det = l1 * l2 of the two transfer eigenvalues.
struct RecurrenceKernel {
  BivarPoly trace;
  BivarPoly det;
};

/// The Tutte polynomials of the base graph pieces every formula uses.
struct BasePolys {
  BivarPoly whole;          ///< T(G)
  BivarPoly merged_vu;      ///< T(G/{v,u})
  BivarPoly plus_plus;      ///< T(G + vu + vu)
  std::optional<BivarPoly> merged_vw;         ///< T(G/{v,w})
  std::optional<BivarPoly> merged_vuw;        ///< T(G/{v,u,w})
  std::optional<BivarPoly> plus_w;            ///< T(G + vw)
  std::optional<BivarPoly> plus_w_merged_vu;  ///< T((G + vw)/{v,u})
  std::optional<BivarPoly> plus_u;            ///< T(G + vu)
  std::optional<BivarPoly> plus_u_plus_w;     ///< T(G + vu + vw)
};

BasePolys base_polys(const MarkedGraph& g);

/// A, B, C for the first kind (F, F+, F++, W).
TransferCoeffs coeffs_F(const MarkedGraph& g);
TransferCoeffs coeffs_F(const BasePolys& base);
/// A..D for the plain second kind G.
TransferCoeffs coeffs_G(const MarkedGraph& g);
TransferCoeffs coeffs_G(const BasePolys& base);
/// A..D for +G and +G+ (the last copy carries the extra hub -- w edge).
TransferCoeffs coeffs_pGp(const MarkedGraph& g);
TransferCoeffs coeffs_pGp(const BasePolys& base);

/// (A + C, A(C - B)).
RecurrenceKernel kernel_first_kind(const TransferCoeffs& c);
/// (A + D, AD - BC).
RecurrenceKernel kernel_second_kind(const TransferCoeffs& c);

/// S_0 = 0, S_1 = 1, S_n = trace * S_{n-1} - det * S_{n-2}.
BivarPoly s_sequence(const RecurrenceKernel& k, unsigned n);
/// S_0..S_n.
std::vector<BivarPoly> s_sequence_table(const RecurrenceKernel& k, unsigned n);
/// sum_j (-1)^j C(n-j, j) trace^(n-2j) det^j, which equals S_{n+1}.
BivarPoly s_sum_form(const RecurrenceKernel& k, unsigned n);

enum class Evaluation {
  lambda_power,  ///< through S_n
  binomial_sum,  ///< through s_sum_form
};

/// T(member_n) = head * S_n + tail * S_{n-1}.
struct FamilyClosedForm {
  BivarPoly head;
  BivarPoly tail;
  RecurrenceKernel kernel;

  /// n >= 1; throws BadN otherwise.
  BivarPoly evaluate(unsigned n, Evaluation how = Evaluation::lambda_power) const;
};

/// Closed form for every family except W (which is not of this shape).
/// Throws MissingMark, NotDivisible, Error for W.
FamilyClosedForm family_closed_form(const MarkedGraph& g, Family family);

/// Closed-form Tutte polynomial of build_family(g, family, n).
/// For W the base member n = 2 comes from deletion-contraction.
BivarPoly closed_family(const MarkedGraph& g, Family family, unsigned n,
                        Evaluation how = Evaluation::lambda_power);

}  // namespace tutte
