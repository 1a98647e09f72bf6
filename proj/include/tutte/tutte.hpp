#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "tutte/bivar_poly.hpp"
#include "tutte/multigraph.hpp"

namespace tutte {

// ---------------------------------------------------------------------------
// Subset expansion
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultSubsetEdgeLimit = 22;

/// Rank-nullity expansion over all 2^|E| edge subsets.
///
/// The subsets are split by the choices on the first few edges; each prefix
/// is finished by a depth-first walk over the remaining edges with a
/// rollback union-find, and prefixes run in parallel under OpenMP.
/// Throws Disconnected, TooManyEdges.
BivarPoly tutte_subset(const MultiGraph& g, std::size_t edge_limit = kDefaultSubsetEdgeLimit);

/// Reference version: one fresh union-find per subset, single thread.
BivarPoly tutte_subset_serial(const MultiGraph& g,
                              std::size_t edge_limit = kDefaultSubsetEdgeLimit);

// ---------------------------------------------------------------------------
// Deletion-contraction
// ---------------------------------------------------------------------------

enum class BranchRule {
  /// First non-loop, non-bridge edge in id order.
  first_in_id_order,
  /// An edge of the largest parallel class. Only used to cross-check that
  /// the result does not depend on the branching order.
  max_multiplicity,
};

struct DelconOptions {
  BranchRule branch = BranchRule::first_in_id_order;
  /// Evaluate the two branches as OpenMP tasks near the top of the tree.
  bool parallel = false;
  unsigned task_depth = 8;
};

/// Memo table for deletion-contraction, keyed by the sorted edge list of a
/// block after vertex compaction. No isomorphism canonicalization is done,
/// so hits are best effort and never affect correctness. Safe for
/// concurrent lookup and insert.
class TutteCache {
 public:
  using Key = std::vector<std::uint64_t>;

  static Key key_of(const MultiGraph& block);

  std::optional<BivarPoly> find(const Key& key) const;
  void insert(Key key, const BivarPoly& value);

  std::size_t size() const;
  std::size_t hits() const noexcept { return hits_.load(); }
  std::size_t misses() const noexcept { return misses_.load(); }
  void clear();

 private:
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, BivarPoly, KeyHash> table_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

/// Tutte polynomial by deletion-contraction, factoring through blocks at
/// every step. Throws Disconnected.
BivarPoly tutte_delcon(const MultiGraph& g, const DelconOptions& options = {});
BivarPoly tutte_delcon(const MultiGraph& g, TutteCache& cache,
                       const DelconOptions& options = {});

// ---------------------------------------------------------------------------
// Spanning trees
// ---------------------------------------------------------------------------

/// Number of spanning trees as a cofactor of the Laplacian, by fraction-free
/// (Bareiss) elimination with the row updates of each step in parallel.
/// Loops are ignored. Throws Disconnected.
BigInt count_spanning_trees_kirchhoff(const MultiGraph& g);
/// Single-threaded reference for the same elimination.
BigInt count_spanning_trees_kirchhoff_serial(const MultiGraph& g);

// ---------------------------------------------------------------------------
// Splitting formulas
// ---------------------------------------------------------------------------

/// The four part polynomials T(H1), T(H1/{v,u}), T(H2), T(H2/{v,u}).
struct SplitParts {
  BivarPoly t_h1;
  BivarPoly t_h1_merged;
  BivarPoly t_h2;
  BivarPoly t_h2_merged;
};

/// T(G) for G = H1 u H2 glued along exactly two vertices v, u.
BivarPoly split_two_cut(const SplitParts& parts);

/// T(G) for H1, H2 sharing one vertex v plus an edge u1u2 between them;
/// the merged parts are H_i / {v, u_i}.
BivarPoly split_two_cut_with_edge(const SplitParts& parts);

/// Evaluates the four parts by deletion-contraction.
SplitParts split_parts(const MultiGraph& h1, VertexId v1, VertexId u1, const MultiGraph& h2,
                       VertexId v2, VertexId u2);

/// Edge-disjoint union of h1 and h2 with v1~v2 and u1~u2 identified.
/// Vertices: h1's in order, then h2's remaining ones in order.
MultiGraph glue_two_cut(const MultiGraph& h1, VertexId v1, VertexId u1, const MultiGraph& h2,
                        VertexId v2, VertexId u2);

/// h1 and h2 joined at v1~v2, plus a new edge u1u2 (appended last).
MultiGraph glue_with_edge(const MultiGraph& h1, VertexId v1, VertexId u1, const MultiGraph& h2,
                          VertexId v2, VertexId u2);

/// True iff T(g; x, y) == T(d; y, x), both sides by deletion-contraction.
bool verify_duality(const MultiGraph& g, const MultiGraph& d);

}  // namespace tutte
