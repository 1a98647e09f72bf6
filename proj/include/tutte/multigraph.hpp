#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tutte {

using VertexId = std::uint32_t;
/// Edge ids are dense positions in the edge list; every rewrite renumbers
/// them, so an id is only meaningful for the graph it came from.
using EdgeId = std::uint32_t;

struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  bool is_loop() const noexcept { return a == b; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled multigraph with loops and parallel edges.
///
/// Rewrites never mutate; they return a new graph. After any vertex merge
/// the merged vertex takes the smallest index of the merged set and the
/// remaining vertices are compacted to 0..n-1 in their original order.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Throws UnknownVertex when an endpoint is out of range.
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);
  MultiGraph(std::size_t vertex_count,
             std::initializer_list<std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const;

  MultiGraph delete_edge(EdgeId e) const;
  /// Contracting a loop is the same as deleting it; parallel copies of a
  /// contracted edge become loops.
  MultiGraph contract_edge(EdgeId e) const;
  MultiGraph identify_vertices(std::span<const VertexId> vertices) const;
  MultiGraph add_edge(VertexId a, VertexId b) const;

  /// Components of (V, subset). Throws UnknownEdge for ids out of range.
  std::size_t component_count(std::span<const EdgeId> subset) const;
  std::size_t component_count() const;
  bool is_connected() const;

  bool is_loop(EdgeId e) const;
  bool is_bridge(EdgeId e) const;

  std::vector<std::size_t> degrees() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  void check_edge(EdgeId e) const;

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Disjoint union of g and h with vg and vh identified. Vertices of g keep
/// their indices; vertices of h follow in order with vh removed.
MultiGraph one_point_join(const MultiGraph& g, VertexId vg, const MultiGraph& h,
                          VertexId vh);

/// Disjoint union; vertices of h are shifted by g.vertex_count().
MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h);

/// 2-connected blocks of a connected graph. Bridges are K2 blocks and each
/// loop is a one-vertex block of its own. Each block is compacted with
/// vertices kept in original relative order and edges in original id order.
/// A graph without edges has no blocks. Throws Disconnected.
std::vector<MultiGraph> blocks(const MultiGraph& g);

/// Edge list with endpoints ordered (min, max) and sorted; two graphs with
/// equal signatures are equal up to edge renumbering.
std::vector<std::pair<VertexId, VertexId>> edge_signature(const MultiGraph& g);

/// Small union-find used by the rank computations.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  VertexId find(VertexId v);
  /// Returns true if the two sets were distinct.
  bool unite(VertexId a, VertexId b);
  std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t sets_;
};

}  // namespace tutte
