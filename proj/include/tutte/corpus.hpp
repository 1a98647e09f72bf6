#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tutte/multigraph.hpp"

namespace tutte {

/// Pieces a corpus graph was glued from along a two-vertex cut.
struct TwoCut {
  MultiGraph h1;
  VertexId v1;
  VertexId u1;
  MultiGraph h2;
  VertexId v2;
  VertexId u2;
  /// True for the one-shared-vertex-plus-edge gluing.
  bool with_edge = false;
};

struct CorpusGraph {
  std::string name;
  MultiGraph graph;
  std::optional<TwoCut> cut;
};

/// Deterministic test corpus of connected multigraphs with at most
/// max_edges edges: cycles, paths, fans, wheels, K4, graphs with loops,
/// parallel edges and cut vertices, two-cut gluings and seeded random
/// multigraphs.
std::vector<CorpusGraph> generate_corpus(unsigned seed = 20240601, std::size_t max_edges = 12);

/// Random connected multigraph: a random spanning tree plus extra edges,
/// each extra edge a loop with probability loop_rate.
MultiGraph random_connected_multigraph(std::size_t vertices, std::size_t edges,
                                       unsigned seed, double loop_rate = 0.15);

}  // namespace tutte
