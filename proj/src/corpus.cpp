#include "tutte/corpus.hpp"

#include <algorithm>
#include <random>

#include "tutte/error.hpp"
#include "tutte/fanlike.hpp"
#include "tutte/tutte.hpp"

namespace tutte {

namespace {

MultiGraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
  }
  return MultiGraph(n, std::move(edges));
}

MultiGraph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  }
  return MultiGraph(n, std::move(edges));
}

MultiGraph dipole(std::size_t multiplicity) {
  return MultiGraph(2, std::vector<Edge>(multiplicity, Edge{0, 1}));
}

}  // namespace

MultiGraph random_connected_multigraph(std::size_t vertices, std::size_t edges, unsigned seed,
                                       double loop_rate) {
  if (vertices == 0) throw BadN("need at least one vertex");
  if (edges + 1 < vertices) throw BadN("too few edges for a connected graph");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(vertices - 1));
  std::bernoulli_distribution loop(loop_rate);
  std::vector<Edge> list;
  for (VertexId v = 1; v < vertices; ++v) {
    std::uniform_int_distribution<VertexId> parent(0, v - 1);
    list.push_back({parent(rng), v});
  }
  while (list.size() < edges) {
    const VertexId a = pick(rng);
    if (loop(rng) || vertices == 1) {
      list.push_back({a, a});
      continue;
    }
    VertexId b = pick(rng);
    while (b == a) b = pick(rng);
    list.push_back({a, b});
  }
  std::shuffle(list.begin(), list.end(), rng);
  return MultiGraph(vertices, std::move(list));
}

std::vector<CorpusGraph> generate_corpus(unsigned seed, std::size_t max_edges) {
  std::vector<CorpusGraph> out;
  auto add = [&](std::string name, MultiGraph g, std::optional<TwoCut> cut = std::nullopt) {
    if (g.edge_count() <= max_edges) out.push_back({std::move(name), std::move(g), std::move(cut)});
  };

  add("loop", MultiGraph(1, {{0, 0}}));
  add("K2", path(2));
  for (std::size_t n = 2; n <= 8; ++n) add("C" + std::to_string(n), cycle(n));
  for (std::size_t n = 3; n <= 6; ++n) add("P" + std::to_string(n), path(n));
  for (std::size_t m = 3; m <= 5; ++m) add("dipole" + std::to_string(m), dipole(m));
  add("K4", MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  add("K4+loop", MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 2}}));
  add("bowtie", one_point_join(cycle(3), 0, cycle(3), 0));
  add("triangle+pendant", one_point_join(cycle(3), 2, path(2), 0));
  add("theta", MultiGraph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}}));
  add("double-loop", MultiGraph(2, {{0, 1}, {0, 0}, {1, 1}, {1, 1}}));

  const MarkedGraph k2(path(2), 0, 1);
  for (unsigned n = 1; n <= 5; ++n) add("fan" + std::to_string(n), build_family(k2, Family::F, n));
  for (unsigned n = 2; n <= 6; ++n) add("wheel" + std::to_string(n), build_family(k2, Family::W, n));

  // Two-vertex cuts built from small pieces with the cut pair marked.
  const std::vector<std::pair<std::string, MultiGraph>> pieces = {
      {"K2", path(2)}, {"P3", path(3)}, {"C3", cycle(3)}, {"C4", cycle(4)}, {"dipole2", dipole(2)}};
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i; j < pieces.size(); ++j) {
      const auto& [n1, h1] = pieces[i];
      const auto& [n2, h2] = pieces[j];
      const auto u1 = static_cast<VertexId>(h1.vertex_count() - 1);
      const auto u2 = static_cast<VertexId>(h2.vertex_count() - 1);
      add(n1 + "||" + n2, glue_two_cut(h1, 0, u1, h2, 0, u2), TwoCut{h1, 0, u1, h2, 0, u2});
      add(n1 + "-e-" + n2, glue_with_edge(h1, 0, u1, h2, 0, u2),
          TwoCut{h1, 0, u1, h2, 0, u2, true});
    }
  }

  // Random multigraphs, some of them joined at a cut vertex and some glued
  // along two vertices.
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> vertices(2, 6);
  for (int i = 0; i < 24; ++i) {
    const std::size_t nv = vertices(rng);
    std::uniform_int_distribution<std::size_t> extra(0, max_edges - (nv - 1));
    const std::size_t ne = nv - 1 + extra(rng);
    add("random" + std::to_string(i), random_connected_multigraph(nv, ne, rng()));
  }
  for (int i = 0; i < 8; ++i) {
    const MultiGraph a = random_connected_multigraph(3, 5, rng());
    const MultiGraph b = random_connected_multigraph(3, 5, rng());
    add("cutvertex" + std::to_string(i), one_point_join(a, 1, b, 0));
    add("twocut" + std::to_string(i), glue_two_cut(a, 0, 2, b, 1, 2), TwoCut{a, 0, 2, b, 1, 2});
  }
  return out;
}

}  // namespace tutte
