#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "tutte/benzenoid.hpp"
#include "tutte/corpus.hpp"
#include "tutte/error.hpp"
#include "tutte/fixtures.hpp"
#include "tutte/tutte.hpp"

using namespace tutte;

namespace {

const BivarPoly x = BivarPoly::x();
const BivarPoly y = BivarPoly::y();

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

const MultiGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

}  // namespace

TEST_CASE("tutte_subset") {
  CHECK(tutte_subset(path(2)) == x);
  CHECK(tutte_subset(MultiGraph(1, {{0, 0}})) == y);
  CHECK(tutte_subset(cycle(3)) == x * x + x + y);
  CHECK(tutte_subset(MultiGraph(1, std::vector<Edge>{})) == BivarPoly(1));
  CHECK_THROWS_AS(tutte_subset(MultiGraph(2, std::vector<Edge>{})), Disconnected);
  CHECK_THROWS_AS(tutte_subset(cycle(23)), TooManyEdges);
  CHECK(tutte_subset(cycle(22)).eval(1, 1) == 22);
  CHECK(tutte_subset(cycle(23), 23) == tutte_delcon(cycle(23)));
  CHECK_THROWS_AS(tutte_subset_serial(cycle(23)), TooManyEdges);
}

TEST_CASE("tutte_delcon") {
  CHECK(tutte_delcon(path(3)) == x * x);
  CHECK(tutte_delcon(cycle(6)) == tutte_subset(cycle(6)));
  CHECK(tutte_delcon(cycle(6)) == x.pow(5) + x.pow(4) + x.pow(3) + x * x + x + y);
  CHECK(tutte_delcon(MultiGraph(1, std::vector<Edge>{})) == BivarPoly(1));
  CHECK_THROWS_AS(tutte_delcon(MultiGraph(3, {{0, 1}})), Disconnected);
  const auto& r1 = appendix_fixtures().polynomial(Chain::pyrene, 1).poly;
  CHECK(tutte_delcon(build_chain(Chain::pyrene, 1)) == r1);
}

TEST_CASE("known small values") {
  // K4: x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
  CHECK(tutte_subset(k4) == x.pow(3) + 3 * x * x + 2 * x + 4 * x * y + 2 * y + 3 * y * y + y.pow(3));
  // dipole with m edges: x + y + ... + y^(m-1)
  CHECK(tutte_delcon(MultiGraph(2, std::vector<Edge>(3, Edge{0, 1}))) == x + y + y * y);
}

TEST_CASE("subset expansion agrees with deletion-contraction on the corpus") {
  for (const auto& item : generate_corpus()) {
    CAPTURE(item.name);
    const BivarPoly s = tutte_subset(item.graph);
    CHECK(s == tutte_delcon(item.graph));
    CHECK(s == tutte_subset_serial(item.graph));
  }
}

TEST_CASE("library agrees with a naive recursion") {
  for (const auto& item : generate_corpus()) {
    if (item.graph.edge_count() > 10) continue;
    CAPTURE(item.name);
    CHECK(tutte_delcon(item.graph) == oracle::naive_tutte(item.graph));
  }
}

TEST_CASE("specializations") {
  for (const auto& item : generate_corpus()) {
    CAPTURE(item.name);
    const BivarPoly t = tutte_delcon(item.graph);
    const BigInt trees = count_spanning_trees_kirchhoff(item.graph);
    CHECK(t.eval(1, 1) == trees);
    CHECK(trees == oracle::brute_spanning_trees(item.graph));
    BigInt all;
    mpz_ui_pow_ui(all.get_mpz_t(), 2, item.graph.edge_count());
    CHECK(t.eval(2, 2) == all);
  }
  for (std::size_t n = 2; n <= 8; ++n) CHECK(tutte_delcon(path(n)) == x.pow(n - 1));
}

TEST_CASE("degree bounds") {
  for (const auto& item : generate_corpus()) {
    const BivarPoly t = tutte_delcon(item.graph);
    const auto& g = item.graph;
    CHECK(t.max_x_degree() <= g.vertex_count() - 1);
    CHECK(t.max_y_degree() <= g.edge_count() - g.vertex_count() + 1);
  }
}

TEST_CASE("block multiplicativity") {
  for (const auto& item : generate_corpus()) {
    BivarPoly product = 1;
    for (const auto& b : blocks(item.graph)) product = product * tutte_subset(b);
    CHECK(product == tutte_subset(item.graph));
  }
}

TEST_CASE("deletion-contraction on any edge preserves the value") {
  for (const auto& item : generate_corpus()) {
    const MultiGraph& g = item.graph;
    const BivarPoly t = tutte_subset(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (g.is_loop(e)) {
        CHECK(t == y * tutte_subset(g.delete_edge(e)));
      } else if (g.is_bridge(e)) {
        CHECK(t == x * tutte_subset(g.contract_edge(e)));
      } else {
        CHECK(t == tutte_subset(g.delete_edge(e)) + tutte_subset(g.contract_edge(e)));
      }
    }
  }
}

TEST_CASE("branch order does not matter") {
  for (const auto& item : generate_corpus()) {
    CHECK(tutte_delcon(item.graph, {.branch = BranchRule::max_multiplicity}) ==
          tutte_delcon(item.graph));
  }
}

TEST_CASE("parallel delcon matches serial delcon") {
  for (Chain chain : {Chain::pyrene, Chain::triphenylene}) {
    const MultiGraph g = build_chain(chain, 2);
    CHECK(tutte_delcon(g, {.parallel = true, .task_depth = 6}) == tutte_delcon(g));
  }
  for (const auto& item : generate_corpus()) {
    CHECK(tutte_delcon(item.graph, {.parallel = true}) == tutte_delcon(item.graph));
  }
}

TEST_CASE("memo cache") {
  TutteCache cache;
  const MultiGraph g = build_chain(Chain::pyrene, 2);
  const BivarPoly first = tutte_delcon(g, cache);
  const std::size_t stored = cache.size();
  CHECK(stored > 0);
  CHECK(tutte_delcon(g, cache) == first);
  CHECK(cache.hits() > 0);
  CHECK(cache.size() == stored);
  cache.clear();
  CHECK(cache.size() == 0);
  // keys ignore edge order
  const MultiGraph a(3, {{0, 1}, {1, 2}, {2, 0}});
  const MultiGraph b(3, {{2, 0}, {1, 0}, {2, 1}});
  CHECK(TutteCache::key_of(a) == TutteCache::key_of(b));
}

TEST_CASE("split_two_cut") {
  const MultiGraph k2 = path(2);
  const MultiGraph p3 = path(3);
  CHECK(split_two_cut(split_parts(k2, 0, 1, k2, 0, 1)) == tutte_subset(MultiGraph(2, {{0, 1}, {0, 1}})));
  CHECK(split_two_cut(split_parts(k2, 0, 1, p3, 0, 2)) == x * x + x + y);
  CHECK(split_two_cut(split_parts(p3, 0, 2, p3, 0, 2)) == x.pow(3) + x * x + x + y);
  CHECK(glue_two_cut(p3, 0, 2, p3, 0, 2).edge_count() == 4);
  SplitParts bogus{x, 1, y, 1};
  CHECK_THROWS_AS(split_two_cut(bogus), NotDivisible);
}

TEST_CASE("split_two_cut_with_edge") {
  const MultiGraph k2 = path(2);
  const MultiGraph p3 = path(3);
  CHECK(split_two_cut_with_edge(split_parts(k2, 0, 1, k2, 0, 1)) == x * x + x + y);
  CHECK(split_two_cut_with_edge(split_parts(p3, 0, 2, p3, 0, 2)) ==
        x.pow(4) + x.pow(3) + x * x + x + y);
  CHECK(tutte_subset(glue_with_edge(p3, 0, 2, p3, 0, 2)) == tutte_subset(cycle(5)));
  CHECK_THROWS_AS(glue_with_edge(k2, 0, 0, k2, 0, 1), UnknownVertex);
}

TEST_CASE("splitting agrees with direct evaluation on corpus two-cuts") {
  std::size_t checked = 0;
  for (const auto& item : generate_corpus()) {
    if (!item.cut) continue;
    const TwoCut& t = *item.cut;
    const SplitParts parts = split_parts(t.h1, t.v1, t.u1, t.h2, t.v2, t.u2);
    const BivarPoly value = t.with_edge ? split_two_cut_with_edge(parts) : split_two_cut(parts);
    CHECK(value == tutte_delcon(item.graph));
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("kirchhoff") {
  CHECK(count_spanning_trees_kirchhoff(cycle(6)) == 6);
  CHECK(count_spanning_trees_kirchhoff(k4) == 16);
  CHECK(count_spanning_trees_kirchhoff(build_chain(Chain::pyrene, 1)) == 1092);
  CHECK(count_spanning_trees_kirchhoff(MultiGraph(1, {{0, 0}})) == 1);
  CHECK(count_spanning_trees_kirchhoff(MultiGraph(2, std::vector<Edge>(5, Edge{0, 1}))) == 5);
  CHECK_THROWS_AS(count_spanning_trees_kirchhoff(MultiGraph(2, std::vector<Edge>{})), Disconnected);
  for (Chain chain : {Chain::linear, Chain::pyrene, Chain::triphenylene}) {
    for (unsigned n = 1; n <= 6; ++n) {
      const MultiGraph g = build_chain(chain, n);
      CHECK(count_spanning_trees_kirchhoff(g) == count_spanning_trees_kirchhoff_serial(g));
    }
  }
}

TEST_CASE("verify_duality") {
  CHECK(verify_duality(cycle(6), MultiGraph(2, std::vector<Edge>(6, Edge{0, 1}))));
  CHECK_FALSE(verify_duality(path(2), path(2)));
  CHECK(verify_duality(path(2), MultiGraph(1, {{0, 0}})));
  CHECK(verify_duality(k4, k4));
}
