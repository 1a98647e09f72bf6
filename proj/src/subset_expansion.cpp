#include <algorithm>
#include <string>
#include <vector>

#include <omp.h>

#include "tutte/error.hpp"
#include "tutte/tutte.hpp"

namespace tutte {

namespace {

// counts[i][j] = number of subsets A with r(E) - r(A) = i and
// |A| - r(A) = j.
using CountTable = std::vector<std::vector<std::uint64_t>>;

void check_input(const MultiGraph& g, std::size_t edge_limit) {
  if (g.edge_count() > edge_limit) {
    throw TooManyEdges("subset expansion limited to " + std::to_string(edge_limit) +
                       " edges, graph has " + std::to_string(g.edge_count()));
  }
  if (g.edge_count() > 62) throw TooManyEdges("subset expansion supports at most 62 edges");
  if (!g.is_connected()) throw Disconnected("subset expansion requires a connected graph");
}

CountTable empty_table(const MultiGraph& g) {
  return CountTable(std::max<std::size_t>(g.vertex_count(), 1),
                    std::vector<std::uint64_t>(g.edge_count() + 1, 0));
}

BivarPoly assemble(const CountTable& counts) {
  const BivarPoly x_minus_1 = BivarPoly::x() - 1;
  const BivarPoly y_minus_1 = BivarPoly::y() - 1;
  std::vector<BivarPoly> y_powers{BivarPoly(1)};
  for (std::size_t j = 1; j < counts.front().size(); ++j) {
    y_powers.push_back(y_powers.back() * y_minus_1);
  }
  BivarPoly result;
  BivarPoly x_power(1);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    BivarPoly inner;
    for (std::size_t j = 0; j < counts[i].size(); ++j) {
      if (counts[i][j] == 0) continue;
      BigInt c;
      mpz_set_ui(c.get_mpz_t(), counts[i][j]);
      inner = inner + BivarPoly(c) * y_powers[j];
    }
    result = result + x_power * inner;
    x_power = x_power * x_minus_1;
  }
  return result;
}

// Union-find with undo: union by size, no path compression.
class RollbackSets {
 public:
  explicit RollbackSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
    for (std::size_t v = 0; v < n; ++v) parent_[v] = static_cast<VertexId>(v);
  }

  VertexId find(VertexId v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // Returns true when a merge happened (and must later be undone).
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    --sets_;
    return true;
  }

  void undo() {
    const VertexId b = history_.back();
    history_.pop_back();
    const VertexId a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
    ++sets_;
  }

  std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<VertexId> history_;
  std::size_t sets_;
};

struct Walker {
  std::span<const Edge> edges;
  std::size_t vertex_count;
  CountTable& counts;
  RollbackSets sets;

  void walk(std::size_t next, std::size_t chosen) {
    if (next == edges.size()) {
      const std::size_t omega = sets.set_count();
      // Connected graph: r(E) - r(A) = omega - 1, |A| - r(A) = |A| - |V| + omega.
      ++counts[omega - 1][chosen + omega - vertex_count];
      return;
    }
    walk(next + 1, chosen);
    const bool merged = sets.unite(edges[next].a, edges[next].b);
    walk(next + 1, chosen + 1);
    if (merged) sets.undo();
  }
};

}  // namespace

BivarPoly tutte_subset_serial(const MultiGraph& g, std::size_t edge_limit) {
  check_input(g, edge_limit);
  CountTable counts = empty_table(g);
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t n = std::max<std::size_t>(g.vertex_count(), 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    DisjointSets sets(n);
    std::size_t chosen = 0;
    for (std::size_t e = 0; e < m; ++e) {
      if ((mask >> e) & 1u) {
        sets.unite(edges[e].a, edges[e].b);
        ++chosen;
      }
    }
    const std::size_t omega = sets.set_count();
    ++counts[omega - 1][chosen + omega - n];
  }
  return assemble(counts);
}

BivarPoly tutte_subset(const MultiGraph& g, std::size_t edge_limit) {
  check_input(g, edge_limit);
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t n = std::max<std::size_t>(g.vertex_count(), 1);
  const std::size_t prefix_bits = std::min<std::size_t>(m, 10);
  const auto prefixes = static_cast<std::int64_t>(std::uint64_t{1} << prefix_bits);

  CountTable total = empty_table(g);
#pragma omp parallel
  {
    CountTable local = empty_table(g);
    Walker walker{edges.subspan(prefix_bits), n, local, RollbackSets(n)};
#pragma omp for schedule(dynamic)
    for (std::int64_t prefix = 0; prefix < prefixes; ++prefix) {
      std::size_t chosen = 0;
      std::size_t merges = 0;
      for (std::size_t e = 0; e < prefix_bits; ++e) {
        if ((static_cast<std::uint64_t>(prefix) >> e) & 1u) {
          ++chosen;
          if (walker.sets.unite(edges[e].a, edges[e].b)) ++merges;
        }
      }
      walker.walk(0, chosen);
      for (; merges > 0; --merges) walker.sets.undo();
    }
#pragma omp critical(tutte_subset_merge)
    for (std::size_t i = 0; i < total.size(); ++i) {
      for (std::size_t j = 0; j < total[i].size(); ++j) total[i][j] += local[i][j];
    }
  }
  return assemble(total);
}

}  // namespace tutte
