#include "tutte/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tutte/error.hpp"

namespace tutte {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), VertexId{0});
}

VertexId DisjointSets::find(VertexId v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

bool DisjointSets::unite(VertexId a, VertexId b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --sets_;
  return true;
}

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.a >= vertex_count_ || e.b >= vertex_count_) {
      throw UnknownVertex("edge endpoint " + std::to_string(std::max(e.a, e.b)) +
                          " out of range for " + std::to_string(vertex_count_) +
                          " vertices");
    }
  }
}

MultiGraph::MultiGraph(std::size_t vertex_count,
                       std::initializer_list<std::pair<VertexId, VertexId>> edges)
    : MultiGraph(vertex_count, [&] {
        std::vector<Edge> out;
        out.reserve(edges.size());
        for (auto [a, b] : edges) out.push_back({a, b});
        return out;
      }()) {}

void MultiGraph::check_edge(EdgeId e) const {
  if (e >= edges_.size()) throw UnknownEdge("no edge with id " + std::to_string(e));
}

const Edge& MultiGraph::edge(EdgeId e) const {
  check_edge(e);
  return edges_[e];
}

MultiGraph MultiGraph::delete_edge(EdgeId e) const {
  check_edge(e);
  std::vector<Edge> out;
  out.reserve(edges_.size() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i != e) out.push_back(edges_[i]);
  }
  MultiGraph g;
  g.vertex_count_ = vertex_count_;
  g.edges_ = std::move(out);
  return g;
}

MultiGraph MultiGraph::contract_edge(EdgeId e) const {
  check_edge(e);
  const Edge target = edges_[e];
  MultiGraph rest = delete_edge(e);
  if (target.is_loop()) return rest;
  const VertexId pair[2] = {target.a, target.b};
  return rest.identify_vertices(pair);
}

MultiGraph MultiGraph::identify_vertices(std::span<const VertexId> vertices) const {
  if (vertices.empty()) throw EmptySet("cannot identify an empty vertex set");
  std::vector<bool> member(vertex_count_, false);
  for (VertexId v : vertices) {
    if (v >= vertex_count_) throw UnknownVertex("no vertex " + std::to_string(v));
    member[v] = true;
  }
  const VertexId keep = *std::min_element(vertices.begin(), vertices.end());
  std::vector<VertexId> relabel(vertex_count_);
  VertexId next = 0;
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (member[v] && v != keep) continue;
    relabel[v] = next++;
  }
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (member[v]) relabel[v] = relabel[keep];
  }
  MultiGraph g;
  g.vertex_count_ = next;
  g.edges_.reserve(edges_.size());
  for (const auto& e : edges_) g.edges_.push_back({relabel[e.a], relabel[e.b]});
  return g;
}

MultiGraph MultiGraph::add_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count_ || b >= vertex_count_) {
    throw UnknownVertex("no vertex " + std::to_string(std::max(a, b)));
  }
  MultiGraph g = *this;
  g.edges_.push_back({a, b});
  return g;
}

std::size_t MultiGraph::component_count(std::span<const EdgeId> subset) const {
  DisjointSets sets(vertex_count_);
  for (EdgeId e : subset) {
    check_edge(e);
    sets.unite(edges_[e].a, edges_[e].b);
  }
  return sets.set_count();
}

std::size_t MultiGraph::component_count() const {
  DisjointSets sets(vertex_count_);
  for (const auto& e : edges_) sets.unite(e.a, e.b);
  return sets.set_count();
}

bool MultiGraph::is_connected() const { return component_count() <= 1; }

bool MultiGraph::is_loop(EdgeId e) const { return edge(e).is_loop(); }

bool MultiGraph::is_bridge(EdgeId e) const {
  const Edge& target = edge(e);
  if (target.is_loop()) return false;
  DisjointSets sets(vertex_count_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i != e) sets.unite(edges_[i].a, edges_[i].b);
  }
  return sets.find(target.a) != sets.find(target.b);
}

std::vector<std::size_t> MultiGraph::degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const auto& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

MultiGraph one_point_join(const MultiGraph& g, VertexId vg, const MultiGraph& h,
                          VertexId vh) {
  if (vg >= g.vertex_count()) throw UnknownVertex("no vertex " + std::to_string(vg) + " in g");
  if (vh >= h.vertex_count()) throw UnknownVertex("no vertex " + std::to_string(vh) + " in h");
  const auto offset = static_cast<VertexId>(g.vertex_count());
  auto map_h = [&](VertexId v) -> VertexId {
    if (v == vh) return vg;
    return offset + (v < vh ? v : v - 1);
  };
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const auto& e : h.edges()) edges.push_back({map_h(e.a), map_h(e.b)});
  return MultiGraph(g.vertex_count() + h.vertex_count() - 1, std::move(edges));
}

MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h) {
  const auto offset = static_cast<VertexId>(g.vertex_count());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const auto& e : h.edges()) edges.push_back({e.a + offset, e.b + offset});
  return MultiGraph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

namespace {

MultiGraph induced_block(const MultiGraph& g, std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  std::vector<VertexId> verts;
  for (EdgeId id : ids) {
    verts.push_back(g.edges()[id].a);
    verts.push_back(g.edges()[id].b);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto index = [&](VertexId v) {
    return static_cast<VertexId>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(ids.size());
  for (EdgeId id : ids) edges.push_back({index(g.edges()[id].a), index(g.edges()[id].b)});
  return MultiGraph(verts.size(), std::move(edges));
}

}  // namespace

std::vector<MultiGraph> blocks(const MultiGraph& g) {
  if (!g.is_connected()) throw Disconnected("blocks() requires a connected graph");
  const std::size_t n = g.vertex_count();
  const auto edges = g.edges();

  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  std::vector<MultiGraph> out;
  for (EdgeId id = 0; id < edges.size(); ++id) {
    if (edges[id].is_loop()) continue;
    adj[edges[id].a].push_back({edges[id].b, id});
    adj[edges[id].b].push_back({edges[id].a, id});
  }

  // Iterative Hopcroft-Tarjan; the parent edge is skipped by id so that
  // parallel edges are treated as back edges.
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnseen);
  std::vector<std::size_t> low(n, 0);
  std::vector<EdgeId> edge_stack;
  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::size_t timer = 0;
  const auto no_edge = static_cast<EdgeId>(-1);

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, no_edge, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, id] = adj[f.v][f.next++];
        if (id == f.parent_edge) continue;
        if (disc[w] == kUnseen) {
          edge_stack.push_back(id);
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(id);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      const VertexId parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) {
        std::vector<EdgeId> component;
        while (true) {
          const EdgeId id = edge_stack.back();
          edge_stack.pop_back();
          component.push_back(id);
          if (id == done.parent_edge) break;
        }
        out.push_back(induced_block(g, std::move(component)));
      }
    }
  }
  for (EdgeId id = 0; id < edges.size(); ++id) {
    if (edges[id].is_loop()) out.push_back(MultiGraph(1, {{0, 0}}));
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> edge_signature(const MultiGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> sig;
  sig.reserve(g.edge_count());
  for (const auto& e : g.edges()) sig.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace tutte
