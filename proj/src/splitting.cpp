#include "tutte/error.hpp"
#include "tutte/tutte.hpp"

namespace tutte {

namespace {

BivarPoly combine(const BivarPoly& whole_factor, const SplitParts& p) {
  const BivarPoly x = BivarPoly::x();
  const BivarPoly numerator = whole_factor * p.t_h1 * p.t_h2 +
                              (x - 1) * p.t_h1_merged * p.t_h2_merged -
                              p.t_h1 * p.t_h2_merged - p.t_h1_merged * p.t_h2;
  return div_exact(numerator, split_denominator());
}

void check_vertex(const MultiGraph& g, VertexId v, const char* name) {
  if (v >= g.vertex_count()) {
    throw UnknownVertex(std::string("no vertex ") + std::to_string(v) + " in " + name);
  }
}

}  // namespace

BivarPoly split_two_cut(const SplitParts& parts) {
  return combine(BivarPoly::y() - 1, parts);
}

BivarPoly split_two_cut_with_edge(const SplitParts& parts) {
  const BivarPoly x = BivarPoly::x();
  return combine(x * BivarPoly::y() - x - 1, parts);
}

SplitParts split_parts(const MultiGraph& h1, VertexId v1, VertexId u1, const MultiGraph& h2,
                       VertexId v2, VertexId u2) {
  const VertexId pair1[2] = {v1, u1};
  const VertexId pair2[2] = {v2, u2};
  TutteCache cache;
  return {tutte_delcon(h1, cache), tutte_delcon(h1.identify_vertices(pair1), cache),
          tutte_delcon(h2, cache), tutte_delcon(h2.identify_vertices(pair2), cache)};
}

MultiGraph glue_two_cut(const MultiGraph& h1, VertexId v1, VertexId u1, const MultiGraph& h2,
                        VertexId v2, VertexId u2) {
  check_vertex(h1, v1, "h1");
  check_vertex(h1, u1, "h1");
  check_vertex(h2, v2, "h2");
  check_vertex(h2, u2, "h2");
  if (v1 == u1 || v2 == u2) throw UnknownVertex("the two cut vertices must be distinct");
  const auto n1 = static_cast<VertexId>(h1.vertex_count());
  std::vector<VertexId> map(h2.vertex_count());
  VertexId next = n1;
  for (VertexId v = 0; v < h2.vertex_count(); ++v) {
    if (v == v2) {
      map[v] = v1;
    } else if (v == u2) {
      map[v] = u1;
    } else {
      map[v] = next++;
    }
  }
  std::vector<Edge> edges(h1.edges().begin(), h1.edges().end());
  for (const auto& e : h2.edges()) edges.push_back({map[e.a], map[e.b]});
  return MultiGraph(next, std::move(edges));
}

MultiGraph glue_with_edge(const MultiGraph& h1, VertexId v1, VertexId u1, const MultiGraph& h2,
                          VertexId v2, VertexId u2) {
  check_vertex(h1, u1, "h1");
  check_vertex(h2, u2, "h2");
  if (u1 == v1 || u2 == v2) throw UnknownVertex("u1, u2 must differ from the shared vertex");
  const MultiGraph joined = one_point_join(h1, v1, h2, v2);
  const auto offset = static_cast<VertexId>(h1.vertex_count());
  return joined.add_edge(u1, offset + (u2 < v2 ? u2 : u2 - 1));
}

bool verify_duality(const MultiGraph& g, const MultiGraph& d) {
  return tutte_delcon(g) == tutte_delcon(d).swap_xy();
}

}  // namespace tutte
