#include "tutte/hex_system.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "tutte/error.hpp"

namespace tutte {

namespace {

HexCell step(HexCell c, int k) {
  const HexCell d = kHexDirections[((k % 6) + 6) % 6];
  return {c.q + d.q, c.r + d.r};
}

using Corner = std::array<HexCell, 3>;

Corner corner(HexCell c, int k) {
  Corner v{c, step(c, k), step(c, k + 1)};
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool hex_adjacent(HexCell a, HexCell b) {
  for (const auto& d : kHexDirections) {
    if (a.q + d.q == b.q && a.r + d.r == b.r) return true;
  }
  return false;
}

HexSystem::HexSystem(std::vector<HexCell> cells) : cells_(std::move(cells)) {
  std::set<HexCell> seen;
  for (const auto& c : cells_) {
    if (!seen.insert(c).second) throw Error("duplicate hexagon in benzenoid system");
  }
}

MultiGraph HexSystem::graph() const {
  std::map<Corner, VertexId> vertex_index;
  auto vertex = [&](const Corner& c) {
    auto [it, inserted] = vertex_index.try_emplace(c, static_cast<VertexId>(vertex_index.size()));
    return it->second;
  };
  std::set<std::pair<HexCell, HexCell>> seen_sides;
  std::vector<Edge> edges;
  for (const auto& c : cells_) {
    for (int k = 0; k < 6; ++k) {
      const VertexId a = vertex(corner(c, k - 1));
      const VertexId b = vertex(corner(c, k));
      const HexCell other = step(c, k);
      const auto side = std::minmax(c, other);
      if (seen_sides.insert(side).second) edges.push_back({a, b});
    }
  }
  return MultiGraph(vertex_index.size(), std::move(edges));
}

MultiGraph HexSystem::dual() const {
  std::map<HexCell, VertexId> face;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    face.emplace(cells_[i], static_cast<VertexId>(i + 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    for (int k = 0; k < 6; ++k) {
      auto it = face.find(step(cells_[i], k));
      const VertexId here = static_cast<VertexId>(i + 1);
      if (it == face.end()) {
        edges.push_back({0, here});
      } else if (it->second > here) {
        edges.push_back({here, it->second});
      }
    }
  }
  return MultiGraph(cells_.size() + 1, std::move(edges));
}

}  // namespace tutte
