#pragma once

#include <vector>

#include "tutte/multigraph.hpp"

namespace tutte {

/// A hexagon of the hexagonal lattice in axial coordinates.
struct HexCell {
  int q = 0;
  int r = 0;

  friend auto operator<=>(const HexCell&, const HexCell&) = default;
};

/// The six axial neighbour offsets in cyclic order around a cell.
inline constexpr HexCell kHexDirections[6] = {{1, 0}, {1, -1}, {0, -1},
                                              {-1, 0}, {-1, 1}, {0, 1}};

bool hex_adjacent(HexCell a, HexCell b);

/// A benzenoid system given by its hexagons.
///
/// A lattice vertex is identified by the three cells around it and a
/// lattice edge by the two cells on either side, so shared corners and
/// sides between hexagons are merged exactly.
class HexSystem {
 public:
  /// Throws Error on duplicate cells.
  explicit HexSystem(std::vector<HexCell> cells);

  const std::vector<HexCell>& cells() const noexcept { return cells_; }

  /// Carbon skeleton. Vertices are numbered in order of discovery walking
  /// the cells in the given order and their corners counterclockwise.
  MultiGraph graph() const;

  /// Planar dual: vertex 0 is the outer face, vertex i + 1 is cells()[i].
  MultiGraph dual() const;

 private:
  std::vector<HexCell> cells_;
};

}  // namespace tutte
