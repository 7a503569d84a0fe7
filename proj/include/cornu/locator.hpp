#pragma once

#include "cornu/pentagrid.hpp"

namespace cornu {

struct LocateOptions {
  double tol = kEpsGeo;
  int max_depth = 4096;  // tree levels before BudgetExhausted
};

/// Tile of the quarter containing M. Points on shared edges go to the tile
/// with the lexicographically smallest path. Throws PointOutsideQuarter.
Tile locate(const MPoint& m, const Quarter& q, const LocateOptions& opt = {});

/// Tile at `path` built along one branch. Throws InvalidPath.
Tile tile_of_path(const TreePath& path, const Quarter& q);

}  // namespace cornu
