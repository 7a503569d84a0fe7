#include "cornu/locator.hpp"

#include <optional>

#include "cornu/error.hpp"

namespace cornu {

namespace {

// The subtree of a W node covers the quarter of its frame. A B node lacks
// the R_0 corner of that quarter, which belongs to an earlier region. A
// preorder walk that skips subtrees missing M meets the tiles containing M in
// path order.
struct Search {
  const MPoint& m;
  const LocateOptions& opt;
  TreePath path;

  bool covers(const Isometry& h, Color c) const {
    if (!Quarter{h}.contains(m, opt.tol)) return false;
    if (c == Color::W) return true;
    const auto corner = Quarter{h * moves().tau0}.border_lines();
    return !(corner[0].side(m) > opt.tol && corner[1].side(m) > opt.tol);
  }

  std::optional<Tile> visit(const Isometry& g, Color c, int generation) {
    if (static_cast<int>(path.size()) > opt.max_depth) {
      throw Error(ErrorCode::BudgetExhausted, "locate exceeded the depth budget");
    }
    Pentagon p = Pentagon::from_frame(g);
    if (p.contains(m, opt.tol)) return Tile{std::move(p), path, c, generation};
    const auto kids = sons(c);
    for (int i = 0; i < static_cast<int>(kids.size()); ++i) {
      const Isometry h = g * (i == 0 ? moves().tau : (c == Color::W && i == 1 ? moves().tau0 : moves().t1));
      if (!covers(h, kids[i])) continue;
      path.push_back(i);
      auto found = visit(h, kids[i], generation + (i == 0 ? 0 : 1));
      path.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }
};

}  // namespace

Tile locate(const MPoint& m, const Quarter& q, const LocateOptions& opt) {
  if (!q.contains(m, opt.tol)) throw Error(ErrorCode::PointOutsideQuarter, "point is not in the quarter");
  Search s{m, opt, {}};
  auto found = s.visit(q.frame, Color::W, 0);
  if (!found) throw Error(ErrorCode::BudgetExhausted, "no tile contains the point");
  return std::move(*found);
}

Tile tile_of_path(const TreePath& path, const Quarter& q) {
  return Tile{Pentagon::from_frame(q.frame * frame_of_path(path)), path, color_of(path), generation_of(path)};
}

}  // namespace cornu
