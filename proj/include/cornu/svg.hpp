#pragma once

// Poincare disc renderings. Geodesics are drawn as arcs of circles
// orthogonal to the unit circle, or as diameters.

#include <string>
#include <vector>

#include "cornu/pentagrid.hpp"

namespace cornu::svg {

struct RenderSpec {
  int width = 800;
  int height = 800;
  double stroke = 0.8;
  std::string white = "#f6f3ea";
  std::string black = "#8e9bb0";
  std::string edge = "#333333";
  std::string vertex = "#c0392b";
  std::string line = "#1f6fb2";
};

class Canvas {
 public:
  explicit Canvas(RenderSpec spec);

  void pentagon(const Pentagon& p, Color c);
  /// Geodesic segment between two points.
  void segment(const MPoint& p, const MPoint& q, const std::string& color, double width);
  /// Whole geodesic.
  void line(const MLine& l, const std::string& color, double width);
  void dot(const MPoint& p, double radius, const std::string& color);

  std::string str() const;

 private:
  struct Px {
    double x, y;
  };
  Px to_px(DiscPoint d) const;
  std::string arc_path(DiscPoint p, DiscPoint q) const;

  RenderSpec spec_;
  double cx_, cy_, r_;
  std::vector<std::string> items_;
};

std::string render_tiles(const std::vector<Tile>& tiles, const RenderSpec& spec);

}  // namespace cornu::svg
