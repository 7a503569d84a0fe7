#pragma once

// The {5,4} tiling restricted to a quarter: labelled pentagons, quarters,
// the cornucopia decomposition and its Fibonacci tree coordinates.
//
// Every labelled pentagon is the image of the base pentagon P0 under a frame
// isometry; labels travel with the frame. In P0 the vertices are
// A, B, C, D, E counter-clockwise with E at the origin, side 5 = EA on the
// x-axis and side 4 = DE on the y-axis. Side k joins the k-th and (k+1)-th
// vertices, counting A as the first.

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "cornu/hyperbolic.hpp"

namespace cornu {

struct Constants {
  double a;             // side length, arccosh(phi)
  double in_radius;     // center to side midpoint
  double circumradius;  // center to vertex
  double b;             // vertex to midpoint of the opposite side
};
const Constants& constants();

enum class Color { W, B };
const char* to_string(Color c);

using TreePath = std::vector<int>;

struct Pentagon {
  Isometry frame;                  // image of P0 under frame, labels included
  std::array<MPoint, 5> vertices;  // A, B, C, D, E
  std::array<MLine, 5> sides;      // sides[k-1] supports side k; pentagon on the positive side

  static Pentagon from_frame(const Isometry& g);

  const MPoint& vertex(char name) const { return vertices[name - 'A']; }
  const MLine& side(int k) const { return sides[k - 1]; }
  HalfPlane half_plane(int k) const { return {side(k), true}; }
  MPoint center() const;
  /// All five signs >= -tol.
  bool contains(const MPoint& x, double tol = kEpsGeo) const;
  /// All five signs > tol.
  bool contains_strictly(const MPoint& x, double tol = kEpsGeo) const;
  /// Worst deviation of an interior angle from pi/2.
  double angle_error() const;
  /// Worst deviation of a side length from a.
  double side_error() const;
};

Pentagon base_pentagon();

/// The quarter whose head is the pentagon `frame`(P0) and whose vertex is the
/// head's vertex E. Its borders are the rays E->A (side 5) and E->D (side 4).
struct Quarter {
  Isometry frame;

  Pentagon head() const { return Pentagon::from_frame(frame); }
  MPoint vertex() const;
  /// (A, S, B) = (head A, head E, head D).
  std::array<MPoint, 3> hat() const;
  std::array<Ray, 2> borders() const;
  /// Border lines oriented towards the interior: side 5 then side 4 of the head.
  std::array<MLine, 2> border_lines() const;
  bool contains(const MPoint& x, double tol = kEpsGeo) const;
};

Quarter base_quarter();

/// Frame moves relative to P0.
struct Moves {
  Isometry tau;   // along side 5 by a; P_k -> P_{k+1} in a cornucopia
  Isometry tau0;  // along side 4 by a; head of R_0
  Isometry t1;    // along side 1 by a; head of R_1
  Isometry rho;   // rotation of P0: E->A, A->B, ...
};
const Moves& moves();

struct LowerStrip {
  HalfPlane h1, h4, not_h5;
  bool contains(const MPoint& x, double tol = kEpsGeo) const;
};
LowerStrip lower_strip(const Pentagon& p);

struct Region {
  Quarter quarter;
  int generation = 0;
  TreePath path;
};

struct Tile {
  Pentagon pentagon;
  TreePath path;
  Color color = Color::W;
  int generation = 0;
};

/// P_0 .. P_n along the side-5 border of q.
std::vector<Pentagon> cornucopia(const Quarter& q, int n);
/// R_0 .. R_n of a region.
std::vector<Region> child_regions(const Region& r, int n);
/// All tiles at tree distance <= d from the root, level by level, paths ascending.
std::vector<Tile> decompose(const Quarter& q, int d);

/// Sons of a node under W -> BWW, B -> BW.
std::vector<Color> sons(Color c);
/// Color of the node at `path`; throws InvalidPath.
Color color_of(const TreePath& path);
/// Frame of the tile at `path` relative to the root frame; throws InvalidPath.
Isometry frame_of_path(const TreePath& path);
/// Number of W-son steps along the path.
int generation_of(const TreePath& path);

struct FibTree {
  std::vector<std::vector<Color>> levels;
};
FibTree fib_tree(int d);

struct StripReport {
  int pentagons = 0;
  int samples = 0;
  bool visilow = true;
  bool visi_shift_inclusion = true;
  bool visi_shift_exclusion = true;
  bool ovisible = true;
  bool oposit = true;
  std::vector<std::string> failures;

  bool ok() const { return visilow && visi_shift_inclusion && visi_shift_exclusion && ovisible && oposit; }
};
StripReport verify_strip_lemmas(int d, unsigned seed = 1);

/// Distance from O to the side 5 of the head, clamped to the edge E-A.
double dist_to_side5(const Pentagon& head);

/// Deterministic interior samples of a pentagon.
std::vector<MPoint> interior_samples(const Pentagon& p, int n, unsigned seed);
/// Samples of the lower strip, at most `depth` below side 5.
std::vector<MPoint> strip_samples(const Pentagon& p, int n, double depth, unsigned seed);

nlohmann::json to_json(const MPoint& p);
nlohmann::json to_json(const Tile& t);
nlohmann::json tiles_json(const std::vector<Tile>& tiles);

}  // namespace cornu
