#pragma once

// Hyperbolic plane arithmetic in the hyperboloid model.
//
// Points live on the upper sheet <x,x> = -1, x0 > 0, of Minkowski space with
// the form <u,v> = -u0 v0 + u1 v1 + u2 v2. A geodesic is stored as a unit
// spacelike pole; its positive half-plane is {x : <x,pole> >= 0}. Ends are
// null vectors scaled to u0 = 1. Isometries are 3x3 matrices preserving the
// form and the upper sheet.

#include <array>
#include <cmath>
#include <numbers>
#include <utility>
#include <variant>

namespace cornu {

inline constexpr double kEpsNorm = 1e-12;
inline constexpr double kEpsGeo = 1e-9;

struct Vec3 {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x0 : (i == 1 ? x1 : x2); }
  constexpr double& operator[](int i) { return i == 0 ? x0 : (i == 1 ? x1 : x2); }

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x0, s * a.x1, s * a.x2}; }
  friend constexpr Vec3 operator-(Vec3 a) { return {-a.x0, -a.x1, -a.x2}; }
  friend constexpr bool operator==(Vec3, Vec3) = default;
};

/// Minkowski bilinear form -u0 v0 + u1 v1 + u2 v2.
constexpr double mdot(Vec3 u, Vec3 v) { return -u.x0 * v.x0 + u.x1 * v.x1 + u.x2 * v.x2; }

/// Vector orthogonal (for mdot) to both arguments: eta applied to the Euclidean cross product.
constexpr Vec3 mcross(Vec3 u, Vec3 v) {
  return {-(u.x1 * v.x2 - u.x2 * v.x1), u.x2 * v.x0 - u.x0 * v.x2, u.x0 * v.x1 - u.x1 * v.x0};
}

class MPoint {
 public:
  /// The hyperboloid origin (1,0,0).
  constexpr MPoint() : v_{1.0, 0.0, 0.0} {}

  /// Rescales a timelike vector onto the upper sheet. Throws DegenerateInput otherwise.
  static MPoint from_raw(Vec3 v);
  /// Point reached from the origin by walking distance `r` in the Euclidean direction `theta`.
  static MPoint polar(double r, double theta);

  constexpr const Vec3& vec() const { return v_; }
  constexpr double operator[](int i) const { return v_[i]; }

 private:
  explicit constexpr MPoint(Vec3 v) : v_(v) {}
  Vec3 v_;
};

inline const MPoint kOrigin{};

class MLine {
 public:
  /// The x-axis, pole (0,0,1).
  constexpr MLine() : pole_{0.0, 0.0, 1.0} {}
  /// Rescales a spacelike vector to unit norm. Throws DegenerateInput otherwise.
  static MLine from_pole(Vec3 pole);

  constexpr const Vec3& pole() const { return pole_; }
  /// Same geodesic, opposite positive side.
  MLine flipped() const { return MLine(-pole_); }
  /// Signed value sinh(distance) of x from the line; positive on the positive side.
  double side(const MPoint& x) const { return mdot(x.vec(), pole_); }

 private:
  explicit constexpr MLine(Vec3 pole) : pole_(pole) {}
  Vec3 pole_;
};

class IdealPoint {
 public:
  /// Rescales a future-pointing null vector so that u0 = 1.
  static IdealPoint from_raw(Vec3 u);
  /// End of the ray from the origin in Euclidean direction `theta`.
  static IdealPoint at_angle(double theta);

  constexpr const Vec3& vec() const { return u_; }
  double angle() const { return std::atan2(u_.x2, u_.x1); }

 private:
  explicit constexpr IdealPoint(Vec3 u) : u_(u) {}
  Vec3 u_;
};

struct HalfPlane {
  MLine boundary;
  bool closed = true;

  bool contains(const MPoint& x, double tol = 0.0) const {
    const double s = boundary.side(x);
    return closed ? s >= -tol : s > tol;
  }
  HalfPlane complement() const { return {boundary.flipped(), !closed}; }
};

struct Ray {
  MPoint origin;
  IdealPoint direction;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

class Isometry {
 public:
  Isometry() : m_{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}} {}
  static Isometry identity();
  /// Wraps a matrix after Gram-Schmidt renormalization against eta.
  static Isometry from_matrix(const Mat3& m);
  /// The unique isometry sending the three source points onto the three targets.
  /// The triples must be congruent and in general position.
  static Isometry from_triples(const std::array<MPoint, 3>& src, const std::array<MPoint, 3>& dst);
  /// Rotation about the origin by angle theta (counter-clockwise).
  static Isometry rotation(double theta);

  const Mat3& matrix() const { return m_; }

  Vec3 apply(Vec3 v) const;
  MPoint operator()(const MPoint& p) const { return MPoint::from_raw(apply(p.vec())); }
  MLine operator()(const MLine& l) const { return MLine::from_pole(apply(l.pole())); }
  IdealPoint operator()(const IdealPoint& u) const { return IdealPoint::from_raw(apply(u.vec())); }
  HalfPlane operator()(const HalfPlane& h) const { return {(*this)(h.boundary), h.closed}; }

  Isometry inverse() const;
  friend Isometry operator*(const Isometry& a, const Isometry& b);

  /// max |(m^T eta m - eta)_ij|
  double defect() const;
  double det() const;

 private:
  explicit Isometry(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

double dist(const MPoint& p, const MPoint& q);
/// Distance from a point to a geodesic.
double dist(const MPoint& p, const MLine& l);

/// Oriented geodesic through p then q; its positive half-plane lies to the left.
MLine line_through(const MPoint& p, const MPoint& q);
/// Geodesic from an ordinary point towards an end.
MLine line_through(const MPoint& p, const IdealPoint& u);
MLine line_through(const IdealPoint& u, const IdealPoint& v);

/// Orthogonal projection (foot of the perpendicular) of m on l.
MPoint project(const MPoint& m, const MLine& l);
/// Point at distance t from p along the geodesic towards q (or the end u).
MPoint along(const MPoint& p, const MPoint& q, double t);
MPoint along(const MPoint& p, const IdealPoint& u, double t);
/// Unit tangent of l at its point closest to the origin, pointing forward.
Vec3 forward_tangent(const MLine& l);

/// 2 arctan(e^-d). Throws NegativeDistance for d < 0.
double angle_of_parallelism(double d);
/// Inverse of angle_of_parallelism on (0, pi/2].
double distance_of_parallelism(double angle);

struct Intersecting {
  double angle;
};
struct Parallel {
  IdealPoint common_end;
};
struct Ultraparallel {
  double gap;
};
using LineRelation = std::variant<Intersecting, Parallel, Ultraparallel>;

/// Throws SameLine when the two lines coincide as sets.
LineRelation line_relation(const MLine& l, const MLine& m);
bool same_line(const MLine& l, const MLine& m, double tol = kEpsGeo);
bool is_ultraparallel(const MLine& l, const MLine& m);

/// Throws NotUltraparallel unless the lines have a common perpendicular.
MLine common_perpendicular(const MLine& l, const MLine& m);

Isometry reflect_in(const MLine& l);
/// Translation of amplitude t along l, towards its forward end when t > 0.
Isometry translate_along(const MLine& l, double t);

/// (forward end, backward end) of l.
std::pair<IdealPoint, IdealPoint> ideal_points_of(const MLine& l);

bool halfplane_touches(const HalfPlane& h, const IdealPoint& alpha, double tol = kEpsGeo);

struct DiscPoint {
  double x = 0.0;
  double y = 0.0;
};
DiscPoint to_disc(const MPoint& p);
DiscPoint to_disc(const IdealPoint& u);
MPoint from_disc(DiscPoint d);

}  // namespace cornu
