#include "cornu/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cornu/error.hpp"

namespace cornu {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NegativeDistance: return "NegativeDistance";
    case ErrorCode::SameLine: return "SameLine";
    case ErrorCode::NotUltraparallel: return "NotUltraparallel";
    case ErrorCode::PointOutsideQuarter: return "PointOutsideQuarter";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::NotEmbedded: return "NotEmbedded";
    case ErrorCode::NotStepwise: return "NotStepwise";
    case ErrorCode::NoAlternation: return "NoAlternation";
    case ErrorCode::AlternationPresent: return "AlternationPresent";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::IndexOutOfRoster: return "IndexOutOfRoster";
    case ErrorCode::MalformedMachine: return "MalformedMachine";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

namespace {

double max_abs(Vec3 v) { return std::max({std::abs(v.x0), std::abs(v.x1), std::abs(v.x2)}); }

// Above this magnitude the form loses too many digits to be used for
// rescaling; the spatial part is kept and x0 recomputed instead.
constexpr double kRescaleLimit = 1e4;

}  // namespace

MPoint MPoint::from_raw(Vec3 v) {
  if (!std::isfinite(v.x0) || !std::isfinite(v.x1) || !std::isfinite(v.x2)) {
    throw Error(ErrorCode::DegenerateInput, "non-finite point");
  }
  if (v.x0 < 0) v = -v;
  const double m = max_abs(v);
  if (m < kRescaleLimit) {
    const double n = mdot(v, v);
    if (!(n < 0)) throw Error(ErrorCode::DegenerateInput, "vector is not timelike");
    v = (1.0 / std::sqrt(-n)) * v;
  }
  v.x0 = std::sqrt(1.0 + v.x1 * v.x1 + v.x2 * v.x2);
  return MPoint(v);
}

MPoint MPoint::polar(double r, double theta) {
  return MPoint(Vec3{std::cosh(r), std::sinh(r) * std::cos(theta), std::sinh(r) * std::sin(theta)});
}

MLine MLine::from_pole(Vec3 p) {
  if (!std::isfinite(p.x0) || !std::isfinite(p.x1) || !std::isfinite(p.x2)) {
    throw Error(ErrorCode::DegenerateInput, "non-finite pole");
  }
  const double m = max_abs(p);
  if (m == 0.0) throw Error(ErrorCode::DegenerateInput, "zero pole");
  if (m < kRescaleLimit) {
    const double n = mdot(p, p);
    if (!(n > 0)) throw Error(ErrorCode::DegenerateInput, "pole is not spacelike");
    return MLine((1.0 / std::sqrt(n)) * p);
  }
  const double s = p.x1 * p.x1 + p.x2 * p.x2 - 1.0;
  p.x0 = std::copysign(std::sqrt(std::max(0.0, s)), p.x0);
  return MLine(p);
}

IdealPoint IdealPoint::from_raw(Vec3 u) {
  if (!(u.x0 > 0)) {
    if (u.x0 < 0) {
      u = -u;
    } else {
      throw Error(ErrorCode::DegenerateInput, "ideal point with u0 = 0");
    }
  }
  const double r = std::hypot(u.x1, u.x2);
  if (!(r > 0)) throw Error(ErrorCode::DegenerateInput, "ideal point with no direction");
  return IdealPoint(Vec3{1.0, u.x1 / r, u.x2 / r});
}

IdealPoint IdealPoint::at_angle(double theta) {
  return IdealPoint(Vec3{1.0, std::cos(theta), std::sin(theta)});
}

// ---------------------------------------------------------------------------
// Isometry

Isometry Isometry::identity() { return Isometry(Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}); }

Isometry Isometry::from_matrix(const Mat3& m) {
  Vec3 c[3];
  for (int j = 0; j < 3; ++j) c[j] = {m[0][j], m[1][j], m[2][j]};
  double big = 0.0;
  for (const auto& col : c) big = std::max(big, max_abs(col));
  if (big < kRescaleLimit) {
    // Gram-Schmidt against eta: c0 timelike, c1 and c2 spacelike.
    if (c[0].x0 < 0) {
      for (auto& col : c) col = -col;
    }
    c[0] = (1.0 / std::sqrt(-mdot(c[0], c[0]))) * c[0];
    c[1] = c[1] + mdot(c[1], c[0]) * c[0];
    c[1] = (1.0 / std::sqrt(mdot(c[1], c[1]))) * c[1];
    c[2] = c[2] + mdot(c[2], c[0]) * c[0] - mdot(c[2], c[1]) * c[1];
    c[2] = (1.0 / std::sqrt(mdot(c[2], c[2]))) * c[2];
  }
  Mat3 out{};
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) out[i][j] = c[j][i];
  }
  return Isometry(out);
}

namespace {

Mat3 inverse3(const Mat3& a) {
  const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                     a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (std::abs(det) < 1e-300) throw Error(ErrorCode::DegenerateInput, "singular point triple");
  Mat3 r{};
  r[0][0] = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / det;
  r[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / det;
  r[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / det;
  r[1][0] = (a[1][2] * a[2][0] - a[1][0] * a[2][2]) / det;
  r[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / det;
  r[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / det;
  r[2][0] = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) / det;
  r[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / det;
  r[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / det;
  return r;
}

Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    }
  }
  return r;
}

}  // namespace

Isometry Isometry::from_triples(const std::array<MPoint, 3>& src, const std::array<MPoint, 3>& dst) {
  Mat3 s{}, d{};
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      s[i][j] = src[j][i];
      d[i][j] = dst[j][i];
    }
  }
  return from_matrix(mul(d, inverse3(s)));
}

Isometry Isometry::rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Isometry(Mat3{{{1, 0, 0}, {0, c, -s}, {0, s, c}}});
}

Vec3 Isometry::apply(Vec3 v) const {
  return {m_[0][0] * v.x0 + m_[0][1] * v.x1 + m_[0][2] * v.x2,
          m_[1][0] * v.x0 + m_[1][1] * v.x1 + m_[1][2] * v.x2,
          m_[2][0] * v.x0 + m_[2][1] * v.x1 + m_[2][2] * v.x2};
}

Isometry Isometry::inverse() const {
  // eta m^T eta
  Mat3 r{};
  constexpr double eta[3] = {-1, 1, 1};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = eta[i] * m_[j][i] * eta[j];
  }
  return Isometry(r);
}

Isometry operator*(const Isometry& a, const Isometry& b) { return Isometry::from_matrix(mul(a.m_, b.m_)); }

double Isometry::defect() const {
  constexpr double eta[3] = {-1, 1, 1};
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m_[k][i] * eta[k] * m_[k][j];
      worst = std::max(worst, std::abs(s - (i == j ? eta[i] : 0.0)));
    }
  }
  return worst;
}

double Isometry::det() const {
  const auto& a = m_;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

// ---------------------------------------------------------------------------
// Metric operations

double dist(const MPoint& p, const MPoint& q) {
  // <p-q,p-q> = 4 sinh^2(d/2); accurate for nearby points where acosh is not.
  const Vec3 d = p.vec() - q.vec();
  const double n = mdot(d, d);
  if (n <= 0.0) return 0.0;
  return 2.0 * std::asinh(0.5 * std::sqrt(n));
}

double dist(const MPoint& p, const MLine& l) { return std::asinh(std::abs(l.side(p))); }

MLine line_through(const MPoint& p, const MPoint& q) {
  if (dist(p, q) < kEpsNorm) throw Error(ErrorCode::DegenerateInput, "line through coincident points");
  return MLine::from_pole(mcross(p.vec(), q.vec()));
}

MLine line_through(const MPoint& p, const IdealPoint& u) { return MLine::from_pole(mcross(p.vec(), u.vec())); }

MLine line_through(const IdealPoint& u, const IdealPoint& v) {
  const Vec3 c = mcross(u.vec(), v.vec());
  if (max_abs(c) < kEpsNorm) throw Error(ErrorCode::DegenerateInput, "line through a single end");
  return MLine::from_pole(c);
}

MPoint project(const MPoint& m, const MLine& l) {
  const double s = l.side(m);
  return MPoint::from_raw((1.0 / std::sqrt(1.0 + s * s)) * (m.vec() - s * l.pole()));
}

namespace {

MPoint walk(const MPoint& p, Vec3 w, double t) {
  w = (1.0 / std::sqrt(mdot(w, w))) * w;
  return MPoint::from_raw(std::cosh(t) * p.vec() + std::sinh(t) * w);
}

}  // namespace

MPoint along(const MPoint& p, const MPoint& q, double t) {
  return walk(p, q.vec() + mdot(p.vec(), q.vec()) * p.vec(), t);
}

MPoint along(const MPoint& p, const IdealPoint& u, double t) {
  return walk(p, u.vec() + mdot(p.vec(), u.vec()) * p.vec(), t);
}

Vec3 forward_tangent(const MLine& l) {
  const MPoint c = project(kOrigin, l);
  Vec3 e = mcross(l.pole(), c.vec());
  return (1.0 / std::sqrt(mdot(e, e))) * e;
}

double angle_of_parallelism(double d) {
  if (d < 0) throw Error(ErrorCode::NegativeDistance, "angle of parallelism of a negative length");
  return 2.0 * std::atan(std::exp(-d));
}

double distance_of_parallelism(double angle) { return -std::log(std::tan(0.5 * angle)); }

bool same_line(const MLine& l, const MLine& m, double tol) {
  const Vec3 a = l.pole(), b = m.pole();
  const double scale = std::max(1.0, std::max(max_abs(a), max_abs(b)));
  return max_abs(a - b) < tol * scale || max_abs(a + b) < tol * scale;
}

LineRelation line_relation(const MLine& l, const MLine& m) {
  if (same_line(l, m)) throw Error(ErrorCode::SameLine, "relation of a line with itself");
  const double v = std::abs(mdot(l.pole(), m.pole()));
  if (std::abs(v - 1.0) < kEpsGeo) {
    return Parallel{IdealPoint::from_raw(mcross(l.pole(), m.pole()))};
  }
  if (v < 1.0) return Intersecting{std::acos(v)};
  return Ultraparallel{std::acosh(v)};
}

bool is_ultraparallel(const MLine& l, const MLine& m) {
  return std::abs(mdot(l.pole(), m.pole())) > 1.0 + kEpsGeo;
}

MLine common_perpendicular(const MLine& l, const MLine& m) {
  if (same_line(l, m) || !is_ultraparallel(l, m)) {
    throw Error(ErrorCode::NotUltraparallel, "lines have no common perpendicular");
  }
  return MLine::from_pole(mcross(l.pole(), m.pole()));
}

Isometry reflect_in(const MLine& l) {
  const Vec3 p = l.pole();
  const Vec3 ep{-p.x0, p.x1, p.x2};
  Mat3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = (i == j ? 1.0 : 0.0) - 2.0 * p[i] * ep[j];
  }
  return Isometry::from_matrix(r);
}

Isometry translate_along(const MLine& l, double t) {
  const Vec3 c = project(kOrigin, l).vec();
  Vec3 e = mcross(l.pole(), c);
  e = (1.0 / std::sqrt(mdot(e, e))) * e;
  const double ch = std::cosh(t) - 1.0, sh = std::sinh(t);
  Mat3 r{};
  for (int j = 0; j < 3; ++j) {
    Vec3 x{};
    x[j] = 1.0;
    const double alpha = -mdot(x, c);
    const double beta = mdot(x, e);
    const Vec3 y = x + alpha * (ch * c + sh * e) + beta * (sh * c + ch * e);
    for (int i = 0; i < 3; ++i) r[i][j] = y[i];
  }
  return Isometry::from_matrix(r);
}

std::pair<IdealPoint, IdealPoint> ideal_points_of(const MLine& l) {
  // Angular form: c + e cancels in u0 once the line is far from the origin.
  const Vec3& p = l.pole();
  const double psi = std::atan2(p.x2, p.x1);
  const double h = std::atan2(1.0, p.x0);
  return {IdealPoint::at_angle(psi - h), IdealPoint::at_angle(psi + h)};
}

bool halfplane_touches(const HalfPlane& h, const IdealPoint& alpha, double tol) {
  // <alpha, pole> = r (cos D - cos h), written as a product to keep its
  // relative accuracy for lines far from the origin.
  const Vec3& p = h.boundary.pole();
  const double r = std::hypot(p.x1, p.x2);
  const double half = std::atan2(1.0, p.x0);
  const double d = std::remainder(alpha.angle() - std::atan2(p.x2, p.x1), 2.0 * std::numbers::pi);
  const double s = -2.0 * r * std::sin(0.5 * (d + half)) * std::sin(0.5 * (d - half));
  return h.closed ? s >= -tol : s > tol;
}

DiscPoint to_disc(const MPoint& p) {
  const Vec3& v = p.vec();
  return {v.x1 / (1.0 + v.x0), v.x2 / (1.0 + v.x0)};
}

DiscPoint to_disc(const IdealPoint& u) { return {u.vec().x1, u.vec().x2}; }

MPoint from_disc(DiscPoint d) {
  const double r2 = d.x * d.x + d.y * d.y;
  if (!(r2 < 1.0)) throw Error(ErrorCode::DegenerateInput, "disc point outside the open unit disc");
  const double k = 1.0 / (1.0 - r2);
  return MPoint::from_raw({(1.0 + r2) * k, 2.0 * d.x * k, 2.0 * d.y * k});
}

}  // namespace cornu
