#include "cornu/pentagrid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cornu/error.hpp"
#include "cornu/kernels.hpp"

namespace cornu {

const Constants& constants() {
  static const Constants c = [] {
    const double pi = std::numbers::pi;
    Constants k{};
    k.a = std::acosh((1.0 + std::sqrt(5.0)) / 2.0);
    k.in_radius = std::acosh(std::cos(pi / 4) / std::sin(pi / 5));
    k.circumradius = std::acosh(1.0 / std::tan(pi / 5));
    k.b = k.in_radius + k.circumradius;
    return k;
  }();
  return c;
}

const char* to_string(Color c) { return c == Color::W ? "W" : "B"; }

namespace {

struct Base {
  std::array<MPoint, 5> vertices;
  std::array<MLine, 5> sides;
  MPoint center;
};

const Base& base() {
  static const Base b = [] {
    const double sh = std::sinh(constants().a), ch = std::cosh(constants().a);
    Base out;
    out.vertices = {MPoint::from_raw({ch, sh, 0}), MPoint::from_raw({ch * ch, sh * ch, sh}),
                    MPoint::from_raw({ch * ch, sh, sh * ch}), MPoint::from_raw({ch, 0, sh}), kOrigin};
    for (int k = 1; k <= 5; ++k) out.sides[k - 1] = line_through(out.vertices[k - 1], out.vertices[k % 5]);
    // exact poles for the two axes
    out.sides[4] = MLine::from_pole({0, 0, 1});
    out.sides[3] = MLine::from_pole({0, 1, 0});
    out.center = MPoint::polar(constants().circumradius, std::numbers::pi / 4);
    return out;
  }();
  return b;
}

}  // namespace

Pentagon Pentagon::from_frame(const Isometry& g) {
  const Base& b = base();
  Pentagon p;
  p.frame = g;
  for (int i = 0; i < 5; ++i) {
    p.vertices[i] = g(b.vertices[i]);
    p.sides[i] = g(b.sides[i]);
  }
  return p;
}

MPoint Pentagon::center() const { return frame(base().center); }

bool Pentagon::contains(const MPoint& x, double tol) const {
  return std::all_of(sides.begin(), sides.end(), [&](const MLine& l) { return l.side(x) >= -tol; });
}

bool Pentagon::contains_strictly(const MPoint& x, double tol) const {
  return std::all_of(sides.begin(), sides.end(), [&](const MLine& l) { return l.side(x) > tol; });
}

double Pentagon::angle_error() const {
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const double c = std::clamp(mdot(sides[k].pole(), sides[(k + 1) % 5].pole()), -1.0, 1.0);
    worst = std::max(worst, std::abs(std::asin(c)));
  }
  return worst;
}

double Pentagon::side_error() const {
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    worst = std::max(worst, std::abs(dist(vertices[k], vertices[(k + 1) % 5]) - constants().a));
  }
  return worst;
}

Pentagon base_pentagon() { return Pentagon::from_frame(Isometry::identity()); }

MPoint Quarter::vertex() const { return frame(kOrigin); }

std::array<MPoint, 3> Quarter::hat() const {
  const Base& b = base();
  return {frame(b.vertices[0]), frame(b.vertices[4]), frame(b.vertices[3])};
}

std::array<MLine, 2> Quarter::border_lines() const {
  const Base& b = base();
  return {frame(b.sides[4]), frame(b.sides[3])};
}

std::array<Ray, 2> Quarter::borders() const {
  const auto lines = border_lines();
  const MPoint s = vertex();
  return {Ray{s, ideal_points_of(lines[0]).first}, Ray{s, ideal_points_of(lines[1]).second}};
}

bool Quarter::contains(const MPoint& x, double tol) const {
  const auto lines = border_lines();
  return lines[0].side(x) >= -tol && lines[1].side(x) >= -tol;
}

Quarter base_quarter() { return Quarter{Isometry::identity()}; }

const Moves& moves() {
  static const Moves m = [] {
    const Base& b = base();
    const double a = constants().a;
    Moves out;
    out.tau = translate_along(b.sides[4], a);
    out.tau0 = translate_along(b.sides[3].flipped(), a);
    out.t1 = translate_along(b.sides[0], a);
    out.rho = Isometry::from_triples({b.vertices[4], b.vertices[0], b.vertices[1]},
                                     {b.vertices[0], b.vertices[1], b.vertices[2]});
    return out;
  }();
  return m;
}

bool LowerStrip::contains(const MPoint& x, double tol) const {
  return h1.contains(x, tol) && h4.contains(x, tol) && not_h5.boundary.side(x) >= -tol;
}

LowerStrip lower_strip(const Pentagon& p) {
  return {p.half_plane(1), p.half_plane(4), p.half_plane(5).complement()};
}

std::vector<Pentagon> cornucopia(const Quarter& q, int n) {
  if (n < 0) throw Error(ErrorCode::DegenerateInput, "negative cornucopia length");
  std::vector<Pentagon> out;
  Isometry g = q.frame;
  for (int k = 0; k <= n; ++k) {
    out.push_back(Pentagon::from_frame(g));
    g = g * moves().tau;
  }
  return out;
}

std::vector<Region> child_regions(const Region& r, int n) {
  if (n < 0) throw Error(ErrorCode::DegenerateInput, "negative region count");
  std::vector<Region> out;
  const Isometry& g = r.quarter.frame;
  TreePath p0 = r.path;
  p0.push_back(1);
  out.push_back(Region{Quarter{g * moves().tau0}, r.generation + 1, p0});
  Isometry pk = g;
  TreePath prefix = r.path;
  for (int k = 0; k < n; ++k) {
    TreePath p = prefix;
    p.push_back(k == 0 ? 2 : 1);
    out.push_back(Region{Quarter{pk * moves().t1}, r.generation + 1, p});
    pk = pk * moves().tau;
    prefix.push_back(0);
  }
  return out;
}

std::vector<Color> sons(Color c) {
  if (c == Color::W) return {Color::B, Color::W, Color::W};
  return {Color::B, Color::W};
}

namespace {

// frame move for son `i` of a node of color `c`
const Isometry& son_move(Color c, int i) {
  if (i == 0) return moves().tau;
  if (c == Color::W && i == 1) return moves().tau0;
  return moves().t1;
}

void check_step(Color c, int i) {
  const int arity = c == Color::W ? 3 : 2;
  if (i < 0 || i >= arity) {
    throw Error(ErrorCode::InvalidPath, "son index " + std::to_string(i) + " on a " + to_string(c) + " node");
  }
}

}  // namespace

Color color_of(const TreePath& path) {
  Color c = Color::W;
  for (int i : path) {
    check_step(c, i);
    c = sons(c)[i];
  }
  return c;
}

Isometry frame_of_path(const TreePath& path) {
  Color c = Color::W;
  Isometry g = Isometry::identity();
  for (int i : path) {
    check_step(c, i);
    g = g * son_move(c, i);
    c = sons(c)[i];
  }
  return g;
}

int generation_of(const TreePath& path) {
  return static_cast<int>(std::count_if(path.begin(), path.end(), [](int i) { return i != 0; }));
}

std::vector<Tile> decompose(const Quarter& q, int d) {
  if (d < 0) throw Error(ErrorCode::DegenerateInput, "negative depth");
  struct Node {
    Isometry frame;
    TreePath path;
    Color color;
    int generation;
  };
  std::vector<Node> level{{q.frame, {}, Color::W, 0}};
  std::vector<Tile> out;
  for (int depth = 0; depth <= d; ++depth) {
    std::vector<Node> next;
    for (const Node& n : level) {
      out.push_back(Tile{Pentagon::from_frame(n.frame), n.path, n.color, n.generation});
      if (depth == d) continue;
      const auto kids = sons(n.color);
      for (int i = 0; i < static_cast<int>(kids.size()); ++i) {
        TreePath p = n.path;
        p.push_back(i);
        next.push_back({n.frame * son_move(n.color, i), std::move(p), kids[i], n.generation + (i == 0 ? 0 : 1)});
      }
    }
    level = std::move(next);
  }
  return out;
}

FibTree fib_tree(int d) {
  if (d < 0) throw Error(ErrorCode::DegenerateInput, "negative depth");
  FibTree t;
  t.levels.push_back({Color::W});
  for (int k = 1; k <= d; ++k) {
    std::vector<Color> next;
    for (Color c : t.levels.back()) {
      for (Color s : sons(c)) next.push_back(s);
    }
    t.levels.push_back(std::move(next));
  }
  return t;
}

double dist_to_side5(const Pentagon& head) {
  const MPoint& e = head.vertex('E');
  const MPoint& a = head.vertex('A');
  const MPoint f = project(kOrigin, head.side(5));
  if (std::abs(dist(e, f) + dist(f, a) - constants().a) < 1e-9) return dist(kOrigin, f);
  return std::min(dist(kOrigin, e), dist(kOrigin, a));
}

std::vector<MPoint> interior_samples(const Pentagon& p, int n, unsigned seed) {
  const Base& b = base();
  static const Isometry to_center = translate_along(line_through(kOrigin, base().center), constants().circumradius);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> r(0.0, constants().circumradius), th(-std::numbers::pi, std::numbers::pi);
  std::vector<MPoint> out;
  while (static_cast<int>(out.size()) < n) {
    const MPoint x = to_center(MPoint::polar(r(rng), th(rng)));
    bool inside = true;
    for (const MLine& l : b.sides) inside = inside && l.side(x) > 1e-6;
    if (inside) out.push_back(p.frame(x));
  }
  return out;
}

std::vector<MPoint> strip_samples(const Pentagon& p, int n, double depth, unsigned seed) {
  const double a = constants().a;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> s(1e-3, a - 1e-3), t(1e-3, depth);
  std::vector<MPoint> out;
  for (int i = 0; i < n; ++i) {
    const double si = s(rng), ti = t(rng);
    out.push_back(p.frame(MPoint::from_raw(
        {std::cosh(ti) * std::cosh(si), std::cosh(ti) * std::sinh(si), -std::sinh(ti)})));
  }
  return out;
}

namespace {

std::array<Vec3, 3> strip_poles(const Pentagon& p) {
  const LowerStrip s = lower_strip(p);
  return {s.h1.boundary.pole(), s.h4.boundary.pole(), s.not_h5.boundary.pole()};
}

simd::PointBatch batch_of(const std::vector<MPoint>& pts) {
  simd::PointBatch b;
  for (const MPoint& x : pts) b.push(x.vec());
  return b;
}

std::string path_string(const TreePath& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

}  // namespace

StripReport verify_strip_lemmas(int d, unsigned seed) {
  if (d < 1) throw Error(ErrorCode::DegenerateInput, "strip check needs d >= 1");
  StripReport rep;
  const Moves& m = moves();
  const auto tiles = decompose(base_quarter(), d - 1);
  constexpr int kSamples = 200;
  constexpr double kDepth = 3.0;
  for (const Tile& t : tiles) {
    const Pentagon& p = t.pentagon;
    ++rep.pentagons;
    const auto samples = strip_samples(p, kSamples, kDepth, seed + rep.pentagons);
    const simd::PointBatch batch = batch_of(samples);
    rep.samples += kSamples;
    // tolerance scaled to the coordinates in play
    double scale = 1.0;
    for (const MPoint& x : samples) scale = std::max(scale, x[0]);
    const double tol = 1e-12 * scale * std::cosh(dist(kOrigin, p.center()));

    const auto r2 = strip_poles(Pentagon::from_frame(p.frame * m.t1));
    const auto r3 = strip_poles(Pentagon::from_frame(p.frame * m.tau0));
    if (simd::min_side(batch, r2) < -tol || simd::min_side(batch, r3) < -tol) {
      rep.visilow = false;
      rep.failures.push_back("visilow at " + path_string(t.path));
    }
    const Isometry q = p.frame * m.tau;
    if (simd::min_side(batch, strip_poles(Pentagon::from_frame(q * m.t1))) < -tol) {
      rep.visi_shift_inclusion = false;
      rep.failures.push_back("visi_shift inclusion at " + path_string(t.path));
    }
    std::vector<double> margin(samples.size());
    const auto s3 = strip_poles(Pentagon::from_frame(q * m.tau0));
    simd::min_side_batch(batch, s3, margin.data());
    const MLine l4 = p.side(4);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (margin[i] > tol && std::abs(l4.side(samples[i])) > tol) {
        rep.visi_shift_exclusion = false;
        rep.failures.push_back("visi_shift exclusion at " + path_string(t.path));
        break;
      }
    }

    if (t.path.empty() || t.color != Color::W) continue;
    if (p.side(5).side(kOrigin) > kEpsGeo) {
      rep.ovisible = false;
      rep.failures.push_back("O on the head side of side 5 at " + path_string(t.path));
    }
    if (!lower_strip(p).contains(kOrigin, kEpsGeo)) {
      rep.oposit = false;
      rep.failures.push_back("O outside the lower strip at " + path_string(t.path));
    }
  }
  return rep;
}

nlohmann::json to_json(const MPoint& p) { return nlohmann::json::array({p[0], p[1], p[2]}); }

nlohmann::json to_json(const Tile& t) {
  nlohmann::json v = nlohmann::json::array();
  for (const MPoint& x : t.pentagon.vertices) v.push_back(to_json(x));
  return {{"path", t.path}, {"color", to_string(t.color)}, {"vertices", v}};
}

nlohmann::json tiles_json(const std::vector<Tile>& tiles) {
  nlohmann::json out = nlohmann::json::array();
  for (const Tile& t : tiles) out.push_back(to_json(t));
  return out;
}

}  // namespace cornu
