#include "cornu/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace cornu::svg {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

double cross(DiscPoint a, DiscPoint b) { return a.x * b.y - a.y * b.x; }

}  // namespace

Canvas::Canvas(RenderSpec spec) : spec_(std::move(spec)) {
  cx_ = spec_.width / 2.0;
  cy_ = spec_.height / 2.0;
  r_ = std::min(spec_.width, spec_.height) / 2.0;
}

Canvas::Px Canvas::to_px(DiscPoint d) const { return {cx_ + r_ * d.x, cy_ - r_ * d.y}; }

std::string Canvas::arc_path(DiscPoint p, DiscPoint q) const {
  const Px b = to_px(q);
  const std::string end = fmt(b.x) + " " + fmt(b.y);
  const double det = cross(p, q);
  const Px a = to_px(p);
  const double px_len = std::hypot(b.x - a.x, b.y - a.y);
  if (std::abs(det) < 1e-12 || px_len < 1.0) return " L " + end;
  // Center c of the orthogonal circle: c.p = (|p|^2 + 1)/2, c.q = (|q|^2 + 1)/2.
  const double rp = 0.5 * (p.x * p.x + p.y * p.y + 1.0);
  const double rq = 0.5 * (q.x * q.x + q.y * q.y + 1.0);
  const DiscPoint c{(rp * q.y - rq * p.y) / det, (p.x * rq - q.x * rp) / det};
  const double radius = std::hypot(p.x - c.x, p.y - c.y);
  // Sweep 1 is clockwise as drawn: the centre lies to the right of p->q.
  const int sweep = cross({q.x - p.x, q.y - p.y}, {c.x - p.x, c.y - p.y}) < 0 ? 1 : 0;
  return " A " + fmt(r_ * radius) + " " + fmt(r_ * radius) + " 0 0 " + std::to_string(sweep) + " " + end;
}

void Canvas::pentagon(const Pentagon& p, Color c) {
  std::string d;
  for (int i = 0; i < 5; ++i) {
    const DiscPoint a = to_disc(p.vertices[i]);
    if (i == 0) {
      const Px s = to_px(a);
      d = "M " + fmt(s.x) + " " + fmt(s.y);
    }
    d += arc_path(a, to_disc(p.vertices[(i + 1) % 5]));
  }
  d += " Z";
  items_.push_back("<path d=\"" + d + "\" fill=\"" + (c == Color::W ? spec_.white : spec_.black) + "\" stroke=\"" +
                   spec_.edge + "\" stroke-width=\"" + fmt(spec_.stroke) + "\"/>");
}

void Canvas::segment(const MPoint& p, const MPoint& q, const std::string& color, double width) {
  const DiscPoint a = to_disc(p);
  const Px s = to_px(a);
  items_.push_back("<path d=\"M " + fmt(s.x) + " " + fmt(s.y) + arc_path(a, to_disc(q)) + "\" fill=\"none\" stroke=\"" +
                   color + "\" stroke-width=\"" + fmt(width) + "\"/>");
}

void Canvas::line(const MLine& l, const std::string& color, double width) {
  const auto [u, v] = ideal_points_of(l);
  const DiscPoint a = to_disc(u), b = to_disc(v);
  const Px s = to_px(a);
  items_.push_back("<path d=\"M " + fmt(s.x) + " " + fmt(s.y) + arc_path(a, b) + "\" fill=\"none\" stroke=\"" + color +
                   "\" stroke-width=\"" + fmt(width) + "\"/>");
}

void Canvas::dot(const MPoint& p, double radius, const std::string& color) {
  const Px s = to_px(to_disc(p));
  items_.push_back("<circle cx=\"" + fmt(s.x) + "\" cy=\"" + fmt(s.y) + "\" r=\"" + fmt(radius) + "\" fill=\"" + color +
                   "\"/>");
}

std::string Canvas::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec_.width) +
         "\" height=\"" + std::to_string(spec_.height) + "\" viewBox=\"0 0 " + std::to_string(spec_.width) + " " +
         std::to_string(spec_.height) + "\">\n";
  out += "<circle cx=\"" + fmt(cx_) + "\" cy=\"" + fmt(cy_) + "\" r=\"" + fmt(r_) +
         "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1.000\"/>\n";
  for (const std::string& item : items_) out += item + "\n";
  out += "</svg>\n";
  return out;
}

std::string render_tiles(const std::vector<Tile>& tiles, const RenderSpec& spec) {
  Canvas c(spec);
  for (const Tile& t : tiles) c.pentagon(t.pentagon, t.color);
  return c.str();
}

}  // namespace cornu::svg
