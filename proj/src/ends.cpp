#include "cornu/ends.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cornu/error.hpp"
#include "cornu/locator.hpp"

namespace cornu {

namespace {

// Point of h at distance 1 from the foot of O on its boundary.
MPoint witness(const HalfPlane& h) {
  const MPoint f = project(kOrigin, h.boundary);
  const Vec3& p = h.boundary.pole();
  const double c = std::cosh(1.0), s = std::sinh(1.0);
  return MPoint::from_raw(c * f.vec() + s * p);
}

bool inside_h1(const MLine& cand, const Vec3& h1_pole, double tol) {
  const auto [e1, e2] = ideal_points_of(cand);
  return mdot(e1.vec(), h1_pole) > tol && mdot(e2.vec(), h1_pole) > tol;
}

// Orients cand away from l and checks the remaining conditions.
std::optional<MLine> qualify(const MLine& cand, const MLine& l, const Vec3& h1_pole, const MPoint& foot,
                             const End& alpha, double tol) {
  if (!inside_h1(cand, h1_pole, tol)) return std::nullopt;
  const MLine oriented = cand.side(foot) < 0 ? cand : cand.flipped();
  if (mdot(alpha.ideal.vec(), oriented.pole()) <= tol) return std::nullopt;
  if (!is_ultraparallel(oriented, l)) return std::nullopt;
  return oriented;
}

}  // namespace

double neighborhood_distance(int n) {
  if (n < 1) throw Error(ErrorCode::DegenerateInput, "neighbourhood order must be positive");
  return distance_of_parallelism(std::numbers::pi / (2.0 * n));
}

HalfPlane neighborhood(const End& alpha, int n) {
  const double d = neighborhood_distance(n);
  const Vec3& u = alpha.ideal.vec();
  const Vec3 pole{std::sinh(d), u.x1 * std::cosh(d), u.x2 * std::cosh(d)};
  return {MLine::from_pole(pole), false};
}

int separating_order(const End& alpha, const End& beta) {
  const double theta = std::abs(std::remainder(beta.ideal.angle() - alpha.ideal.angle(), 2.0 * std::numbers::pi));
  if (theta < kEpsGeo) throw Error(ErrorCode::DegenerateInput, "the two ends coincide");
  return static_cast<int>(std::floor(std::numbers::pi / theta)) + 1;
}

bool half_plane_within(const HalfPlane& inner, const HalfPlane& outer, double tol) {
  const Vec3& pi = inner.boundary.pole();
  const Vec3& po = outer.boundary.pole();
  if (same_line(inner.boundary, outer.boundary, tol)) return mdot(pi, po) > 0;
  const auto [a1, a2] = ideal_points_of(inner.boundary);
  if (mdot(a1.vec(), po) < -tol || mdot(a2.vec(), po) < -tol) return false;
  const auto [b1, b2] = ideal_points_of(outer.boundary);
  if (mdot(b1.vec(), pi) > tol || mdot(b2.vec(), pi) > tol) return false;
  return outer.boundary.side(witness(inner)) >= -tol;
}

bool half_planes_apart(const HalfPlane& h1, const HalfPlane& h2, double tol) {
  const Vec3& p1 = h1.boundary.pole();
  const Vec3& p2 = h2.boundary.pole();
  if (std::abs(mdot(p1, p2)) <= 1.0 + tol) return false;
  const auto [a1, a2] = ideal_points_of(h1.boundary);
  const auto [b1, b2] = ideal_points_of(h2.boundary);
  return mdot(a1.vec(), p2) < -tol && mdot(a2.vec(), p2) < -tol && mdot(b1.vec(), p1) < -tol &&
         mdot(b2.vec(), p1) < -tol;
}

MLine pentagrid_line_beyond(const MLine& l, const End& alpha, int budget) {
  const double tol = kEpsGeo;
  const double s = mdot(alpha.ideal.vec(), l.pole());
  if (std::abs(s) <= tol) throw Error(ErrorCode::DegenerateInput, "the end lies on the line");
  const Vec3 h1_pole = s > 0 ? l.pole() : -l.pole();
  const MPoint foot = project(kOrigin, l);
  const Quarter q = base_quarter();
  const double a = constants().a;

  // Walk from the foot towards alpha and try the sides of each tile met.
  LocateOptions opt;
  opt.max_depth = budget;
  const double t_max = dist(kOrigin, foot) + (budget + 2) * a;
  for (double t = 0.0; t <= t_max; t += 0.5 * a) {
    const MPoint x = along(foot, alpha.ideal, t);
    Tile tile;
    try {
      tile = locate(x, q, opt);
    } catch (const Error&) {
      continue;
    }
    if (static_cast<int>(tile.path.size()) > budget) break;
    for (const MLine& side : tile.pentagon.sides) {
      if (auto r = qualify(side, l, h1_pole, foot, alpha, tol)) return *r;
    }
  }

  // Exhaustive scan, nearest qualifying line to the foot.
  std::optional<MLine> best;
  double best_d = 0.0;
  std::vector<MLine> seen;
  for (const Tile& tile : decompose(q, budget)) {
    for (const MLine& side : tile.pentagon.sides) {
      if (std::any_of(seen.begin(), seen.end(), [&](const MLine& m) { return same_line(m, side); })) continue;
      seen.push_back(side);
      if (auto r = qualify(side, l, h1_pole, foot, alpha, tol)) {
        const double d = dist(foot, *r);
        if (!best || d < best_d) {
          best = r;
          best_d = d;
        }
      }
    }
  }
  if (!best) throw Error(ErrorCode::BudgetExhausted, "no pentagrid line beyond the given line at this depth");
  return *best;
}

bool NeighborhoodChain::nested(double tol) const {
  for (std::size_t i = 1; i < links.size(); ++i) {
    if (!half_plane_within(links[i].half_plane, links[i - 1].half_plane, tol)) return false;
  }
  return true;
}

NeighborhoodChain track_limit(const QuarterSeq& seq, std::size_t horizon) {
  const Classification cls = classify(seq, horizon);
  if (!cls.stepwise_ok) throw Error(ErrorCode::NotStepwise, "sequence has a step that is not a one-step embedding");
  if (!cls.alternations.empty()) throw Error(ErrorCode::AlternationPresent, "remove alternations first");

  struct Link {
    std::size_t frame;
    HalfPlane local;  // in the frame of F_frame
    Isometry rel;     // frame_frame^-1 * frame_m for the last vertex m seen
  };
  const double tol = kEpsGeo;
  std::vector<Link> links;
  NeighborhoodChain out;

  auto truncate = [&](std::size_t keep, std::size_t at) {
    if (keep >= links.size()) return;
    links.resize(keep);
    if (!out.restart_at.empty() && out.restart_at.back() == at) return;
    ++out.restarts;
    out.restart_at.push_back(at);
  };

  for (std::size_t n = 0; n + 1 < horizon; ++n) {
    const std::size_t m = n + 1;
    const Isometry& step = seq.step(n);
    for (std::size_t k = 0; k < links.size(); ++k) {
      links[k].rel = links[k].rel * step;
      if (!links[k].local.contains(links[k].rel(kOrigin), tol)) {
        truncate(k, m);
        break;
      }
    }

    // Complements of the two border half-planes of F_n, in its own frame.
    const MPoint next = step(kOrigin);
    std::optional<HalfPlane> cand;
    double depth = tol;
    for (const Vec3& pole : {Vec3{0, 0, -1}, Vec3{0, -1, 0}}) {
      const HalfPlane h{MLine::from_pole(pole), false};
      const double v = h.boundary.side(next);
      if (v > depth) {
        cand = h;
        depth = v;
      }
    }
    if (!cand) continue;

    bool redundant = false;
    while (!links.empty()) {
      const Link& tail = links.back();
      const HalfPlane mapped = seq.relative(tail.frame, n)(*cand);
      if (half_plane_within(mapped, tail.local, tol)) break;
      if (half_plane_within(tail.local, mapped, tol)) {
        redundant = true;
        break;
      }
      truncate(links.size() - 1, m);
    }
    if (redundant) continue;
    links.push_back({n, *cand, step});
  }

  for (const Link& l : links) {
    out.links.push_back({seq.at(l.frame).frame(l.local), l.frame + 1});
  }
  return out;
}

std::optional<Separation> ends_separated(const NeighborhoodChain& c1, const NeighborhoodChain& c2) {
  const std::size_t n1 = c1.links.size(), n2 = c2.links.size();
  for (std::size_t total = 0; total + 1 < n1 + n2; ++total) {
    for (std::size_t i = 0; i < n1 && i <= total; ++i) {
      const std::size_t j = total - i;
      if (j >= n2) continue;
      const HalfPlane& h1 = c1.links[i].half_plane;
      const HalfPlane& h2 = c2.links[j].half_plane;
      if (half_planes_apart(h1, h2)) return Separation{h1, h2, i, j};
    }
  }
  return std::nullopt;
}

nlohmann::json to_json(const NeighborhoodChain& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const ChainLink& l : c.links) {
    const Vec3& p = l.half_plane.boundary.pole();
    out.push_back({{"pole", {p.x0, p.x1, p.x2}}, {"from_index", l.from_index}});
  }
  return out;
}

}  // namespace cornu
