#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cornu/ends.hpp"
#include "cornu/error.hpp"

using namespace cornu;

namespace {

const double kPi = std::numbers::pi;

End end_at(double theta) { return End{IdealPoint::at_angle(theta)}; }

// Line perpendicular to the ray from O in direction theta, at distance d.
MLine perpendicular_at(double theta, double d) {
  return MLine::from_pole({std::sinh(d), std::cos(theta) * std::cosh(d), std::sin(theta) * std::cosh(d)});
}

bool in_half_plane(const HalfPlane& h, const MPoint& x) { return h.boundary.side(x) > -1e-9; }

QuarterSeq constant_steps(const Isometry& g) {
  return QuarterSeq(base_quarter(), [g](std::size_t) { return g; });
}

}  // namespace

TEST_CASE("neighbourhood of order 2") {
  const End alpha = end_at(0.7);
  CHECK(neighborhood_distance(2) == doctest::Approx(std::log(1.0 + std::sqrt(2.0))).epsilon(1e-12));
  const HalfPlane h = neighborhood(alpha, 2);
  CHECK(halfplane_touches(h, alpha.ideal));
  CHECK_FALSE(h.contains(kOrigin));
  CHECK(dist(kOrigin, h.boundary) == doctest::Approx(neighborhood_distance(2)).epsilon(1e-12));
  for (int n = 1; n <= 30; ++n) {
    CHECK(angle_of_parallelism(neighborhood_distance(n)) * n <= kPi + 1e-9);
  }
  CHECK_THROWS_AS(neighborhood(alpha, 0), Error);
}

TEST_CASE("neighbourhoods are strictly nested") {
  const End alpha = end_at(-2.1);
  for (int n = 1; n < 40; ++n) {
    const HalfPlane outer = neighborhood(alpha, n);
    const HalfPlane inner = neighborhood(alpha, n + 1);
    CHECK(half_plane_within(inner, outer));
    CHECK_FALSE(half_plane_within(outer, inner));
    CHECK_FALSE(same_line(inner.boundary, outer.boundary));
  }
}

TEST_CASE("some neighbourhood excludes any other end") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int i = 0; i < 200; ++i) {
    const End alpha = end_at(angle(rng));
    const End beta = end_at(angle(rng));
    const int n = separating_order(alpha, beta);
    CHECK_FALSE(halfplane_touches(neighborhood(alpha, n), beta.ideal));
    CHECK(halfplane_touches(neighborhood(alpha, n), alpha.ideal));
  }
  CHECK_THROWS_AS(separating_order(end_at(1.0), end_at(1.0)), Error);
}

TEST_CASE("parallel rays from O see a far line under 2 Pi(d)") {
  double prev = kPi;
  for (int i = 1; i <= 20; ++i) {
    const double d = 0.25 * i;
    const auto [e1, e2] = ideal_points_of(perpendicular_at(0.3, d));
    const double seen = std::abs(std::remainder(e1.angle() - e2.angle(), 2.0 * kPi));
    CHECK(seen == doctest::Approx(2.0 * angle_of_parallelism(d)).epsilon(1e-9));
    CHECK(seen < prev);
    prev = seen;
    CHECK(std::abs(std::cosh(d) * std::sin(angle_of_parallelism(d)) - 1.0) < 1e-12);
  }
}

TEST_CASE("pentagrid line beyond a line across the side-5 border") {
  const End alpha = end_at(0.0);
  const MLine l = perpendicular_at(0.0, 3.0);
  const MLine lambda = pentagrid_line_beyond(l, alpha, 6);
  CHECK(std::abs(mdot(lambda.pole(), {0, 0, 1})) < 1e-9);
  const double d = dist(kOrigin, lambda);
  CHECK(d > 3.0);
  const double k = d / constants().a;
  CHECK(std::abs(k - std::round(k)) < 1e-9);
  CHECK(std::holds_alternative<Ultraparallel>(line_relation(lambda, l)));
  CHECK(halfplane_touches({lambda, false}, alpha.ideal));
}

TEST_CASE("pentagrid line beyond: 50 seeded pairs") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dir(0.15, kPi / 2 - 0.15);
  std::uniform_real_distribution<double> off(-0.4, 0.4);
  std::uniform_real_distribution<double> depth(0.3, 2.5);
  for (int i = 0; i < 50; ++i) {
    const double theta = dir(rng);
    const MLine l = perpendicular_at(theta + off(rng), depth(rng));
    const End alpha = end_at(theta);
    const MLine lambda = pentagrid_line_beyond(l, alpha, 6);
    CHECK(std::holds_alternative<Ultraparallel>(line_relation(lambda, l)));
    CHECK(halfplane_touches({lambda, false}, alpha.ideal));
    const auto [e1, e2] = ideal_points_of(lambda);
    const double s = mdot(alpha.ideal.vec(), l.pole()) > 0 ? 1.0 : -1.0;
    CHECK(s * mdot(e1.vec(), l.pole()) > 0);
    CHECK(s * mdot(e2.vec(), l.pole()) > 0);
    CHECK(lambda.side(project(kOrigin, l)) < 0);
  }
}

TEST_CASE("pentagrid line beyond: errors") {
  CHECK_THROWS_AS(pentagrid_line_beyond(MLine{}, end_at(0.0), 3), Error);
  try {
    pentagrid_line_beyond(perpendicular_at(0.8, 12.0), end_at(0.8), 2);
    FAIL("expected BudgetExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExhausted);
  }
}

TEST_CASE("direct sequence along the side-5 line") {
  const QuarterSeq seq = constant_steps(moves().tau.inverse());
  const std::size_t K = 20;
  const NeighborhoodChain c = track_limit(seq, K);
  REQUIRE(c.links.size() >= K - 2);
  CHECK(c.restarts == 0);
  CHECK(c.nested());
  for (const ChainLink& link : c.links) {
    CHECK(std::abs(mdot(link.half_plane.boundary.pole(), {0, 0, 1})) < 1e-9);
    for (std::size_t n = link.from_index; n < K; ++n) CHECK(in_half_plane(link.half_plane, seq.at(n).vertex()));
  }
  CHECK(halfplane_touches(c.links.back().half_plane, end_at(kPi).ideal));
  CHECK_FALSE(halfplane_touches(c.links.back().half_plane, end_at(-kPi / 2).ideal));
}

TEST_CASE("separation of two limits") {
  const QuarterSeq west = constant_steps(moves().tau.inverse());
  const QuarterSeq south = constant_steps(moves().tau0.inverse());
  const NeighborhoodChain cw = track_limit(west, 12);
  const NeighborhoodChain cs = track_limit(south, 12);
  const auto sep = ends_separated(cw, cs);
  REQUIRE(sep.has_value());
  const auto back = ends_separated(cs, cw);
  REQUIRE(back.has_value());
  CHECK(half_planes_apart(sep->h1, sep->h2));
  CHECK(half_planes_apart(back->h2, back->h1));

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int sampled = 0;
  while (sampled < 100) {
    const DiscPoint z{u(rng), u(rng)};
    if (z.x * z.x + z.y * z.y > 0.998) continue;
    const MPoint x = from_disc(z);
    if (sep->h1.contains(x)) {
      CHECK_FALSE(sep->h2.contains(x));
      ++sampled;
    } else if (sep->h2.contains(x)) {
      CHECK_FALSE(sep->h1.contains(x));
      ++sampled;
    }
  }

  const NeighborhoodChain cw2 = track_limit(west, 25);
  CHECK_FALSE(ends_separated(cw, cw2).has_value());
}

TEST_CASE("track_limit rejects bad sequences") {
  try {
    track_limit(constant_steps(moves().tau * moves().tau), 5);
    FAIL("expected NotStepwise");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotStepwise);
  }
  const Isometry a = moves().tau.inverse(), b = moves().tau0.inverse();
  const QuarterSeq alt(base_quarter(), [a, b](std::size_t i) { return i % 2 ? b : a; });
  try {
    track_limit(alt, 6);
    FAIL("expected AlternationPresent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlternationPresent);
  }
}

TEST_CASE("chain json") {
  const NeighborhoodChain c = track_limit(constant_steps(moves().tau.inverse()), 4);
  const auto j = to_json(c);
  REQUIRE(j.size() == c.links.size());
  CHECK(j[0]["pole"].size() == 3);
  CHECK(j[0]["from_index"] == c.links[0].from_index);
}
