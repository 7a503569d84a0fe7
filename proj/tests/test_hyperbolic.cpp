#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cornu/error.hpp"
#include "cornu/hyperbolic.hpp"

using namespace cornu;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
const MLine kXAxis = MLine::from_pole({0, 0, 1});
const MLine kYAxis = MLine::from_pole({0, -1, 0});

MPoint random_point(std::mt19937_64& rng, double rmax = 3.0) {
  std::uniform_real_distribution<double> r(0.0, rmax), th(-std::numbers::pi, std::numbers::pi);
  return MPoint::polar(r(rng), th(rng));
}

MLine random_line(std::mt19937_64& rng) {
  for (;;) {
    const MPoint p = random_point(rng), q = random_point(rng);
    if (dist(p, q) > 1e-3) return line_through(p, q);
  }
}

Isometry random_isometry(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> t(-0.8, 0.8), th(-std::numbers::pi, std::numbers::pi);
  return Isometry::rotation(th(rng)) * translate_along(kXAxis, t(rng)) * Isometry::rotation(th(rng));
}

double max_diff(const Isometry& a, const Isometry& b) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a.matrix()[i][j] - b.matrix()[i][j]));
  return m;
}

bool projectively_equal(Vec3 a, Vec3 b, double tol) {
  auto close = [&](Vec3 u, Vec3 v) {
    return std::abs(u.x0 - v.x0) < tol && std::abs(u.x1 - v.x1) < tol && std::abs(u.x2 - v.x2) < tol;
  };
  return close(a, b) || close(a, -b);
}

}  // namespace

TEST_CASE("mdot") {
  CHECK(mdot({1, 0, 0}, {1, 0, 0}) == -1);
  CHECK(mdot({0, 1, 0}, {0, 1, 0}) == 1);
  CHECK(mdot({1, 1, 0}, {1, 1, 0}) == 0);
}

TEST_CASE("constructors normalize and reject degenerate input") {
  const MPoint p = MPoint::from_raw({3, 1, 2});
  CHECK(mdot(p.vec(), p.vec()) == doctest::Approx(-1).epsilon(1e-12));
  CHECK_THROWS_AS(MPoint::from_raw({0, 1, 0}), Error);
  CHECK_THROWS_AS(MLine::from_pole({1, 0, 0}), Error);
  const IdealPoint u = IdealPoint::from_raw({2, 2, 0});
  CHECK(u.vec().x0 == 1.0);
  CHECK(std::abs(mdot(u.vec(), u.vec())) < kEpsNorm);
}

TEST_CASE("dist") {
  CHECK(dist(kOrigin, kOrigin) == 0.0);
  const double a = std::acosh(kPhi);
  CHECK(dist(kOrigin, translate_along(kXAxis, a)(kOrigin)) == doctest::Approx(a).epsilon(1e-12));
  CHECK(a == doctest::Approx(1.0612750619).epsilon(1e-10));
  // right-triangle oracle for the side of the right-angled regular pentagon
  CHECK(std::cosh(a / 2) == doctest::Approx(std::cos(std::numbers::pi / 5) / std::sin(std::numbers::pi / 4)));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const MPoint p = random_point(rng), q = random_point(rng), r = random_point(rng);
    CHECK(dist(p, q) <= dist(p, r) + dist(r, q) + 1e-12);
    CHECK(dist(p, q) == doctest::Approx(dist(q, p)));
  }
}

TEST_CASE("line_through") {
  const MLine l = line_through(kOrigin, MPoint::polar(1.0, 0.0));
  CHECK(projectively_equal(l.pole(), {0, 0, 1}, 1e-12));
  CHECK(l.pole().x2 == doctest::Approx(1.0));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const MPoint p = random_point(rng), q = random_point(rng);
    const MLine m = line_through(p, q);
    CHECK(std::abs(m.side(p)) < 1e-9);
    CHECK(std::abs(m.side(q)) < 1e-9);
    const MLine back = line_through(q, p);
    CHECK(std::abs(back.pole().x0 + m.pole().x0) < 1e-9);
    CHECK(std::abs(back.pole().x1 + m.pole().x1) < 1e-9);
    CHECK(std::abs(back.pole().x2 + m.pole().x2) < 1e-9);
  }
  CHECK_THROWS_AS(line_through(kOrigin, kOrigin), Error);
}

TEST_CASE("project") {
  const MPoint on = MPoint::polar(0.7, 0.0);
  CHECK(dist(project(on, kXAxis), on) < 1e-12);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const MPoint m = random_point(rng);
    const MLine l = random_line(rng);
    const MPoint f = project(m, l);
    CHECK(std::abs(l.side(f)) < 1e-9);
    CHECK(dist(m, f) == doctest::Approx(std::asinh(std::abs(l.side(m)))).epsilon(1e-9));
    if (dist(m, f) > 1e-6) {
      const auto rel = line_relation(line_through(m, f), l);
      REQUIRE(std::holds_alternative<Intersecting>(rel));
      CHECK(std::get<Intersecting>(rel).angle == doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));
    }
  }
  // brute-force minimization along the line
  const MPoint m = MPoint::polar(1.3, 2.0);
  const MLine l = line_through(MPoint::polar(0.5, 0.3), MPoint::polar(0.9, -1.2));
  const MPoint f = project(m, l);
  const Vec3 e = forward_tangent(l);
  const MPoint c = project(kOrigin, l);
  for (int i = 0; i < 1000; ++i) {
    const double t = -6.0 + 12.0 * i / 999.0;
    const MPoint x = MPoint::from_raw(std::cosh(t) * c.vec() + std::sinh(t) * e);
    CHECK(dist(m, x) >= dist(m, f) - 1e-12);
  }
}

TEST_CASE("angle of parallelism") {
  CHECK(angle_of_parallelism(0) == doctest::Approx(std::numbers::pi / 2));
  CHECK(angle_of_parallelism(std::acosh(kPhi)) == doctest::Approx(std::asin(1 / kPhi)).epsilon(1e-12));
  CHECK(angle_of_parallelism(std::acosh(kPhi)) == doctest::Approx(0.6662).epsilon(1e-4));
  double prev = 10.0;
  for (double d : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    const double p = angle_of_parallelism(d);
    CHECK(p < prev);
    prev = p;
    CHECK(std::abs(std::sin(p) * std::cosh(d) - 1.0) < 1e-12);
    CHECK(distance_of_parallelism(p) == doctest::Approx(d).epsilon(1e-9));
  }
  CHECK_THROWS_AS(angle_of_parallelism(-0.1), Error);
}

TEST_CASE("line_relation and common_perpendicular") {
  const auto rel = line_relation(kXAxis, kYAxis);
  REQUIRE(std::holds_alternative<Intersecting>(rel));
  CHECK(std::get<Intersecting>(rel).angle == doctest::Approx(std::numbers::pi / 2));
  CHECK_THROWS_AS(line_relation(kXAxis, kXAxis.flipped()), Error);

  // lines sharing one end
  const MLine l1 = line_through(IdealPoint::at_angle(0), IdealPoint::at_angle(2));
  const MLine l2 = line_through(IdealPoint::at_angle(0), IdealPoint::at_angle(-2));
  const auto par = line_relation(l1, l2);
  REQUIRE(std::holds_alternative<Parallel>(par));
  CHECK(std::get<Parallel>(par).common_end.angle() == doctest::Approx(0.0).epsilon(1e-9));

  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 100) {
    const MLine l = random_line(rng), m = random_line(rng);
    if (!is_ultraparallel(l, m)) continue;
    ++checked;
    const MLine c = common_perpendicular(l, m);
    CHECK(std::abs(mdot(c.pole(), l.pole())) < 1e-9);
    CHECK(std::abs(mdot(c.pole(), m.pole())) < 1e-9);
    CHECK(projectively_equal(c.pole(), common_perpendicular(m, l).pole(), 1e-9));
    const Isometry g = random_isometry(rng);
    CHECK(std::holds_alternative<Ultraparallel>(line_relation(g(l), g(m))));
  }

  // ell vs its image under the half-turn about a point off ell
  const MPoint x = MPoint::polar(0.8, 1.0);
  const MLine l = line_through(MPoint::polar(0.4, -0.5), MPoint::polar(1.0, 2.8));
  const Vec3 p = l.pole();
  const Vec3 hp = -p - 2.0 * mdot(p, x.vec()) * x.vec();
  const auto up = line_relation(l, MLine::from_pole(hp));
  REQUIRE(std::holds_alternative<Ultraparallel>(up));
  CHECK(std::get<Ultraparallel>(up).gap == doctest::Approx(2 * dist(x, l)).epsilon(1e-9));
}

TEST_CASE("reflect_in") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 20; ++i) {
    const MLine l = random_line(rng);
    const Isometry r = reflect_in(l);
    CHECK(max_diff(r * r, Isometry::identity()) < 1e-9);
    const auto [u, v] = ideal_points_of(l);
    CHECK(projectively_equal(r(u).vec(), u.vec(), 1e-9));
    CHECK(projectively_equal(r(v).vec(), v.vec(), 1e-9));
    const MPoint x = random_point(rng);
    CHECK(l.side(r(x)) == doctest::Approx(-l.side(x)).epsilon(1e-9));
  }
}

TEST_CASE("translate_along") {
  CHECK(max_diff(translate_along(kXAxis, 0), Isometry::identity()) < 1e-15);
  const double a = std::acosh(kPhi);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const MLine l = random_line(rng);
    const Isometry t = translate_along(l, a);
    CHECK(max_diff(t * t, translate_along(l, 2 * a)) < 1e-9);
    const MPoint x = project(random_point(rng), l);
    CHECK(dist(x, t(x)) == doctest::Approx(a).epsilon(1e-9));
    CHECK(std::abs(l.side(t(x))) < 1e-9);
  }
  // positive amplitude moves towards the forward end
  const MPoint y = translate_along(kXAxis, 1.0)(kOrigin);
  CHECK(y.vec().x1 > 0);
}

TEST_CASE("ideal_points_of") {
  const auto [f, b] = ideal_points_of(kXAxis);
  CHECK(projectively_equal(f.vec(), {1, 1, 0}, 1e-12));
  CHECK(projectively_equal(b.vec(), {1, -1, 0}, 1e-12));
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const MLine l = random_line(rng);
    const auto [u, v] = ideal_points_of(l);
    CHECK(std::abs(mdot(u.vec(), l.pole())) < 1e-9);
    CHECK(std::abs(mdot(v.vec(), l.pole())) < 1e-9);
  }
}

TEST_CASE("halfplane_touches") {
  const HalfPlane h{kXAxis, true};
  CHECK(halfplane_touches(h, IdealPoint::at_angle(0)));
  CHECK(halfplane_touches(h, IdealPoint::at_angle(1.0)));
  CHECK_FALSE(halfplane_touches(h, IdealPoint::at_angle(-1.0)));
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> th(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const IdealPoint alpha = IdealPoint::at_angle(th(rng));
    const MLine l = random_line(rng);
    if (std::abs(mdot(alpha.vec(), l.pole())) < 1e-6) continue;
    const HalfPlane g{l, true};
    CHECK(halfplane_touches(g, alpha) != halfplane_touches(g.complement(), alpha));
  }
}

TEST_CASE("to_disc") {
  CHECK(to_disc(kOrigin).x == 0.0);
  CHECK(to_disc(kOrigin).y == 0.0);
  const auto d = to_disc(IdealPoint::from_raw({1, 1, 0}));
  CHECK(d.x == doctest::Approx(1.0));
  CHECK(d.y == doctest::Approx(0.0));
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    const MPoint p = random_point(rng, 8.0);
    const auto q = to_disc(p);
    CHECK(q.x * q.x + q.y * q.y < 1.0);
    if (dist(kOrigin, p) < 5) CHECK(dist(from_disc(q), p) < 1e-8);
  }
}

TEST_CASE("isometry invariants") {
  std::mt19937_64 rng(41);
  Isometry g = Isometry::identity();
  for (int i = 0; i < 64; ++i) {
    g = g * random_isometry(rng);
    if (i % 2 == 1) g = g * random_isometry(rng).inverse();
    CHECK(g.defect() < 1e-9);
    CHECK(g.matrix()[0][0] > 0);
  }
  for (int i = 0; i < 100; ++i) {
    const Isometry h = random_isometry(rng);
    const MPoint p = random_point(rng), q = random_point(rng);
    CHECK(std::abs(dist(h(p), h(q)) - dist(p, q)) < 1e-9);
    CHECK(max_diff(h * h.inverse(), Isometry::identity()) < 1e-9);
  }
  const std::array<MPoint, 3> src{kOrigin, MPoint::polar(1, 0), MPoint::polar(1, 1)};
  const Isometry h = random_isometry(rng);
  const std::array<MPoint, 3> dst{h(src[0]), h(src[1]), h(src[2])};
  CHECK(max_diff(Isometry::from_triples(src, dst), h) < 1e-9);
}
