#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cornu/error.hpp"
#include "cornu/pentagrid.hpp"

using namespace cornu;

namespace {

bool near(const MPoint& p, const MPoint& q, double tol = 1e-9) { return dist(p, q) < tol; }

}  // namespace

TEST_CASE("constants") {
  const auto& c = constants();
  CHECK(std::abs(std::cosh(c.a) - (1 + std::sqrt(5.0)) / 2) < 1e-12);
  CHECK(c.a == doctest::Approx(1.0612751).epsilon(1e-7));
  CHECK(c.in_radius == doctest::Approx(0.626870).epsilon(1e-6));
  CHECK(c.circumradius == doctest::Approx(0.842481).epsilon(1e-6));
  CHECK(c.b == doctest::Approx(1.469351).epsilon(1e-6));
  CHECK(c.a < c.b);
  CHECK(c.b < 2.5 * c.a);
  const Pentagon p = base_pentagon();
  const MPoint mid = along(p.vertex('B'), p.vertex('C'), c.a / 2);
  CHECK(dist(p.vertex('E'), mid) == doctest::Approx(c.b).epsilon(1e-9));
  CHECK(dist(p.center(), p.vertex('A')) == doctest::Approx(c.circumradius).epsilon(1e-12));
  CHECK(dist(p.center(), p.side(3)) == doctest::Approx(c.in_radius).epsilon(1e-12));
}

TEST_CASE("base quarter") {
  const Quarter q = base_quarter();
  CHECK(near(q.vertex(), kOrigin, 1e-15));
  const Pentagon h = q.head();
  CHECK(h.angle_error() < 1e-12);
  CHECK(h.side_error() < 1e-12);
  const auto b = q.borders();
  CHECK(b[0].direction.vec().x1 == doctest::Approx(1.0));
  CHECK(b[0].direction.vec().x2 == doctest::Approx(0.0));
  CHECK(b[1].direction.vec().x2 == doctest::Approx(1.0));
  const auto lines = q.border_lines();
  CHECK(std::abs(mdot(lines[0].pole(), lines[1].pole())) < 1e-12);
  const auto hat = q.hat();
  CHECK(dist(hat[1], hat[0]) == doctest::Approx(constants().a));
  CHECK(dist(hat[1], hat[2]) == doctest::Approx(constants().a));
  for (const MPoint& x : interior_samples(h, 50, 3)) {
    CHECK(h.contains_strictly(x, 0));
    CHECK(q.contains(x));
  }
}

TEST_CASE("lower strip") {
  const Pentagon p = base_pentagon();
  const LowerStrip s = lower_strip(p);
  CHECK_FALSE(s.contains(p.center()));
  CHECK(s.contains(reflect_in(p.side(5))(p.center())));
  for (const MPoint& x : strip_samples(p, 100, 3.0, 5)) CHECK(s.contains(x));
}

TEST_CASE("cornucopia") {
  const Quarter q = base_quarter();
  CHECK(cornucopia(q, 0).size() == 1);
  const auto c = cornucopia(q, 5);
  REQUIRE(c.size() == 6);
  CHECK(near(c[1].vertex('E'), c[0].vertex('A')));
  CHECK(near(c[1].vertex('D'), c[0].vertex('B')));
  CHECK(same_line(c[1].side(4), c[0].side(1).flipped()));
  for (const Pentagon& p : c) {
    CHECK(same_line(p.side(5), q.border_lines()[0]));
    CHECK(p.angle_error() < 1e-9);
    CHECK(p.side_error() < 1e-9);
  }
  CHECK_THROWS_AS(cornucopia(q, -1), Error);
}

TEST_CASE("child regions") {
  const Region root{base_quarter(), 0, {}};
  const auto kids = child_regions(root, 3);
  REQUIRE(kids.size() == 4);
  const Pentagon p0 = base_pentagon();
  const auto corn = cornucopia(root.quarter, 3);
  CHECK(same_line(kids[0].quarter.head().side(5), p0.side(3)));
  CHECK(same_line(kids[0].quarter.head().side(4), p0.side(4)));
  CHECK(same_line(kids[0].quarter.head().side(1), p0.side(2)));
  for (int i = 0; i < 3; ++i) {
    const Pentagon h = kids[i + 1].quarter.head();
    CHECK(same_line(h.side(5), corn[i].side(2)));
    CHECK(same_line(h.side(4), corn[i].side(3)));
    CHECK(same_line(h.side(1), corn[i].side(1)));
  }
  for (const Region& r : kids) {
    CHECK(r.generation == 1);
    const auto l = r.quarter.border_lines();
    CHECK(std::abs(mdot(l[0].pole(), l[1].pole())) < 1e-9);
    CHECK(color_of(r.path) == Color::W);
    CHECK(frame_of_path(r.path).defect() < 1e-9);
    CHECK(near(frame_of_path(r.path)(kOrigin), r.quarter.vertex()));
  }
  CHECK(kids[0].path == TreePath{1});
  CHECK(kids[1].path == TreePath{2});
  CHECK(kids[2].path == TreePath{0, 1});
  CHECK(kids[3].path == TreePath{0, 0, 1});
}

TEST_CASE("fib tree") {
  const FibTree t = fib_tree(4);
  CHECK(t.levels[1] == std::vector<Color>{Color::B, Color::W, Color::W});
  const std::vector<std::size_t> counts{1, 3, 8, 21, 55};
  for (int k = 0; k <= 4; ++k) CHECK(t.levels[k].size() == counts[k]);
  CHECK(sons(Color::B) == std::vector<Color>{Color::B, Color::W});
  CHECK(color_of({2, 0}) == Color::B);
  CHECK_THROWS_AS(color_of({0, 0, 2}), Error);
  CHECK_THROWS_AS(color_of({0, 2}), Error);
  CHECK_THROWS_AS(frame_of_path({-1}), Error);
}

TEST_CASE("decompose") {
  CHECK(decompose(base_quarter(), 0).size() == 1);
  CHECK(decompose(base_quarter(), 0)[0].color == Color::W);
  const auto tiles = decompose(base_quarter(), 4);
  REQUIRE(tiles.size() == 88);
  const FibTree t = fib_tree(4);
  std::vector<int> per_level(5, 0);
  for (const Tile& tile : tiles) {
    const int lvl = static_cast<int>(tile.path.size());
    CHECK(t.levels[lvl][per_level[lvl]] == tile.color);
    ++per_level[lvl];
    CHECK(tile.color == color_of(tile.path));
    CHECK(tile.generation == generation_of(tile.path));
    CHECK(tile.pentagon.angle_error() < 1e-9);
    CHECK(tile.pentagon.side_error() < 1e-9);
    CHECK(base_quarter().contains(tile.pentagon.center()));
  }
  CHECK(per_level == std::vector<int>{1, 3, 8, 21, 55});

  // pairwise interior disjointness on samples
  std::vector<std::vector<MPoint>> samples;
  for (std::size_t i = 0; i < tiles.size(); ++i) samples.push_back(interior_samples(tiles[i].pentagon, 50, 100 + i));
  int overlaps = 0;
  for (std::size_t i = 0; i < tiles.size(); ++i)
    for (std::size_t j = 0; j < tiles.size(); ++j)
      if (i != j)
        for (const MPoint& x : samples[i]) overlaps += tiles[j].pentagon.contains_strictly(x, 1e-9);
  CHECK(overlaps == 0);

  // edges on a common line agree on both endpoints
  int shared = 0;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    for (std::size_t j = i + 1; j < tiles.size(); ++j) {
      const Pentagon& p = tiles[i].pentagon;
      const Pentagon& q = tiles[j].pentagon;
      for (int k = 0; k < 5; ++k) {
        for (int l = 0; l < 5; ++l) {
          if (!same_line(p.sides[k], q.sides[l], 1e-7)) continue;
          const MPoint pm = along(p.vertices[k], p.vertices[(k + 1) % 5], constants().a / 2);
          const MPoint qm = along(q.vertices[l], q.vertices[(l + 1) % 5], constants().a / 2);
          if (dist(pm, qm) > constants().a - 1e-6) continue;  // consecutive or disjoint segments
          ++shared;
          const bool direct = near(p.vertices[k], q.vertices[l]) && near(p.vertices[(k + 1) % 5], q.vertices[(l + 1) % 5]);
          const bool crossed = near(p.vertices[k], q.vertices[(l + 1) % 5]) && near(p.vertices[(k + 1) % 5], q.vertices[l]);
          CHECK((direct || crossed));
        }
      }
    }
  }
  CHECK(shared >= 87);
}

TEST_CASE("generation distance bound") {
  const double a = constants().a;
  for (const Tile& t : decompose(base_quarter(), 6)) {
    if (t.path.empty() || t.color != Color::W || t.generation > 4) continue;
    CHECK(dist_to_side5(t.pentagon) >= t.generation * a - 1e-9);
  }
}

TEST_CASE("strip lemmas") {
  const StripReport r = verify_strip_lemmas(4);
  for (const auto& f : r.failures) MESSAGE(f);
  CHECK(r.visilow);
  CHECK(r.visi_shift_inclusion);
  CHECK(r.visi_shift_exclusion);
  CHECK(r.ovisible);
  CHECK(r.oposit);
  CHECK(r.pentagons == 33);
}

TEST_CASE("tile json") {
  const auto tiles = decompose(base_quarter(), 1);
  const auto j = tiles_json(tiles);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["color"] == "W");
  CHECK(j[1]["path"] == nlohmann::json::array({0}));
  CHECK(j[1]["vertices"].size() == 5);
  CHECK(j[1]["vertices"][0].size() == 3);
}
