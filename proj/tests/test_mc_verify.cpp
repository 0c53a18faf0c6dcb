#include <cmath>
#include <numbers>

#include "doctest.h"
#include "intgeo/mc_verify.hpp"

using namespace intgeo;
using namespace intgeo::mc;

namespace {

Vec v2(double x, double y) { return Vec{{x, y}}; }
Vec v3(double x, double y, double z) { return Vec{{x, y, z}}; }
Scalar pi(int m = 1, long c = 1) { return Scalar::pi_power(m, Rational(c)); }

RunOptions small(std::uint64_t seed, std::uint64_t samples = 100000) {
  RunOptions o;
  o.samples = samples;
  o.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("splitmix streams are reproducible and distinct") {
  SplitMix64 a = SplitMix64::stream(7, 3), b = SplitMix64::stream(7, 3), c = SplitMix64::stream(7, 4);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    std::uint64_t x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
  }
  CHECK(differs);
  SplitMix64 r = SplitMix64::stream(1, 0);
  double s = 0, s2 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    double g = r.normal();
    s += g;
    s2 += g * g;
  }
  CHECK(std::abs(s / n) < 0.01);
  CHECK(std::abs(s2 / n - 1.0) < 0.02);
}

TEST_CASE("random rotations lie in SO(n)") {
  SplitMix64 rng = SplitMix64::stream(11, 0);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 50; ++rep) {
      Mat r = random_rotation(n, rng);
      CHECK((r.transpose() * r - Mat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  Mat one = random_rotation(1, rng);
  CHECK(one(0, 0) == 1.0);
}

TEST_CASE("haar projection law") {
  for (int n : {2, 3, 5}) {
    SplitMix64 rng = SplitMix64::stream(2024, n);
    Vec u = Vec::Unit(n, 0), v = Vec::Unit(n, n - 1);
    std::vector<double> xs;
    for (int i = 0; i < 100000; ++i) xs.push_back((random_rotation(n, rng) * u).dot(v));
    KsResult ks = ks_test(xs, [n](double x) { return projection_cdf(n, x); });
    CHECK(ks.p_value > 0.01);
    CHECK(ks.statistic < 0.01);
  }
  // Planar rotation angles are uniform, so E[cos] = 0 and E[cos^2] = 1/2.
  SplitMix64 rng = SplitMix64::stream(5, 5);
  double c = 0, c2 = 0;
  const int m = 100000;
  for (int i = 0; i < m; ++i) {
    double x = random_rotation(2, rng)(0, 0);
    c += x;
    c2 += x * x;
  }
  CHECK(std::abs(c / m) < 0.01);
  CHECK(std::abs(c2 / m - 0.5) < 0.01);
  // The planar law is not the uniform one.
  std::vector<double> bad;
  for (int i = 0; i < 20000; ++i) bad.push_back(rng.uniform(-1, 1));
  CHECK(ks_test(bad, [](double x) { return projection_cdf(2, x); }).p_value < 0.01);
}

TEST_CASE("projection cdf closed forms") {
  // n = 3: <Ru,v> is uniform on [-1,1]; n = 2: arcsine law.
  for (double x : {-0.9, -0.3, 0.0, 0.4, 0.8}) {
    CHECK(projection_cdf(3, x) == doctest::Approx((x + 1) / 2).epsilon(1e-12));
    CHECK(projection_cdf(2, x) == doctest::Approx(1.0 - std::acos(x) / std::numbers::pi).epsilon(1e-12));
  }
  CHECK(projection_cdf(4, -2) == 0.0);
  CHECK(projection_cdf(4, 2) == 1.0);
}

TEST_CASE("intersection predicates") {
  ConvexBody unit = ConvexBody::ball(v2(0, 0), 1.0);
  CHECK(intersects(unit, ConvexBody::ball(v2(2, 0), 1.0)));  // tangent counts
  CHECK_FALSE(intersects(unit, ConvexBody::ball(v2(2.001, 0), 1.0)));
  ConvexBody sq = ConvexBody::box(v2(0, 0), v2(1, 1));
  CHECK(intersects(sq, ConvexBody::box(v2(1, 0), v2(2, 1))));
  CHECK_FALSE(intersects(sq, ConvexBody::box(v2(1.01, 0), v2(2, 1))));
  CHECK(intersects(ConvexBody::ball(v2(2, 0.5), 1.0), sq));
  CHECK_FALSE(intersects(ConvexBody::ball(v2(2.01, 0.5), 1.0), sq));
  // Corner approach along the diagonal.
  CHECK_FALSE(intersects(ConvexBody::ball(v2(1.7, 1.7), 0.98), sq));
  CHECK(intersects(ConvexBody::ball(v2(1.7, 1.7), 0.99), sq));

  // A square rotated by 45 degrees about its center touches its neighbor only
  // through the corner at distance sqrt(2)/2.
  double h = std::sqrt(0.5);
  Mat r(2, 2);
  r << h, -h, h, h;
  ConvexBody diamond = ConvexBody::box(v2(-0.5, -0.5), v2(0.5, 0.5)).placed({r, v2(0, 0)});
  CHECK(intersects(diamond, ConvexBody::box(v2(h - 1e-3, -1), v2(3, 1))));
  CHECK_FALSE(intersects(diamond, ConvexBody::box(v2(h + 1e-3, -1), v2(3, 1))));

  // GJK on general polytopes agrees with the dedicated paths.
  ConvexBody tri = ConvexBody::polytope({v2(0, 0), v2(1, 0), v2(0, 1)});
  CHECK(intersects(tri, ConvexBody::point(v2(0.5, 0.5))));
  CHECK_FALSE(intersects(tri, ConvexBody::point(v2(0.51, 0.51))));
  CHECK(tri.distance_to(v2(1, 1)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
  CHECK(intersects(ConvexBody::polytope({v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)}), sq));

  SplitMix64 rng = SplitMix64::stream(3, 3);
  for (int rep = 0; rep < 500; ++rep) {
    Mat ra = random_rotation(3, rng), rb = random_rotation(3, rng);
    Vec ta = v3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    Vec tb = v3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    ConvexBody a = ConvexBody::box(v3(0, 0, 0), v3(1, 0.5, 0.7)).placed({ra, ta});
    ConvexBody b = ConvexBody::box(v3(0, 0, 0), v3(0.3, 1, 0.4)).placed({rb, tb});
    ConvexBody pa = ConvexBody::polytope(ConvexBody::box(v3(0, 0, 0), v3(1, 0.5, 0.7)).world_vertices()).placed({ra, ta});
    ConvexBody pb = ConvexBody::polytope(ConvexBody::box(v3(0, 0, 0), v3(0.3, 1, 0.4)).world_vertices()).placed({rb, tb});
    double d = gjk_distance([&](const Vec& x) { return pa.support(x); }, [&](const Vec& x) { return pb.support(x); }, 3,
                            tb - ta);
    if (d > 1e-6 || d == 0.0) CHECK(intersects(a, b) == intersects(pa, pb));
    Vec x = v3(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    CHECK(a.distance_to(x) == doctest::Approx(pa.distance_to(x)).epsilon(1e-8).scale(1.0));
  }
  CHECK_THROWS_AS(intersects(unit, ConvexBody::ball(v3(0, 0, 0), 1.0)), DomainError);
}

TEST_CASE("minkowski volumes by two routes") {
  SplitMix64 rng = SplitMix64::stream(99, 0);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<Vec> a, b, sums;
    for (int i = 0; i < 6; ++i) a.push_back(v2(rng.normal(), rng.normal()));
    for (int i = 0; i < 5; ++i) b.push_back(v2(rng.normal(), rng.normal()));
    for (const auto& x : a) {
      for (const auto& y : b) sums.push_back(x + y);
    }
    CHECK(minkowski_area_2d(a, b) == doctest::Approx(polygon_area(convex_hull_2d(sums))).epsilon(1e-10));
  }
  CHECK(minkowski_area_2d({v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)}, {v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)}) ==
        doctest::Approx(4.0));

  for (int rep = 0; rep < 30; ++rep) {
    std::vector<Vec> g;
    int m = 3 + rep % 3;
    for (int i = 0; i < m; ++i) g.push_back(v3(rng.normal(), rng.normal(), rng.normal()));
    std::vector<Vec> pts{Vec::Zero(3)};
    for (const auto& v : g) {
      std::vector<Vec> next = pts;
      for (const auto& p : pts) next.push_back(p + v);
      pts = next;
    }
    CHECK(hull_volume_3d(pts) == doctest::Approx(zonotope_volume_3d(g)).epsilon(1e-9));
  }
  CHECK(hull_volume_3d(ConvexBody::box(v3(0, 0, 0), v3(1, 2, 3)).world_vertices()) == doctest::Approx(6.0));
}

TEST_CASE("serial and parallel runs are bit identical") {
  ConvexBody disk = ConvexBody::ball(v2(0, 0), 1.0);
  ConvexBody sq = ConvexBody::box(v2(0, 0), v2(1, 1));
  RunOptions s = small(42, 70000), p = small(42, 70000);
  s.exec = Exec::serial;
  p.exec = Exec::parallel;
  p.jobs = 4;
  MCEstimate es = estimate_principal_kinematic(disk, sq, s), ep = estimate_principal_kinematic(disk, sq, p);
  CHECK(es.mean == ep.mean);
  CHECK(es.stderr_ == ep.stderr_);
  MCEstimate as = estimate_additive(sq, sq, s), ap = estimate_additive(sq, sq, p);
  CHECK(as.mean == ap.mean);
  RunOptions other = p;
  other.seed = 43;
  CHECK(estimate_principal_kinematic(disk, sq, other).mean != ep.mean);
}

TEST_CASE("exact predictions match hand values") {
  ConvexBody disk = ConvexBody::ball(v2(0, 0), 1.0);
  ConvexBody sq = ConvexBody::box(v2(0, 0), v2(1, 1));
  // vol A + vol B + per A per B / (2 pi).
  CHECK(*estimate_principal_kinematic(disk, sq, small(1, 20000)).prediction == pi() + Scalar(Rational(5)));
  // vol A + vol B + 2 * average mixed area, per A per B / (4 pi).
  CHECK(*estimate_additive(sq, sq, small(1, 20000)).prediction == Scalar(Rational(2)) + pi(-1, 8));
  CHECK(*cauchy_projection_check(ConvexBody::box(v3(0, 0, 0), v3(1, 2, 3)), small(1, 20000)).prediction ==
        Scalar(Rational(11)));
  CHECK(*steiner_mc(sq, 1.0, small(1, 20000)).prediction == Scalar(Rational(5)) + pi());
  CHECK(*estimate_crofton(disk, 1, small(1, 20000)).prediction == pi());
}

TEST_CASE("zero variance estimators") {
  ConvexBody disk = ConvexBody::ball(v2(0, 0), 1.0);
  ConvexBody sq = ConvexBody::box(v2(0, 0), v2(1, 1));
  // Cauchy on a ball and Crofton with k = 0 are constant integrands.
  MCEstimate c = cauchy_projection_check(ConvexBody::ball(v3(0, 0, 0), 2.0), small(3, 5000));
  CHECK(c.stderr_ == 0.0);
  CHECK(c.z == 0.0);
  MCEstimate k0 = estimate_crofton(sq, 0, small(3, 5000));
  CHECK(k0.stderr_ == 0.0);
  CHECK(k0.mean == doctest::Approx(1.0));
  CHECK(k0.z == 0.0);
  MCEstimate bb = estimate_additive(disk, ConvexBody::ball(v2(5, 5), 0.5), small(3, 5000));
  CHECK(bb.stderr_ == 0.0);
  CHECK(bb.mean == doctest::Approx(std::numbers::pi * 2.25).epsilon(1e-12));
  CHECK(bb.z == 0.0);
  MCEstimate tube = estimate_additive(sq, disk, small(3, 5000));
  CHECK(tube.stderr_ == 0.0);
  CHECK(tube.z == 0.0);
}

TEST_CASE("estimators land within a few standard errors") {
  ConvexBody disk = ConvexBody::ball(v2(0, 0), 1.0);
  ConvexBody sq = ConvexBody::box(v2(0, 0), v2(1, 1));
  ConvexBody cube = ConvexBody::box(v3(0, 0, 0), v3(1, 1, 1));
  ConvexBody ball3 = ConvexBody::ball(v3(0, 0, 0), 1.0);
  std::vector<MCEstimate> runs{
      estimate_principal_kinematic(disk, sq, small(101)),
      estimate_principal_kinematic(ConvexBody::point(v2(3, 3)), sq, small(102)),
      estimate_principal_kinematic(ball3, ConvexBody::ball(v3(4, 0, 0), 0.5), small(103)),
      estimate_crofton(sq, 1, small(104)),
      estimate_crofton(cube, 1, small(105)),
      estimate_crofton(ball3, 2, small(106)),
      cauchy_projection_check(ConvexBody::box(v3(0, 0, 0), v3(1, 2, 3)), small(107)),
      steiner_mc(ConvexBody::box(v3(0, 0, 0), v3(1, 2, 0.5)), 0.3, small(108)),
      estimate_additive(cube, ConvexBody::box(v3(0, 0, 0), v3(2, 1, 0.5)), small(109, 20000)),
  };
  for (const auto& e : runs) {
    INFO(e.test << " mean=" << e.mean << " pred=" << e.prediction_value << " se=" << e.stderr_);
    REQUIRE(e.prediction.has_value());
    CHECK(std::abs(e.z) <= 4.5);
  }
  // A point B reduces the kinematic integral to vol(A).
  CHECK(runs[1].prediction_value == doctest::Approx(1.0));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(ConvexBody::ball(v2(0, 0), 0.0), DomainError);
  CHECK_THROWS_AS(ConvexBody::box(v2(0, 0), v2(1, 0)), DomainError);
  CHECK_THROWS_AS(ConvexBody::polytope({}), DomainError);
  ConvexBody sq = ConvexBody::box(v2(0, 0), v2(1, 1));
  CHECK_THROWS_AS(estimate_crofton(sq, 3, small(1, 100)), DomainError);
  CHECK_THROWS_AS(steiner_mc(sq, -1.0, small(1, 100)), DomainError);
  Moments one;
  one.count = 1;
  CHECK_THROWS_AS(finish("x", one, 0, 1.0), DomainError);
  ConvexBody seg = ConvexBody::box(Vec{{0.0}}, Vec{{1.0}});
  CHECK_THROWS_AS(estimate_additive(seg, seg, small(1, 100)), DomainError);
}
