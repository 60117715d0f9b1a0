#include "common.hpp"

using namespace ektest;

namespace {

Point<L> P(L a, L b, L c) { return Point<L>{{a, b, c}}; }

}  // namespace

TEST(Metric, DistanceExamples) {
  EXPECT_NEAR(double(distance(P(1, 0, 0), P(0, 1, 0))), double(pi_v<L> / 2), 1e-18);
  std::mt19937_64 g(11);
  for (int k = 0; k < 1000; ++k) {
    Point<L> p{rand_vec(g)}, q{rand_vec(g)};
    EXPECT_EQ(distance(p, p), 0.0L);
    EXPECT_NEAR(double(std::sin(distance(p, q))), double(norm(cross(unit(p.v), unit(q.v)))), 1e-12);
    EXPECT_NEAR(double(distance(p, q)), double(oracle::edist(ov(p.v), ov(q.v))), 1e-12);
    L s = segment_measure(p, q, Branch::Plus) + segment_measure(p, q, Branch::Minus);
    EXPECT_NEAR(double(s), double(pi_v<L>), 1e-12);
  }
}

TEST(Metric, MidpointsOfAxes) {
  auto [m1, m2] = midpoints(P(1, 0, 0), P(0, 1, 0));
  EXPECT_LT(gap(m1.v, {1, 1, 0}), 1e-18L);
  EXPECT_LT(gap(m2.v, {1, -1, 0}), 1e-18L);
}

TEST(Metric, MidpointsMatchOracle) {
  std::mt19937_64 g(12);
  for (int k = 0; k < 200; ++k) {
    Point<L> p{canonical(rand_vec(g))}, q{canonical(rand_vec(g))};
    auto [m1, m2] = midpoints(p, q);
    auto om = oracle::midpoints(ov(p.v), ov(q.v));
    EXPECT_LT(oracle::gap(ov(m1.v), om[0]), 1e-12L);
    EXPECT_LT(oracle::gap(ov(m2.v), om[1]), 1e-12L);
    EXPECT_NEAR(double(distance(m1, p)), double(distance(m1, q)), 1e-12);
    EXPECT_LT(incidence(join(p, q), m1), 1e-15L);
  }
}

TEST(Metric, OctantAnglesAreRight) {
  Point<L> a = P(1, 0, 0), b = P(0, 1, 0), c = P(0, 0, 1);
  EXPECT_NEAR(double(angle_measure(b, a, c)), double(pi_v<L> / 2), 1e-18);
  EXPECT_NEAR(double(angle_measure(c, b, a)), double(pi_v<L> / 2), 1e-18);
}

TEST(Metric, PerpAndPedalExample) {
  Line<L> l{{0, 0, 1}};
  Point<L> p = P(1, 1, 1);
  auto k = perp(l, p);
  EXPECT_LT(incidence(k, P(0, 0, 1)), 1e-18L);
  EXPECT_LT(gap(pedal(l, p).v, {1, 1, 0}), 1e-18L);
}

TEST(Metric, PedalMatchesNearestPointOracle) {
  std::mt19937_64 g(13);
  for (int k = 0; k < 300; ++k) {
    Line<L> l{rand_vec(g)};
    Point<L> p{rand_vec(g)};
    auto f = pedal(l, p);
    EXPECT_LT(incidence(l, f), 1e-15L);
    EXPECT_LT(incidence(perp(l, p).v, l.v), 1e-15L);  // dual of l lies on the perpendicular
    EXPECT_LT(oracle::gap(ov(f.v), oracle::pedal(ov(l.v), ov(p.v))), 1e-12L);
    auto pa = par(l, p);
    EXPECT_LT(incidence(pa, p), 1e-15L);
    EXPECT_LT(incidence(perp(l, p).v, pa.v), 1e-15L);
  }
}

TEST(Metric, PerpOfPoleIsRejected) {
  try {
    perp(Line<L>{{1, 2, 3}}, P(2, 4, 6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleInput);
  }
}

TEST(Metric, PerpBisectorsAreEquidistantLoci) {
  std::mt19937_64 g(14);
  for (int k = 0; k < 100; ++k) {
    Point<L> p{rand_vec(g)}, q{rand_vec(g)};
    auto [b1, b2] = perp_bisectors(p, q);
    Vec3<L> pole = cross(p.v, q.v);
    for (auto& b : {b1, b2}) {
      EXPECT_LT(incidence(b.v, pole), 1e-14L);
      Vec3<L> u = unit(cross(b.v, pole)), w = unit(pole);
      for (int s = 0; s < 20; ++s) {
        L t = pi_v<L> * s / 20;
        Point<L> x{std::cos(t) * u + std::sin(t) * w};
        EXPECT_NEAR(double(distance(x, p)), double(distance(x, q)), 1e-10);
      }
    }
  }
  auto [c1, c2] = perp_bisectors(P(1, 0, 0), P(0, 1, 0));
  EXPECT_LT(gap(c1.v, {1, -1, 0}), 1e-18L);
  EXPECT_LT(gap(c2.v, {1, 1, 0}), 1e-18L);
}

TEST(Metric, PointReflection) {
  std::mt19937_64 g(15);
  Point<L> s0{rand_vec(g)};
  EXPECT_LT(gap(reflect_point(s0, s0).v, s0.v), 1e-15L);
  for (int k = 0; k < 1000; ++k) {
    Point<L> p{rand_vec(g)}, s{rand_vec(g)};
    auto q = reflect_point(p, s);
    EXPECT_LT(gap(reflect_point(q, s).v, p.v), 1e-10L);
    EXPECT_NEAR(double(distance(s, p)), double(distance(s, q)), 1e-10);
  }
}

TEST(Metric, CircleThroughExamples) {
  auto c = circle_through(P(1, 0, 0), P(1, 1, 0));
  EXPECT_NEAR(double(c.radius()), double(pi_v<L> / 4), 1e-18);
  std::mt19937_64 g(16);
  for (int k = 0; k < 50; ++k) {
    Point<L> m{canonical(rand_vec(g))}, p{canonical(rand_vec(g))};
    auto cc = circle_through(m, p);
    EXPECT_TRUE(on_circle(p, cc));
    // rotate p about m (Rodrigues) and stay on the circle
    Vec3<L> k3 = unit(m.v);
    for (int s = 1; s <= 50; ++s) {
      L t = 2 * pi_v<L> * s / 50;
      Vec3<L> v = p.v;
      Vec3<L> r = std::cos(t) * v + std::sin(t) * cross(k3, v) + (1 - std::cos(t)) * dot(k3, v) * k3;
      EXPECT_LT(circle_residual(Point<L>{r}, cc), 1e-12L);
    }
  }
}

TEST(Metric, TangentLength) {
  auto c = circle_through(P(1, 0, 0), P(1, 1, 0));
  EXPECT_NEAR(double(tangent_length(P(1, 1, 0), c)), 0.0, 1e-9);
  try {
    tangent_length(P(1, 0, 0), c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutsideDomain);
  }
}

TEST(Metric, RadicalAxisHasEqualTangentLengths) {
  std::mt19937_64 g(17);
  int tested = 0;
  for (int k = 0; k < 200 && tested < 50; ++k) {
    Point<L> m1{canonical(rand_vec(g))}, m2{canonical(rand_vec(g))};
    L r1 = 0.2L + 0.3L * std::uniform_real_distribution<L>(0, 1)(g);
    L r2 = 0.2L + 0.3L * std::uniform_real_distribution<L>(0, 1)(g);
    AmbientCircle<L> c1{m1, std::cos(r1)}, c2{m2, std::cos(r2)};
    Line<L> ax;
    try {
      ax = radical_axis(c1, c2);
    } catch (const Error&) {
      continue;
    }
    ++tested;
    // points of the axis outside both circles have equal tangent lengths
    Vec3<L> u = unit(cross(ax.v, {1, 0, 0}));
    Vec3<L> w = unit(cross(ax.v, u));
    for (int s = 0; s < 36; ++s) {
      L t = pi_v<L> * s / 36;
      Point<L> x{std::cos(t) * u + std::sin(t) * w};
      L c1r = std::abs(dot(unit(x.v), unit(m1.v))) / c1.cosradius;
      L c2r = std::abs(dot(unit(x.v), unit(m2.v))) / c2.cosradius;
      EXPECT_NEAR(double(c1r), double(c2r), 1e-10);
    }
  }
  EXPECT_GE(tested, 20);
}

TEST(Metric, PowerCirclesMeetAtL) {
  for (auto& f : random_frames(50, 18)) {
    auto pc = power_circles(f);
    Vec3<L> l = ambient(f, center(CenterId::L, f));
    for (int k = 0; k < 3; ++k) {
      // of the two radical axes of a circle pair, one passes through L
      auto [a1, a2] = radical_axes(to_ambient(f, pc[k]), to_ambient(f, pc[(k + 1) % 3]));
      EXPECT_LT(std::min(incidence(a1.v, l), incidence(a2.v, l)), 1e-9L);
    }
  }
}
