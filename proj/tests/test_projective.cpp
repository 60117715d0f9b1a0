#include "common.hpp"

using namespace ektest;

namespace {

Point<L> P(L a, L b, L c) { return Point<L>{{a, b, c}}; }

}  // namespace

TEST(Projective, JoinOfAxesIsThirdAxisLine) {
  auto l = join(P(1, 0, 0), P(0, 1, 0));
  EXPECT_LT(gap(l.v, {0, 0, 1}), 1e-18L);
}

TEST(Projective, JoinContainsBothPoints) {
  std::mt19937_64 g(1);
  for (int k = 0; k < 1000; ++k) {
    Point<L> p{rand_vec(g)}, q{rand_vec(g)};
    auto l = join(p, q);
    EXPECT_LT(incidence(l, p), 1e-12L);
    EXPECT_LT(incidence(l, q), 1e-12L);
    EXPECT_LT(gap(l.v, join(q, p).v), 1e-15L);
  }
}

TEST(Projective, JoinOfEqualPointsIsRejected) {
  try {
    join(P(1, 2, 3), P(2, 4, 6));
    FAIL() << "expected DegenerateInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateInput);
  }
}

TEST(Projective, MeetOfAxisLines) {
  auto m = meet(Line<L>{{0, 0, 1}}, Line<L>{{0, 1, 0}});
  EXPECT_LT(gap(m.v, {1, 0, 0}), 1e-18L);
}

TEST(Projective, MeetOfTwoJoinsThroughPReturnsP) {
  std::mt19937_64 g(2);
  for (int k = 0; k < 1000; ++k) {
    Point<L> p{rand_vec(g)}, q{rand_vec(g)}, r{rand_vec(g)};
    EXPECT_LT(gap(meet(join(p, q), join(p, r)).v, p.v), 1e-10L);
    Line<L> a{rand_vec(g)}, b{rand_vec(g)};
    auto x = meet(a, b);
    EXPECT_LT(incidence(a, x), 1e-12L);
    EXPECT_LT(incidence(b, x), 1e-12L);
  }
}

TEST(Projective, DualIsCoordinateIdentityAndInvolution) {
  auto l = dual(P(1, 2, 3));
  EXPECT_EQ(l.v, (Vec3<L>{1, 2, 3}));
  std::mt19937_64 g(3);
  for (int k = 0; k < 1000; ++k) {
    Point<L> p{rand_vec(g)};
    EXPECT_EQ(dual(dual(p)).v, p.v);
    Vec3<L> u = canonical(p);
    EXPECT_GT(dot(u, u), 0.5L);  // P never lies on its own polar
  }
}

TEST(Projective, CanonicalRepresentativeIsUnitAndLexPositive) {
  std::mt19937_64 g(4);
  for (int k = 0; k < 1000; ++k) {
    Vec3<L> v = rand_vec(g);
    Vec3<L> u = canonical(v);
    EXPECT_NEAR(double(norm(u)), 1.0, 1e-15);
    EXPECT_TRUE(lex_positive(u));
    EXPECT_EQ(canonical(u), u);
    EXPECT_LT(gap(u, v), 1e-15L);
    EXPECT_EQ(canonical(-v), u);
  }
}

TEST(Projective, MidpointsAreHarmonic) {
  std::mt19937_64 g(5);
  for (int k = 0; k < 500; ++k) {
    Point<L> p{rand_vec(g)}, q{rand_vec(g)};
    // midpoints from the explicit combinations P° + Q° and P° - Q°
    Vec3<L> u = unit(p.v), w = unit(q.v);
    EXPECT_NEAR(double(cross_ratio(p.v, q.v, u + w, u - w)), -1.0, 1e-10);
  }
}

TEST(Projective, CrossRatioDegenerateAndHomogeneous) {
  std::mt19937_64 g(6);
  Vec3<L> p = rand_vec(g), q = rand_vec(g);
  Vec3<L> r = 0.3L * p + 1.7L * q, s = -2.0L * p + 0.4L * q;
  EXPECT_NEAR(double(cross_ratio(p, q, r, r)), 1.0, 1e-14);
  L base = cross_ratio(p, q, r, s);
  EXPECT_NEAR(double(cross_ratio(3.0L * p, q, r, s)), double(base), 1e-12);
  EXPECT_NEAR(double(cross_ratio(p, -2.0L * q, r, s)), double(base), 1e-12);
  EXPECT_NEAR(double(cross_ratio(p, q, 5.0L * r, s)), double(base), 1e-12);
  EXPECT_NEAR(double(cross_ratio(p, q, r, -0.1L * s)), double(base), 1e-12);
  // (P,Q;R,S) (P,Q;S,R) = 1
  EXPECT_NEAR(double(base * cross_ratio(p, q, s, r)), 1.0, 1e-12);
}

TEST(Projective, CrossRatioRejectsNonCollinear) {
  try {
    cross_ratio(Vec3<L>{1, 0, 0}, Vec3<L>{0, 1, 0}, Vec3<L>{1, 1, 0}, Vec3<L>{0, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCollinear);
  }
}

TEST(Projective, CollinearityExamples) {
  EXPECT_TRUE(collinear(P(1, 0, 0), P(0, 1, 0), P(1, 1, 0)));
  EXPECT_FALSE(collinear(P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)));
}

TEST(Projective, TracesNotCollinearButTripolarMeetsAre) {
  std::mt19937_64 g(7);
  for (int k = 0; k < 200; ++k) {
    Vec3<L> p = rand_vec(g);
    auto t = traces(p);
    EXPECT_GT(det_residual(t[0], t[1], t[2]), 1e-6L);
    Vec3<L> l = tripolar(p);
    const Vec3<L> side[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    Vec3<L> x0 = cross(l, side[0]), x1 = cross(l, side[1]), x2 = cross(l, side[2]);
    EXPECT_LT(det_residual(x0, x1, x2), 1e-12L);
  }
}
