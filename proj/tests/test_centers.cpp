#include "common.hpp"

using namespace ektest;

TEST(Centers, EquilateralCentersCoincideWithG) {
  auto f = frame_from_sides(0.9L, 0.9L, 0.9L);
  for (auto id : {CenterId::G, CenterId::O, CenterId::I, CenterId::H, CenterId::K, CenterId::Ktilde, CenterId::Ge,
                  CenterId::Na})
    EXPECT_LT(gap(center(id, f), {1, 1, 1}), 1e-15L) << info(id).name;
}

TEST(Centers, OctantCircumcenterAndRadii) {
  auto f = octant();
  EXPECT_LT(gap(center(CenterId::O, f), {1, 1, 1}), 1e-18L);
  const L R = std::acos(std::sqrt(1.0L / 3)), r = std::acos(std::sqrt(2.0L / 3));
  EXPECT_NEAR(double(circumradius(f)), double(R), 1e-12);
  EXPECT_NEAR(double(inradius(f)), double(r), 1e-12);
  // oracle: equidistant point of the three axes and its distances
  auto o = oracle::circumcenter({1, 0, 0}, {0, 1, 0}, {0, 0, 1});
  EXPECT_NEAR(double(oracle::edist(o, {1, 0, 0})), double(R), 1e-12);
  EXPECT_NEAR(double(oracle::line_dist({1, 0, 0}, o)), double(r), 1e-12);
}

TEST(Centers, CircumcenterAndIncenterMatchOracles) {
  for (auto& f : random_frames(100)) {
    auto oc = oracle::circumcenter(ov(f.A), ov(f.B), ov(f.C));
    EXPECT_LT(oracle::gap(amb(f, center(CenterId::O, f)), oc), 1e-9L);
    EXPECT_NEAR(double(circumradius(f)), double(oracle::edist(oc, ov(f.A))), 1e-9);
    auto ic = oracle::incenter(ov(f.A), ov(f.B), ov(f.C));
    EXPECT_LT(oracle::gap(amb(f, center(CenterId::I, f)), ic), 1e-9L);
    EXPECT_NEAR(double(inradius(f)), double(oracle::line_dist(ov(cross(f.B, f.C)), ic)), 1e-9);
    EXPECT_GE(circumradius(f), inradius(f));
  }
}

TEST(Centers, AngleFormRowsMatchSideForms) {
  auto f = scalene();
  for (auto& c : center_table) {
    if (!c.has_angle_form) continue;
    for (int i = 0; i < 4; ++i)
      EXPECT_LT(gap(center(c.id, f, i), center_angle_form(c.id, f, i)), 1e-10L) << c.name << " triangle " << i;
  }
}

TEST(Centers, CyclicSymmetry) {
  auto f = frame_from_sides(1.1L, 0.7L, 0.9L), g = frame_from_sides(0.7L, 0.9L, 1.1L);
  for (auto& c : center_table) {
    Vec3<L> p = center(c.id, f), q = center(c.id, g);
    EXPECT_LT(gap(p, {q[2], q[0], q[1]}), 1e-12L) << c.name;
  }
}

TEST(Centers, TriangleIndexFollowsSignAndSubstitutionRule) {
  // the incenter of triangle i equals the excenter obtained from the bisectors
  for (auto& f : random_frames(100)) {
    for (int i = 1; i <= 3; ++i) {
      Vec3<L> x = center(CenterId::I, f, i);
      Vec3<L> y = center(CenterId::I, with_index(f, i));
      Vec3<L> yb = y;
      yb[i - 1] = -yb[i - 1];  // barycentrics of the flipped frame back to the base frame
      EXPECT_LT(gap(x, yb), 1e-12L);
    }
  }
}

TEST(Centers, TriplexPointsLieOnEulerLine) {
  for (auto& f : random_frames(200)) {
    Vec3<L> go = central_line(LineId::GO, f);
    for (int k = 0; k < 3; ++k) EXPECT_LT(bary_incidence(f, go, vertex_center(VertexCenterId::Triplex, k, f)), 1e-10L);
  }
}

TEST(Centers, TriplexCircumcirclePointIsOnCircumcircle) {
  for (auto& f : random_frames(200)) {
    auto cc = circumcircle(f);
    for (int k = 0; k < 3; ++k) {
      Vec3<L> t = vertex_center(VertexCenterId::TriplexCircum, k, f);
      EXPECT_LT(conic_residual(cc, t), 1e-12L);
    }
  }
}

// The printed incidence of T<A> with A v A^G (x2 = x3) does not hold; the point
// lies on x2 + x3 = 0 instead. Both facts are pinned here.
TEST(Centers, TriplexCircumcirclePointLiesOnAntimedianNotMedian) {
  for (auto& f : random_frames(200)) {
    Vec3<L> t = vertex_center(VertexCenterId::TriplexCircum, 0, f);
    EXPECT_LT(bary_incidence(f, Vec3<L>{0, 1, 1}, t), 1e-12L);
    EXPECT_GT(bary_incidence(f, Vec3<L>{0, 1, -1}, t), 1e-6L);
    // and it is (B v T_C) ^ (C v T_B)
    Vec3<L> tb = vertex_center(VertexCenterId::Triplex, 1, f), tc = vertex_center(VertexCenterId::Triplex, 2, f);
    Vec3<L> x = cross(cross(Vec3<L>{0, 1, 0}, tc), cross(Vec3<L>{0, 0, 1}, tb));
    EXPECT_LT(gap(x, t), 1e-9L);
  }
}

TEST(Centers, DualTriangleCircumcircleIsCenteredAtI) {
  for (auto& f : random_frames(200)) {
    Vec3<L> in = center(CenterId::I, f);
    auto d = dual_triple(f);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(double(bary_distance(f, in, d[k])), double(dual_circumradius(f)), 1e-10);
  }
}

TEST(Centers, IsoscelesTriplexIsRejected) {
  auto f = frame_from_sides(1.0L, 1.0L, 0.6L);
  try {
    vertex_center(VertexCenterId::Triplex, 0, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IsoscelesDegeneracy);
  }
  try {
    center(CenterId::OKtripole, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndefinedCenter);
  }
}

TEST(Centers, NameLookup) {
  for (auto& c : center_table) EXPECT_EQ(center_by_name(c.name), c.id);
  EXPECT_EQ(center_by_name("Hminus"), CenterId::Hminus);
  EXPECT_FALSE(center_by_name("X999").has_value());
}

TEST(EuclideanLimit, CentroidIsExact) {
  for (L lam : {1e-1L, 1e-2L, 1e-3L}) EXPECT_EQ(euclidean_limit_check(CenterId::G, 1.0L, 0.8L, 0.6L, lam), 0.0L);
}

TEST(EuclideanLimit, SecondOrderConvergence) {
  for (auto id : {CenterId::I, CenterId::Ktilde, CenterId::O, CenterId::Na}) {
    auto r = limit_sweep<L>(id, 1.0L, 0.8L, 0.6L, {1e-1, 1e-2, 1e-3});
    ASSERT_EQ(r.orders.size(), 2u);
    for (double o : r.orders) EXPECT_NEAR(o, 2.0, 0.3) << info(id).name;
    double ratio = r.rows[1].discrepancy / r.rows[2].discrepancy;
    EXPECT_GT(ratio, 50.0);
    EXPECT_LT(ratio, 200.0);
  }
}

TEST(EuclideanLimit, UntaggedCenterIsRejected) {
  try {
    euclidean_limit_check(CenterId::Hstar, 1.0L, 0.8L, 0.6L, 1e-2L);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoLimitTag);
  }
}
