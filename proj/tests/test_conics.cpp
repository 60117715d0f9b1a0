#include "common.hpp"

using namespace ektest;

namespace {

const Vec3<L> E[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

Mat3<L> rand_sym(std::mt19937_64& g) {
  Vec3<L> a = rand_vec(g), b = rand_vec(g);
  return symmetric(a[0], a[1], a[2], b[0], b[1], b[2]);
}

L mat_gap(const Mat3<L>& a, const Mat3<L>& b) {
  // projective distance of two matrices: unit-normalize, align sign, frobenius difference
  L ab = 0, aa = 0, bb = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ab += a[i][j] * b[i][j], aa += a[i][j] * a[i][j], bb += b[i][j] * b[i][j];
  L na = std::sqrt(aa), nb = std::sqrt(bb) * (ab < 0 ? -1 : 1), d = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d += (a[i][j] / na - b[i][j] / nb) * (a[i][j] / na - b[i][j] / nb);
  return std::sqrt(d);
}

}  // namespace

TEST(Conics, PolePolarAndAdjoint) {
  std::mt19937_64 g(1);
  for (int k = 0; k < 1000; ++k) {
    Mat3<L> m = rand_sym(g);
    Mat3<L> p = m * adjoint(m);
    L d = det(m);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) EXPECT_NEAR(double(p[i][j]), i == j ? double(d) : 0.0, 1e-10 * (1 + std::abs(double(d))));
    Vec3<L> x = rand_vec(g);
    EXPECT_LT(gap(pole(polar(x, Conic<L>{m}), Conic<L>{m}), x), 1e-9L);
  }
}

TEST(Conics, PolarOfConicPointIsTangent) {
  for (auto& f : random_frames(50)) {
    auto c = circumcircle(f);
    for (auto& x : sample_conic(c, 12, E[0])) {
      Vec3<L> l = polar(x, c);
      Vec3<L> y = unit(cross(l, cross(l, Vec3<L>{1, 2, 3})));  // another point of the polar
      Vec3<L> xu = unit(x);
      L pxy = quad(xu, c.m, y), pxx = quad(xu, c.m, xu), pyy = quad(y, c.m, y);
      EXPECT_LT(std::abs(pxy * pxy - pxx * pyy) / (frob(c.m) * frob(c.m)), 1e-18L);
      EXPECT_LT(incidence(l, x), 1e-15L);
    }
  }
}

TEST(Conics, KnownPerspectors) {
  for (auto& f : random_frames(200)) {
    EXPECT_LT(gap(conic_perspector(Conic<L>{f.Tm}), center(CenterId::H, f)), 1e-10L);
    EXPECT_LT(gap(conic_perspector(circumcircle(f)), center(CenterId::Ktilde, f)), 1e-10L);
    EXPECT_LT(gap(conic_perspector(incircle(f)), center(CenterId::Ge, f)), 1e-10L);
  }
  try {
    conic_perspector(Conic<L>{identity3<L>()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DiagonalMatrix);
  }
}

TEST(Conics, CircumcircleIsTheCircleAboutO) {
  for (auto& f : random_frames(100)) {
    auto c = circumcircle(f);
    // sin^2(a/2) x2 x3 + ... = 0 through the vertices
    for (auto& e : E) EXPECT_LT(conic_residual(c, e), 1e-18L);
    auto oc = oracle::circumcenter(ov(f.A), ov(f.B), ov(f.C));
    L R = oracle::edist(oc, ov(f.A));
    for (auto& x : sample_conic(c, 16, E[1])) EXPECT_NEAR(double(oracle::edist(amb(f, x), oc)), double(R), 1e-9);
    auto cl = classify(f, c);
    EXPECT_EQ(cl.kind, ConicKind::Circle);
    auto sp = symmetry_points(f, c);
    EXPECT_TRUE(sp.circle);
    EXPECT_LT(gap(sp.points[0], center(CenterId::O, f)), 1e-10L);
    EXPECT_LT(gap(sp.axis, {1, 1, 1}), 1e-10L);
    EXPECT_LT(gap(circumconic_center_to_perspector(f, center(CenterId::O, f)), center(CenterId::Ktilde, f)), 1e-10L);
  }
}

TEST(Conics, IncircleTouchesSidesAtGergonneTraces) {
  for (auto& f : random_frames(100)) {
    auto c = incircle(f);
    auto t = traces(center(CenterId::Ge, f));
    for (int k = 0; k < 3; ++k) {
      EXPECT_LT(conic_residual(c, t[k]), 1e-12L);
      // the side is the polar of its touch point
      EXPECT_LT(gap(polar(t[k], c), E[k]), 1e-10L);
    }
    auto ic = oracle::incenter(ov(f.A), ov(f.B), ov(f.C));
    L r = oracle::line_dist(ov(cross(f.B, f.C)), ic);
    for (auto& x : sample_conic(c, 12, t[0])) EXPECT_NEAR(double(oracle::edist(amb(f, x), ic)), double(r), 1e-9);
    EXPECT_LT(mat_gap(c.m, incircle_of(f, 0).m), 1e-10L);
  }
}

TEST(Conics, CircumconicEigenvector) {
  for (auto& f : random_frames(200)) {
    Vec3<L> p{1 + 2 * f.ca, 1 + 2 * f.cb, 1 + 2 * f.cc};
    if (std::min({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])}) < 1e-6L) continue;
    auto c = circumconic(p);
    Vec3<L> v = f.adjT * (c.m * Vec3<L>{1, 1, 1});
    EXPECT_LT(gap(v, {1, 1, 1}), 1e-10L);
    // eigenvalue S^2 in this normalization; the printed form is -2 S^2
    L printed = 2 * (f.ca * f.ca + f.cb * f.cb + f.cc * f.cc - 2 * f.ca * f.cb * f.cc - 1);
    EXPECT_NEAR(double(v[0]), double(f.S2), 1e-10);
    EXPECT_NEAR(double(printed), double(-2 * f.S2), 1e-12);
  }
}

TEST(Conics, ReflectionInSymmetryPointsKeepsConic) {
  std::mt19937_64 g(2);
  int tested = 0;
  for (auto& f : random_frames(100)) {
    Vec3<L> p = rand_vec(g);
    auto c = circumconic(p);
    if (classify(f, c).kind != ConicKind::ProperEllipse) continue;
    ++tested;
    auto sp = symmetry_points(f, c);
    for (auto& s : sp.points)
      for (auto& x : sample_conic(c, 20, E[0])) EXPECT_LT(conic_residual(c, bary_reflect(f, x, s)), 1e-8L);
  }
  EXPECT_GT(tested, 20);
}

TEST(Conics, BicevianConic) {
  std::mt19937_64 g(3);
  for (int k = 0; k < 200; ++k) {
    Vec3<L> p = rand_vec(g), q = rand_vec(g);
    auto c = bicevian_conic(p, q);
    for (auto& t : traces(p)) EXPECT_LT(conic_residual(c, t), 1e-12L);
    for (auto& t : traces(q)) EXPECT_LT(conic_residual(c, t), 1e-12L);
    // the displayed companion point is the pole of P v Q
    EXPECT_LT(gap(bicevian_perspector(p, q), pole(cross(p, q), c)), 1e-9L);
  }
  try {
    bicevian_conic(Vec3<L>{1, 1, 1}, Vec3<L>{2, 2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateInput);
  }
  for (auto& f : random_frames(100)) {
    Vec3<L> h = center(CenterId::H, f), gp = center(CenterId::Gplus, f);
    EXPECT_LT(gap(bicevian_perspector(h, gp), bary_dual_line(f, central_line(LineId::Orthoaxis, f))), 1e-10L);
  }
}

TEST(Conics, CircumcevianConjugates) {
  std::mt19937_64 g(4);
  std::uniform_real_distribution<L> u(0.2L, 1);
  for (auto& f : random_frames(100)) {
    Vec3<L> p{u(g), u(g), u(g)};
    auto tp = traces(p);
    auto cs = circumcevian_conjugates(f, p);
    auto oc = oracle::circumcenter(amb(f, tp[0]), amb(f, tp[1]), amb(f, tp[2]));
    L best = 1;
    for (int i = 0; i < 4; ++i) {
      auto& c = cs[i];
      for (auto& t : tp) EXPECT_NEAR(double(bary_distance(f, c.center, t)), double(c.radius), 1e-9);
      for (auto& t : traces(c.conjugate)) EXPECT_NEAR(double(bary_distance(f, c.center, t)), double(c.radius), 1e-9);
      best = std::min(best, oracle::gap(amb(f, c.center), oc));
    }
    EXPECT_LT(best, 1e-9L);
  }
}

TEST(Conics, LemoineConic) {
  for (auto& f : random_frames(100)) {
    auto lp = lemoine_points(f);
    auto c = lemoine_conic(f);
    for (auto& x : lp.six) EXPECT_LT(conic_residual(c, x), 1e-10L);
    Vec3<L> ok = bary_join(center(CenterId::O, f), center(CenterId::K, f));
    // K v O is a symmetry line: reflection in its dual point preserves the conic
    Vec3<L> s = bary_dual_line(f, ok);
    for (auto& x : lp.six) EXPECT_LT(conic_residual(c, bary_reflect(f, x, s)), 1e-8L);
    Vec3<L> kd = bary_dual_point(f, center(CenterId::Ktilde, f));
    EXPECT_LT(bary_incidence(f, ok, pole(kd, c)), 1e-9L);
  }
}

TEST(Conics, ApollonianCircles) {
  for (auto& f : random_frames(100)) {
    auto cs = apollonian_circles(f);
    Vec3<L> la = central_line(LineId::LemoineAxis, f);
    for (auto& c : cs) EXPECT_LT(bary_incidence(f, la, c.center), 1e-12L);
    auto [tp, tm] = apollonian_common_points(f);
    Vec3<L> ok = bary_join(center(CenterId::O, f), center(CenterId::K, f));
    for (auto& t : {tp, tm}) {
      EXPECT_LT(bary_incidence(f, ok, t), 1e-9L);
      for (auto& c : cs) EXPECT_LT(conic_residual(to_conic(f, c), t), 1e-9L);
    }
    // along O v K the power ratios of the three circles agree
    Vec3<L> o = center(CenterId::O, f), k = center(CenterId::K, f);
    for (int s = 0; s < 10; ++s) {
      Vec3<L> x = o + (L(s) / 3 - 1) * k / star_norm(f, k) * star_norm(f, o);
      L r0 = circle_power_ratio(f, x, cs[0]), r1 = circle_power_ratio(f, x, cs[1]), r2 = circle_power_ratio(f, x, cs[2]);
      EXPECT_NEAR(double(r0), double(r1), 1e-8 * double(r0));
      EXPECT_NEAR(double(r0), double(r2), 1e-8 * double(r0));
    }
  }
}

TEST(Cubics, EulerFeuerbachThroughTraces) {
  for (auto& f : random_frames(200)) {
    auto q = euler_feuerbach_cubic(f);
    for (auto& t : traces(center(CenterId::Hminus, f))) EXPECT_LT(cubic_residual(q, t), 1e-9L);
    for (int i = 0; i < 4; ++i)
      for (auto& t : traces(center(CenterId::G, f, i))) EXPECT_LT(cubic_residual(q, t), 1e-9L);
  }
}

TEST(Cubics, SimsonLocusIncidences) {
  for (auto& f : random_frames(200)) {
    auto q = simson_locus(f);
    for (auto& d : dual_triple(f)) EXPECT_LT(cubic_residual(q, d), 1e-10L);
    for (auto& x : simson_extra_points(f)) EXPECT_LT(cubic_residual(q, x), 1e-10L);
  }
}

TEST(Cubics, PrintedExtraPointsWithCosinesMissTheLocus) {
  L worst = 0;
  for (auto& f : random_frames(200)) {
    auto q = simson_locus(f);
    Vec3<L> x{-f.SB * f.SC, f.cb * f.cb * f.SB, f.cc * f.cc * f.SC};
    worst = std::max(worst, cubic_residual(q, x));
  }
  EXPECT_GT(worst, 1e-3L);
}

TEST(Cubics, SimsonLinesAndTheirTripoles) {
  int on = 0;
  for (auto& f : random_frames(50)) {
    auto q = simson_locus(f);
    auto tc = simson_cubic(f);
    for (auto& x : cubic_points_on_line(q, Vec3<L>{1, 2, -0.5L}, Vec3<L>{-0.3L, 1, 2})) {
      if (std::min({std::abs(x[0]), std::abs(x[1]), std::abs(x[2])}) < 1e-6L) continue;
      auto pd = pedal_triple(f, x);
      EXPECT_LT(det_residual(pd[0], pd[1], pd[2]), 1e-10L);
      Vec3<L> sl = cross(pd[0], pd[1]);
      if (std::min({std::abs(sl[0]), std::abs(sl[1]), std::abs(sl[2])}) < 1e-8L * max_abs(sl)) continue;
      EXPECT_LT(cubic_residual(tc, tripole(sl)), 1e-9L);
      ++on;
    }
  }
  EXPECT_GT(on, 30);
}

TEST(Cubics, EulerFeuerbachAgreesWithPencilCubicExceptCentralTerm) {
  for (auto& f : random_frames(50)) {
    auto ef = euler_feuerbach_cubic(f);
    auto pc = pencil_cubic(f, center(CenterId::Hminus, f));
    // scale both on the x1^2 x2 coefficient
    int ref = cubic_index(0, 0, 1);
    L se = ef.c[ref], sp = pc.c[ref];
    int mid = cubic_index(0, 1, 2);
    for (int k = 0; k < 10; ++k) {
      if (k == mid) continue;
      EXPECT_NEAR(double(ef.c[k] / se), double(pc.c[k] / sp), 1e-8) << cubic_monomial_names[k];
    }
    EXPECT_GT(std::abs(ef.c[mid] / se - pc.c[mid] / sp), 1e-6L);
  }
}

TEST(Cubics, MonomialOrder) {
  const char* want[10] = {"x1^3", "x1^2x2", "x1^2x3", "x1x2^2", "x1x2x3", "x1x3^2", "x2^3", "x2^2x3", "x2x3^2", "x3^3"};
  for (int k = 0; k < 10; ++k) EXPECT_STREQ(cubic_monomial_names[k], want[k]);
}
