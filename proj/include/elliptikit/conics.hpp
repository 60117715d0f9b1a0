#pragma once

#include <string>
#include <vector>

#include "centers.hpp"

namespace ek {

// Conic x M x = 0 in barycentric coordinates of a frame.
template <class T = double>
struct Conic {
  Mat3<T> m;
};

enum class ConicKind { LinePair, Circle, ProperEllipse, Imaginary };

inline const char* conic_kind_name(ConicKind k) {
  switch (k) {
    case ConicKind::LinePair: return "two lines";
    case ConicKind::Circle: return "circle";
    case ConicKind::ProperEllipse: return "proper ellipse";
    case ConicKind::Imaginary: return "imaginary";
  }
  return "?";
}

template <class T>
inline T conic_residual(const Conic<T>& c, const Vec3<T>& x) {
  T n = dot(x, x);
  return std::abs(quad(x, c.m, x)) / (frob(c.m) * n);
}

template <class T>
inline Mat3<T> adjoint(const Mat3<T>& m) {
  return adjugate(m);
}

template <class T>
inline Vec3<T> polar(const Vec3<T>& p, const Conic<T>& c) {
  return p * c.m;
}

template <class T>
inline Vec3<T> pole(const Vec3<T>& l, const Conic<T>& c) {
  Mat3<T> a = adjugate(c.m);
  T f = frob(c.m);
  if (frob(a) <= T(1e-12) * f * f) fail(ErrorKind::RankDeficient, "conic matrix has rank below 2");
  Vec3<T> r = l * a;
  if (is_zero(r)) fail(ErrorKind::RankDeficient, "line has no pole");
  return r;
}

template <class T>
inline Vec3<T> conic_perspector(const Conic<T>& c) {
  const auto& m = c.m;
  if (m[0][1] == 0 && m[0][2] == 0 && m[1][2] == 0) fail(ErrorKind::DiagonalMatrix, "perspector needs a non-diagonal matrix");
  T d1 = m[0][0] * m[1][2] - m[2][0] * m[0][1];
  T d2 = m[1][1] * m[2][0] - m[0][1] * m[1][2];
  T d3 = m[2][2] * m[0][1] - m[1][2] * m[2][0];
  if (d1 == 0 || d2 == 0 || d3 == 0) fail(ErrorKind::DegenerateConic, "perspector coordinate is infinite");
  return {1 / d1, 1 / d2, 1 / d3};
}

template <class T>
inline Conic<T> circumconic(const Vec3<T>& p) {
  require_off_sidelines(p);
  return {symmetric(T(0), T(0), T(0), p[0] / 2, p[1] / 2, p[2] / 2)};
}

template <class T>
inline Conic<T> inconic(const Vec3<T>& p) {
  require_off_sidelines(p);
  return {symmetric(1 / (p[0] * p[0]), 1 / (p[1] * p[1]), 1 / (p[2] * p[2]), -1 / (p[1] * p[2]), -1 / (p[2] * p[0]),
                    -1 / (p[0] * p[1]))};
}

// Perspector of the circumconic with center m.
template <class T>
inline Vec3<T> circumconic_center_to_perspector(const Frame<T>& f, const Vec3<T>& m) {
  require_off_sidelines(m);
  const T m1 = m[0], m2 = m[1], m3 = m[2];
  return {m1 * (2 * m2 * m3 * f.ca - m1 * m1 + m2 * m2 + m3 * m3), m2 * (2 * m3 * m1 * f.cb + m1 * m1 - m2 * m2 + m3 * m3),
          m3 * (2 * m1 * m2 * f.cc + m1 * m1 + m2 * m2 - m3 * m3)};
}

// Circle with barycentric center m and radius arccos(cosr).
template <class T>
inline Conic<T> circle_conic(const Frame<T>& f, const Vec3<T>& m, T cosr) {
  Vec3<T> w = f.Tm * m;
  Mat3<T> r = outer(w, w) - (cosr * cosr * quad(m, f.Tm, m)) * f.Tm;
  return {r};
}

template <class T>
inline Conic<T> circumcircle(const Frame<T>& f) {
  return circumconic(center(CenterId::Ktilde, f));
}

template <class T>
inline Conic<T> incircle(const Frame<T>& f) {
  return inconic(center(CenterId::Ge, f));
}

// Incircle of triangle i (the excircles of the base triangle for i > 0).
template <class T>
inline Conic<T> incircle_of(const Frame<T>& f, int i) {
  return circle_conic(f, center(CenterId::I, f, i), inradius_cos(f, i));
}

template <class T>
inline Conic<T> bicevian_conic(const Vec3<T>& p, const Vec3<T>& q) {
  require_off_sidelines(p);
  require_off_sidelines(q);
  if (same(p, q)) fail(ErrorKind::DegenerateInput, "bicevian conic needs two distinct points");
  Mat3<T> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i][j] = i == j ? 2 / (p[i] * q[i]) : -(1 / (p[i] * q[j]) + 1 / (p[j] * q[i]));
  return {m};
}

// Displayed companion point of the bicevian conic; it is the pole of P v Q.
template <class T>
inline Vec3<T> bicevian_perspector(const Vec3<T>& p, const Vec3<T>& q) {
  return {p[0] * q[0] * (p[1] * q[2] - p[2] * q[1]), p[1] * q[1] * (p[2] * q[0] - p[0] * q[2]),
          p[2] * q[2] * (p[0] * q[1] - p[1] * q[0])};
}

struct ConicClass {
  ConicKind kind;
  double mu = 0;  // double generalized eigenvalue for circles
};

template <class T>
struct CircleData {
  Vec3<T> center;
  T cosradius;
  T radius() const { return std::acos(std::clamp(cosradius, T(0), T(1))); }
};

namespace detail {

template <class T>
inline T rank1_defect(const Mat3<T>& n) {
  T f = frob(n);
  if (f == 0) return 0;
  return frob(adjugate(n)) / (f * f);
}

// Candidate double roots of det(M - mu T): critical points of the
// characteristic polynomial of T^-1 M.
template <class T>
inline std::optional<T> circle_mu(const Frame<T>& f, const Mat3<T>& m, T tol) {
  Mat3<T> e = f.inverse() * m;
  T a = 3, b = -2 * trace(e), c = principal_minor_sum(e);
  T disc = b * b - 4 * a * c;
  std::vector<T> cand;
  T sd = std::sqrt(std::max(disc, T(0)));
  cand.push_back((-b + sd) / (2 * a));
  cand.push_back((-b - sd) / (2 * a));
  std::optional<T> best;
  T bd = tol;
  for (T mu : cand) {
    T d = rank1_defect(m - mu * f.Tm);
    if (d < bd) {
      bd = d;
      best = mu;
    }
  }
  return best;
}

}  // namespace detail

template <class T>
inline ConicClass classify(const Frame<T>& f, const Conic<T>& c) {
  const Mat3<T>& m = c.m;
  T fm = frob(m);
  if (fm == 0) fail(ErrorKind::DegenerateConic, "zero conic matrix");
  // circles first: those with radius near pi/2 are nearly double lines
  if (detail::rank1_defect(m) < T(1e-8)) return {ConicKind::Circle, 0.0};
  auto ev = eigen3(f.inverse() * m);
  bool definite = !ev.complex_pair && (ev.values.front() > 0 || ev.values.back() < 0);
  if (auto mu = detail::circle_mu(f, m, T(1e-8)); mu && !definite) return {ConicKind::Circle, double(*mu)};
  if (std::abs(det(m)) < T(1e-12) * fm * fm * fm) return {ConicKind::LinePair, 0.0};
  if (definite) return {ConicKind::Imaginary, 0.0};
  return {ConicKind::ProperEllipse, 0.0};
}

// Center and radius of a conic classified as a circle.
template <class T>
inline CircleData<T> circle_of(const Frame<T>& f, const Conic<T>& c) {
  const Mat3<T>& m = c.m;
  T mu = 0;
  if (!(detail::rank1_defect(m) < T(1e-8))) {
    auto r = detail::circle_mu(f, m, T(1e-8));
    if (!r) fail(ErrorKind::DegenerateConic, "conic is not a circle");
    mu = *r;
  }
  Mat3<T> n = m - mu * f.Tm;
  int i = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(n[k][k]) > std::abs(n[i][i])) i = k;
  T k = n[i][i] > 0 ? T(1) : T(-1);
  Vec3<T> w = col(n, i) / std::sqrt(std::abs(n[i][i]));
  Vec3<T> ctr = f.adjT * w;
  T c2 = -mu / (k * quad(w, f.inverse(), w));
  if (c2 < T(-1e-12) || c2 > 1 + T(1e-12)) fail(ErrorKind::DegenerateConic, "circle has no real points");
  return {ctr, std::sqrt(std::clamp(c2, T(0), T(1)))};
}

template <class T>
struct SymmetryPoints {
  std::vector<Vec3<T>> points;
  std::vector<T> values;
  bool circle = false;
  Vec3<T> axis{};  // circles: every point of this line is a symmetry point
};

template <class T>
inline SymmetryPoints<T> symmetry_points(const Frame<T>& f, const Conic<T>& c) {
  auto cl = classify(f, c);
  SymmetryPoints<T> s;
  if (cl.kind == ConicKind::Circle) {
    auto cd = circle_of(f, c);
    s.circle = true;
    s.points = {cd.center};
    s.values = {T(cl.mu)};
    s.axis = bary_dual_point(f, cd.center);
    return s;
  }
  if (cl.kind == ConicKind::LinePair) fail(ErrorKind::DegenerateConic, "symmetry points of a line pair");
  auto ev = eigen3(f.adjT * c.m);
  s.values = ev.values;
  s.points = ev.vectors;
  return s;
}

// Point reflection of x in s, in barycentrics.
template <class T>
inline Vec3<T> bary_reflect(const Frame<T>& f, const Vec3<T>& x, const Vec3<T>& s) {
  return (2 * star(f, x, s)) * s - star(f, s, s) * x;
}

// A real point of an indefinite conic.
template <class T>
inline Vec3<T> conic_point(const Conic<T>& c) {
  auto ev = eigen3(c.m);
  if (ev.values.size() < 3) fail(ErrorKind::DegenerateConic, "conic has no real point");
  T lo = ev.values.front(), hi = ev.values.back();
  if (!(lo < 0 && hi > 0)) fail(ErrorKind::DegenerateConic, "definite conic has no real point");
  Vec3<T> x = std::sqrt(-lo) * ev.vectors.back() + std::sqrt(hi) * ev.vectors.front();
  return unit(x);
}

// n points on the conic: second intersections of lines through x0.
template <class T>
inline std::vector<Vec3<T>> sample_conic(const Conic<T>& c, int n, const Vec3<T>& start) {
  Vec3<T> x0 = unit(start);
  Vec3<T> e{1, 0, 0};
  if (std::abs(x0[0]) > T(0.6)) e = {0, 1, 0};
  Vec3<T> u = unit(cross(x0, e));
  Vec3<T> v = cross(x0, u);
  std::vector<Vec3<T>> out;
  for (int k = 0; k < n; ++k) {
    T th = pi_v<T> * (k + T(0.5)) / n;
    Vec3<T> y = std::cos(th) * u + std::sin(th) * v;
    T yy = quad(y, c.m, y);
    if (std::abs(yy) < T(1e-14) * frob(c.m)) continue;
    out.push_back(unit(x0 - (2 * quad(x0, c.m, y) / yy) * y));
  }
  return out;
}

template <class T>
inline std::vector<Vec3<T>> sample_conic(const Conic<T>& c, int n) {
  return sample_conic(c, n, conic_point(c));
}

// Circumcevian conjugate of p for triangle i: center of the circle through
// the traces, the conjugate point, and the radius.
template <class T>
struct CevianCircle {
  Vec3<T> center;
  Vec3<T> conjugate;
  T radius;
};

template <class T>
inline CevianCircle<T> circumcevian_conjugate(const Frame<T>& f, const Vec3<T>& p, int i) {
  require_off_sidelines(p);
  auto tr = traces(p);
  Vec3<T> t{star_norm(f, tr[0]), star_norm(f, tr[1]), star_norm(f, tr[2])};
  if (i > 0) t[i - 1] = -t[i - 1];
  Vec3<T> w{-t[0] + t[1] + t[2], t[0] - t[1] + t[2], t[0] + t[1] - t[2]};
  Vec3<T> s{w[0] / p[0], w[1] / p[1], w[2] / p[2]};
  Vec3<T> q;
  for (int k = 0; k < 3; ++k) {
    T d = (s[k] * s[k] - 4) * p[k];
    if (d == 0) fail(ErrorKind::DegenerateCevianCircle, "s_k^2 = 4: conjugate on a sideline");
    q[k] = 1 / d;
  }
  Vec3<T> m = f.adjT * s;
  if (is_zero(m)) fail(ErrorKind::DegenerateCevianCircle, "vanishing circle center");
  T r = std::acos(std::clamp(2 * f.S2 / star_norm(f, m), T(-1), T(1)));
  return {m, q, r};
}

template <class T>
inline std::array<CevianCircle<T>, 4> circumcevian_conjugates(const Frame<T>& f, const Vec3<T>& p) {
  return {circumcevian_conjugate(f, p, 0), circumcevian_conjugate(f, p, 1), circumcevian_conjugate(f, p, 2),
          circumcevian_conjugate(f, p, 3)};
}

// Conic through five points (monomials x1^2, x2^2, x3^2, x2x3, x3x1, x1x2).
template <class T>
inline std::array<T, 6> conic_monomials(const Vec3<T>& x) {
  return {x[0] * x[0], x[1] * x[1], x[2] * x[2], x[1] * x[2], x[2] * x[0], x[0] * x[1]};
}

template <class T>
inline Conic<T> conic_through(const std::array<Vec3<T>, 5>& pts) {
  std::vector<std::vector<long double>> a;
  for (auto& p : pts) {
    auto mon = conic_monomials(unit(p));
    a.emplace_back(mon.begin(), mon.end());
  }
  auto c = dense_null_vector(a);
  long double n = 0;
  for (auto x : c) n += x * x;
  if (!(n > 0.5)) fail(ErrorKind::ConstructionDegenerate, "five points do not determine a conic");
  return {symmetric(T(c[0]), T(c[1]), T(c[2]), T(c[3] / 2), T(c[4] / 2), T(c[5] / 2))};
}

// Parallels to the sidelines through the Lemoine point and their meets with
// the other sidelines. six = P23, P32, P31, P13, P12, P21 where Pjk lies on
// the parallel to side k and on side j; P1..P3 lie on the parallel to side k
// and side k itself.
template <class T>
struct LemoinePoints {
  Triple<T> on_dual;
  std::array<Vec3<T>, 6> six;
};

template <class T>
inline LemoinePoints<T> lemoine_points(const Frame<T>& f) {
  Point<T> kt{ambient(f, center(CenterId::Ktilde, f))};
  std::array<Line<T>, 3> side{Line<T>{cross(f.B, f.C)}, Line<T>{cross(f.C, f.A)}, Line<T>{cross(f.A, f.B)}};
  std::array<Line<T>, 3> pl;
  for (int k = 0; k < 3; ++k) {
    pl[k] = par(side[k], kt);
    if (same(pl[k].v, side[k].v, T(1e-9))) fail(ErrorKind::ConstructionDegenerate, "parallel coincides with the sideline");
  }
  auto bmeet = [&](int k, int j) {
    Vec3<T> x = cross(pl[k].v, side[j].v);
    if (is_zero(x)) fail(ErrorKind::ConstructionDegenerate, "parallel meets sideline at an undefined point");
    return to_bary(f, Point<T>{unit(x)}).v;
  };
  LemoinePoints<T> r;
  for (int k = 0; k < 3; ++k) r.on_dual[k] = bmeet(k, k);
  const int pairs[6][2] = {{2, 1}, {1, 2}, {0, 2}, {2, 0}, {1, 0}, {0, 1}};
  for (int n = 0; n < 6; ++n) r.six[n] = bmeet(pairs[n][0], pairs[n][1]);
  return r;
}

template <class T>
inline Conic<T> lemoine_conic(const Frame<T>& f) {
  auto lp = lemoine_points(f);
  return conic_through<T>({lp.six[0], lp.six[1], lp.six[2], lp.six[3], lp.six[4]});
}

// The printed nu-equation of the Lemoine conic, kept as an independent
// cross-check; it disagrees with the construction.
template <class T>
inline Conic<T> lemoine_conic_display(const Frame<T>& f) {
  auto diag = [](T n1, T n2, T n3) {
    return (n1 + n2 + n3 - 2 * n2 * n3) * (n1 * (n2 + n3 - 4 * n2 * n3) + (n2 - n3) * (n2 - n3)) * n2 * n3;
  };
  auto off = [](T n1, T n2, T n3) {
    return -((n1 * n1 * n1 * n1 + n1 * n1 * n1 * (3 * (n2 + n3) - 8 * n2 * n3)) +
             n1 * n1 * (3 * (n2 * n2 + n3 * n3) + 8 * n2 * n3 - 14 * n2 * n3 * (n1 + n3) + 20 * n2 * n2 * n3 * n3) -
             n1 * (n2 + n3) * (6 * n2 * n3 * (1 + n2 + n3) - (n2 * n2 + n3 * n3)) + 2 * n2 * n3 * (n2 + n3) * (n2 + n3)) *
           n1;
  };
  T n1 = f.ua, n2 = f.ub, n3 = f.uc;
  return {symmetric(diag(n1, n2, n3), diag(n2, n3, n1), diag(n3, n1, n2), off(n1, n2, n3) / 2, off(n2, n3, n1) / 2,
                    off(n3, n1, n2) / 2)};
}

// Apollonian circles C(L_A, A), C(L_B, B), C(L_C, C).
template <class T>
inline Triple<T> apollonian_centers(const Frame<T>& f) {
  const T tol = T(1e-12);
  if (std::abs(f.ub - f.uc) < tol || std::abs(f.uc - f.ua) < tol || std::abs(f.ua - f.ub) < tol)
    fail(ErrorKind::IsoscelesDegeneracy, "apollonian circles need a scalene triangle");
  return {Vec3<T>{0, f.ub, -f.uc}, Vec3<T>{-f.ua, 0, f.uc}, Vec3<T>{f.ua, -f.ub, 0}};
}

template <class T>
inline std::array<CircleData<T>, 3> apollonian_circles(const Frame<T>& f) {
  auto c = apollonian_centers(f);
  std::array<CircleData<T>, 3> out;
  const Vec3<T> E[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int k = 0; k < 3; ++k)
    out[k] = {c[k], std::abs(star(f, c[k], E[k])) / (star_norm(f, c[k]) * star_norm(f, E[k]))};
  return out;
}

// Common points of the apollonian circles: K - t K~ with
// t = (1 + c_a + c_b + c_c)/2 +- (sqrt3/6) S.
template <class T>
inline std::pair<Vec3<T>, Vec3<T>> apollonian_common_points(const Frame<T>& f) {
  T mid = (1 + f.ca + f.cb + f.cc) / 2;
  T half = std::sqrt(T(3)) / 6 * std::sqrt(f.S2);
  auto pt = [&](T t) {
    return Vec3<T>{f.ua * (1 + f.ca - t), f.ub * (1 + f.cb - t), f.uc * (1 + f.cc - t)};
  };
  return {pt(mid + half), pt(mid - half)};
}

template <class T>
inline Conic<T> to_conic(const Frame<T>& f, const CircleData<T>& c) {
  return circle_conic(f, c.center, c.cosradius);
}

template <class T>
inline AmbientCircle<T> to_ambient(const Frame<T>& f, const CircleData<T>& c) {
  return {Point<T>{canonical(ambient(f, c.center))}, c.cosradius};
}

}  // namespace ek
