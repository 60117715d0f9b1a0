#pragma once

#include <cmath>
#include <utility>

#include "projective.hpp"

namespace ek {

enum class Branch { Plus, Minus };

// Distance in [0, pi/2]; atan2 form of arccos|P.Q| on unit representatives.
template <class T>
inline T distance(const Vec3<T>& p, const Vec3<T>& q) {
  Vec3<T> u = unit(p), w = unit(q);
  return std::atan2(norm(cross(u, w)), std::abs(dot(u, w)));
}

template <class T>
inline T distance(const Point<T>& p, const Point<T>& q) {
  return distance(p.v, q.v);
}

// Measure of [P,Q]+ in [0, pi) for canonical representatives; [P,Q]- is its complement.
template <class T>
inline T segment_measure(const Point<T>& p, const Point<T>& q, Branch br = Branch::Plus) {
  Vec3<T> u = canonical(p), w = canonical(q);
  T m = std::atan2(norm(cross(u, w)), dot(u, w));
  return br == Branch::Plus ? m : pi_v<T> - m;
}

template <class T>
inline std::pair<Point<T>, Point<T>> midpoints(const Point<T>& p, const Point<T>& q) {
  if (same(p.v, q.v)) fail(ErrorKind::DegenerateInput, "midpoints of equal points");
  Vec3<T> u = canonical(p), w = canonical(q);
  return {Point<T>{u + w}, Point<T>{u - w}};
}

// Angle measure at S of the angle QSR; the minus branch is the supplement.
template <class T>
inline T angle_measure(const Point<T>& q, const Point<T>& s, const Point<T>& r, Branch br = Branch::Plus) {
  if (same(s.v, q.v) || same(s.v, r.v)) fail(ErrorKind::DegenerateInput, "vertex coincides with a leg point");
  Vec3<T> sc = canonical(s);
  Vec3<T> u = cross(sc, canonical(q)), w = cross(sc, canonical(r));
  T m = std::atan2(norm(cross(u, w)), dot(u, w));
  return br == Branch::Plus ? m : pi_v<T> - m;
}

template <class T>
inline Line<T> perp(const Line<T>& l, const Point<T>& p) {
  if (same(p.v, l.v)) fail(ErrorKind::PoleInput, "point is the pole of the line");
  return {cross(p.v, l.v)};
}

template <class T>
inline Point<T> pedal(const Line<T>& l, const Point<T>& p) {
  return {cross(l.v, perp(l, p).v)};
}

template <class T>
inline Line<T> par(const Line<T>& l, const Point<T>& p) {
  return perp(perp(l, p), p);
}

// Perpendicular bisectors of [P,Q]+ and [P,Q]-.
template <class T>
inline std::pair<Line<T>, Line<T>> perp_bisectors(const Point<T>& p, const Point<T>& q) {
  auto [m1, m2] = midpoints(p, q);
  Vec3<T> pole = cross(p.v, q.v);
  return {Line<T>{cross(m1.v, pole)}, Line<T>{cross(m2.v, pole)}};
}

// Mirror image of P in S: q = 2 (p.s) s - |s|^2 p.
template <class T>
inline Point<T> reflect_point(const Point<T>& p, const Point<T>& s) {
  const Vec3<T>& a = p.v;
  const Vec3<T>& m = s.v;
  T ps = dot(a, m), ss = dot(m, m);
  return {Vec3<T>{2 * ps * m[0] - ss * a[0], 2 * ps * m[1] - ss * a[1], 2 * ps * m[2] - ss * a[2]}};
}

template <class T = double>
struct AmbientCircle {
  Point<T> center;
  T cosradius;
  T radius() const { return std::acos(std::clamp(cosradius, T(0), T(1))); }
};

template <class T>
inline AmbientCircle<T> circle_through(const Point<T>& m, const Point<T>& p) {
  Vec3<T> mc = canonical(m), pc = canonical(p);
  return {Point<T>{mc}, std::min(T(1), std::abs(dot(mc, pc)))};
}

// Residual of the circle equation (X.M)^2 = cos^2 r |X|^2 |M|^2, on unit representatives.
template <class T>
inline T circle_residual(const Point<T>& x, const AmbientCircle<T>& c) {
  Vec3<T> u = unit(x.v), m = unit(c.center.v);
  T xm = dot(u, m);
  return std::abs(xm * xm - c.cosradius * c.cosradius);
}

template <class T>
inline bool on_circle(const Point<T>& x, const AmbientCircle<T>& c, T tol = T(1e-10)) {
  return circle_residual(x, c) < tol;
}

// Tangent length t from cos d(P,M) = cos r cos t.
template <class T>
inline T tangent_length(const Point<T>& p, const AmbientCircle<T>& c) {
  T cd = std::abs(dot(unit(p.v), unit(c.center.v)));
  T cr = c.cosradius;
  if (!(cr > 0) || cd > cr * (1 + T(1e-12)))
    fail(ErrorKind::OutsideDomain, "tangent length undefined: point inside the circle or radius pi/2");
  return std::acos(std::clamp(cd / cr, T(-1), T(1)));
}

// Splits a rank-2 symmetric form g h^T + h g^T into its two lines.
template <class T>
inline std::pair<Vec3<T>, Vec3<T>> split_degenerate(const Mat3<T>& q) {
  Mat3<T> b = adjugate(q);
  int i = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(b[k][k]) > std::abs(b[i][i])) i = k;
  if (b[i][i] > 0) {
    T f = frob(b);
    if (b[i][i] > T(1e-9) * f) fail(ErrorKind::DegenerateConic, "form splits into complex lines");
  }
  T beta = std::sqrt(std::max(T(0), -b[i][i]));
  if (beta == 0) fail(ErrorKind::DegenerateConic, "double line has no splitting");
  Vec3<T> p = col(b, i) / beta;
  Mat3<T> c = q;
  c[0][1] += p[2];
  c[0][2] -= p[1];
  c[1][0] -= p[2];
  c[1][2] += p[0];
  c[2][0] += p[1];
  c[2][1] -= p[0];
  int bi = 0, bj = 0;
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s)
      if (std::abs(c[r][s]) > std::abs(c[bi][bj])) {
        bi = r;
        bj = s;
      }
  return {c[bi], col(c, bj)};
}

// Both lines of the degenerate pencil member of the normalized circle forms
// M M^T / cos^2 r - I. The second line of the pair is the one the centers'
// same-sign representatives pick out.
template <class T>
inline std::pair<Line<T>, Line<T>> radical_axes(const AmbientCircle<T>& c1, const AmbientCircle<T>& c2) {
  Vec3<T> m1 = canonical(c1.center), m2 = canonical(c2.center);
  if (same(m1, m2)) fail(ErrorKind::ConcentricCircles, "circles share their center");
  if (!(c1.cosradius > 0) || !(c2.cosradius > 0)) fail(ErrorKind::OutsideDomain, "radius pi/2");
  if (dot(m1, m2) < 0) m2 = -m2;
  auto nform = [](const Vec3<T>& m, T cr) {
    Mat3<T> f = outer(m, m);
    for (auto& rw : f)
      for (auto& x : rw) x /= cr * cr;
    for (int i = 0; i < 3; ++i) f[i][i] -= 1;
    return f;
  };
  Mat3<T> n1 = nform(m1, c1.cosradius), n2 = nform(m2, c2.cosradius);
  // det(x n1 - n2) as a cubic in x, sampled at four nodes and interpolated.
  auto dx = [&](T x) { return det(x * n1 - n2); };
  T f0 = dx(0), f1 = dx(1), fm = dx(-1), f2 = dx(2);
  T d3 = (f2 - 3 * f1 + 3 * f0 - fm) / 6;
  T d2 = (f1 + fm) / 2 - f0;
  T d1 = (f1 - fm) / 2 - d3;
  T lam = 1;
  if (d3 != 0) {
    auto r = solve_monic_cubic(d2 / d3, d1 / d3, f0 / d3);
    T best = r.roots.front();
    for (T x : r.roots)
      if (std::abs(x - 1) < std::abs(best - 1)) best = x;
    lam = best;
  }
  auto [g, h] = split_degenerate(lam * n1 - n2);
  Vec3<T> expect = m1 / c1.cosradius - m2 / c2.cosradius;
  if (proj_gap(g, expect) < proj_gap(h, expect)) std::swap(g, h);
  return {Line<T>{g}, Line<T>{h}};
}

template <class T>
inline Line<T> radical_axis(const AmbientCircle<T>& c1, const AmbientCircle<T>& c2) {
  return radical_axes(c1, c2).second;
}

}  // namespace ek
