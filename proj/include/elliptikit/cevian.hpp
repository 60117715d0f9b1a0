#pragma once

#include <array>

#include "frame.hpp"

namespace ek {

template <class T>
using Triple = std::array<Vec3<T>, 3>;

template <class T>
inline void require_not_vertex(const Vec3<T>& p) {
  int zeros = (p[0] == 0) + (p[1] == 0) + (p[2] == 0);
  if (zeros >= 2 || is_zero(p)) fail(ErrorKind::VertexInput, "point coincides with a vertex");
  for (int k = 0; k < 3; ++k) {
    Vec3<T> e{0, 0, 0};
    e[k] = 1;
    if (same(p, e, T(1e-14))) fail(ErrorKind::VertexInput, "point coincides with a vertex");
  }
}

template <class T>
inline void require_off_sidelines(const Vec3<T>& p) {
  if (p[0] == 0 || p[1] == 0 || p[2] == 0) fail(ErrorKind::OnSideline, "point lies on a sideline");
}

template <class T>
inline Triple<T> traces(const Vec3<T>& p) {
  require_not_vertex(p);
  return {Vec3<T>{0, p[1], p[2]}, Vec3<T>{p[0], 0, p[2]}, Vec3<T>{p[0], p[1], 0}};
}

template <class T>
inline Triple<T> harmonic_associates(const Vec3<T>& p) {
  require_not_vertex(p);
  return {Vec3<T>{-p[0], p[1], p[2]}, Vec3<T>{p[0], -p[1], p[2]}, Vec3<T>{p[0], p[1], -p[2]}};
}

// Harmonic conjugates of the traces with respect to the vertex pairs.
template <class T>
inline Triple<T> trace_conjugates(const Vec3<T>& p) {
  require_not_vertex(p);
  return {Vec3<T>{0, -p[1], p[2]}, Vec3<T>{-p[0], 0, p[2]}, Vec3<T>{p[0], -p[1], 0}};
}

template <class T>
inline Triple<T> dual_triple(const Frame<T>& f) {
  return {f.adjT[0], f.adjT[1], f.adjT[2]};
}

template <class T>
inline Triple<T> pedal_triple(const Frame<T>& f, const Vec3<T>& p) {
  T sa2 = f.sa * f.sa, sb2 = f.sb * f.sb, sc2 = f.sc * f.sc;
  Triple<T> r{Vec3<T>{0, p[0] * f.SC + p[1] * sa2, p[0] * f.SB + p[2] * sa2},
              Vec3<T>{p[1] * f.SC + p[0] * sb2, 0, p[1] * f.SA + p[2] * sb2},
              Vec3<T>{p[2] * f.SB + p[0] * sc2, p[2] * f.SA + p[1] * sc2, 0}};
  for (int k = 0; k < 3; ++k)
    if (max_abs(r[k]) <= T(1e-14) * max_abs(p)) fail(ErrorKind::PoleOfSideline, "point is the pole of a sideline");
  return r;
}

template <class T>
inline Triple<T> antipedal_triple(const Frame<T>& f, const Vec3<T>& p) {
  T sa2 = f.sa * f.sa, sb2 = f.sb * f.sb, sc2 = f.sc * f.sc;
  const T p1 = p[0], p2 = p[1], p3 = p[2];
  auto q = [&](T num, T den) {
    if (den == 0) fail(ErrorKind::PoleOfSideline, "antipedal undefined");
    return num / den;
  };
  Vec3<T> a{-1, q(p2 * f.SC + p1 * sb2, p1 * f.SC + p2 * sa2), q(p3 * f.SB + p1 * sc2, p1 * f.SB + p3 * sa2)};
  Vec3<T> b{q(p1 * f.SC + p2 * sa2, p2 * f.SC + p1 * sb2), -1, q(p3 * f.SA + p2 * sc2, p2 * f.SA + p3 * sb2)};
  Vec3<T> c{q(p1 * f.SB + p3 * sa2, p3 * f.SB + p1 * sc2), q(p2 * f.SA + p3 * sb2, p3 * f.SA + p2 * sc2), -1};
  return {a, b, c};
}

template <class T>
inline Vec3<T> tripolar(const Vec3<T>& p) {
  require_not_vertex(p);
  return {p[1] * p[2], p[2] * p[0], p[0] * p[1]};
}

template <class T>
inline Vec3<T> tripole(const Vec3<T>& l) {
  if (l[0] == 0 || l[1] == 0 || l[2] == 0)
    fail(ErrorKind::DegenerateTripole, "line through a vertex has a vertex as tripole");
  return {l[1] * l[2], l[2] * l[0], l[0] * l[1]};
}

template <class T>
inline Vec3<T> tripolar_dual(const Frame<T>& f, const Vec3<T>& p) {
  require_not_vertex(p);
  const T p1 = p[0], p2 = p[1], p3 = p[2];
  T sa2 = f.sa * f.sa, sb2 = f.sb * f.sb, sc2 = f.sc * f.sc;
  return {p1 * (p2 * f.SB + p3 * f.SC) - p2 * p3 * sa2, p2 * (p3 * f.SC + p1 * f.SA) - p3 * p1 * sb2,
          p3 * (p1 * f.SA + p2 * f.SB) - p1 * p2 * sc2};
}

template <class T>
inline Vec3<T> isoconjugate(const Vec3<T>& pole, const Vec3<T>& q) {
  require_off_sidelines(pole);
  require_not_vertex(q);
  return {pole[0] * q[1] * q[2], pole[1] * q[2] * q[0], pole[2] * q[0] * q[1]};
}

// Triangle selected among the four on a vertex triple: signed representatives
// whose positive span is the chosen triangle, and the flip index (0 = none).
template <class T>
struct TriangleSel {
  Triple<T> verts;
  int flip = 0;
};

template <class T>
inline Vec3<T> coords_in(const Triple<T>& v, const Vec3<T>& x) {
  T d = det3(v[0], v[1], v[2]);
  return {det3(x, v[1], v[2]) / d, det3(v[0], x, v[2]) / d, det3(v[0], v[1], x) / d};
}

template <class T>
inline Triple<T> flipped(Triple<T> v, int k) {
  if (k > 0) v[k - 1] = -v[k - 1];
  return v;
}

// Cevian triangle of p with respect to triangle i: the trace triangle that
// contains the marker [+-|p1| : +-|p2| : +-|p3|] (sign of slot i negated).
template <class T>
inline TriangleSel<T> cevian_triangle(const Vec3<T>& p, int i) {
  require_off_sidelines(p);
  Triple<T> t = traces(p);
  for (auto& x : t) x = lex_positive(x) ? x : -x;
  Vec3<T> m{std::abs(p[0]), std::abs(p[1]), std::abs(p[2])};
  if (i > 0) m[i - 1] = -m[i - 1];
  for (int k = 0; k < 4; ++k) {
    Triple<T> v = flipped(t, k);
    Vec3<T> x = coords_in(v, m);
    if (x[0] > 0 && x[1] > 0 && x[2] > 0) return {v, k};
  }
  for (int k = 0; k < 4; ++k) {
    Triple<T> v = flipped(t, k);
    Vec3<T> x = coords_in(v, m);
    if (x[0] < 0 && x[1] < 0 && x[2] < 0) return {{-v[0], -v[1], -v[2]}, k};
  }
  fail(ErrorKind::OnSideline, "marker point on a side of the trace triangle");
}

// Anticevian triangle with respect to triangle i: for i = 0 all of A, B, C lie
// on its sides, for i > 0 only vertex i does.
template <class T>
inline TriangleSel<T> anticevian_triangle(const Vec3<T>& p, int i) {
  require_off_sidelines(p);
  Triple<T> h = harmonic_associates(p);
  for (auto& x : h) x = lex_positive(x) ? x : -x;
  auto on_side = [](const Vec3<T>& u, const Vec3<T>& w, const Vec3<T>& x) {
    auto [l, m] = pencil_coords(u, w, x);
    return l * m > 0;
  };
  const Vec3<T> E[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int k = 0; k < 4; ++k) {
    Triple<T> v = flipped(h, k);
    // vertex A lies on side B^P C^P, and cyclically
    bool s0 = on_side(v[1], v[2], E[0]);
    bool s1 = on_side(v[2], v[0], E[1]);
    bool s2 = on_side(v[0], v[1], E[2]);
    bool want0 = i == 0 || i == 1, want1 = i == 0 || i == 2, want2 = i == 0 || i == 3;
    if (s0 == want0 && s1 == want1 && s2 == want2) return {v, k};
  }
  fail(ErrorKind::OnSideline, "no anticevian triangle matches the side pattern");
}

}  // namespace ek
