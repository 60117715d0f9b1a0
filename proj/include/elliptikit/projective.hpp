#pragma once

#include <cmath>
#include <limits>

#include "error.hpp"
#include "linalg.hpp"

namespace ek {

// Homogeneous point of the real projective plane, coordinates (p0:p1:p2).
template <class T = double>
struct Point {
  Vec3<T> v;
};

// Homogeneous line, coefficients (l0:l1:l2)*.
template <class T = double>
struct Line {
  Vec3<T> v;
};

template <class T>
inline bool is_zero(const Vec3<T>& v) {
  return v[0] == 0 && v[1] == 0 && v[2] == 0;
}

template <class T>
inline bool lex_positive(const Vec3<T>& v) {
  for (T x : v) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

// Unit representative with positive leading nonzero coordinate. A triple that is
// already canonical (to within a few ulps of unit norm) is returned unchanged, so
// the map is idempotent bit for bit.
template <class T>
inline Vec3<T> canonical(const Vec3<T>& v) {
  if (is_zero(v)) fail(ErrorKind::DegenerateInput, "zero homogeneous triple");
  T n = norm(v);
  if (lex_positive(v) && std::abs(n - 1) <= 4 * std::numeric_limits<T>::epsilon()) return v;
  Vec3<T> u = v / n;
  return lex_positive(u) ? u : -u;
}

template <class T>
inline Vec3<T> canonical(const Point<T>& p) {
  return canonical(p.v);
}
template <class T>
inline Vec3<T> canonical(const Line<T>& l) {
  return canonical(l.v);
}

// Sine of the angle between two triples, i.e. the scale-free distance of two
// homogeneous representatives.
template <class T>
inline T proj_gap(const Vec3<T>& p, const Vec3<T>& q) {
  T np = norm(p), nq = norm(q);
  if (np == 0 || nq == 0) return 1;
  return norm(cross(p, q)) / (np * nq);
}

template <class T>
inline bool same(const Vec3<T>& p, const Vec3<T>& q, T tol = T(1e-10)) {
  return proj_gap(p, q) < tol;
}

template <class T>
inline bool operator==(const Point<T>& p, const Point<T>& q) {
  return same(p.v, q.v);
}
template <class T>
inline bool operator==(const Line<T>& p, const Line<T>& q) {
  return same(p.v, q.v);
}

template <class T>
inline Line<T> join(const Point<T>& p, const Point<T>& q) {
  if (same(p.v, q.v)) fail(ErrorKind::DegenerateInput, "join of equal points");
  return {cross(p.v, q.v)};
}

template <class T>
inline Point<T> meet(const Line<T>& k, const Line<T>& l) {
  if (same(k.v, l.v)) fail(ErrorKind::DegenerateInput, "meet of equal lines");
  return {cross(k.v, l.v)};
}

template <class T>
inline Line<T> dual(const Point<T>& p) {
  return {p.v};
}
template <class T>
inline Point<T> dual(const Line<T>& l) {
  return {l.v};
}

// |l.p| / (|l||p|); zero exactly when p is on l.
template <class T>
inline T incidence(const Vec3<T>& l, const Vec3<T>& p) {
  T d = norm(l) * norm(p);
  return d > 0 ? std::abs(dot(l, p)) / d : 0;
}

template <class T>
inline T incidence(const Line<T>& l, const Point<T>& p) {
  return incidence(l.v, p.v);
}

template <class T>
inline T det_residual(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) {
  T d = norm(a) * norm(b) * norm(c);
  return d > 0 ? std::abs(det3(a, b, c)) / d : 0;
}

template <class T>
inline bool collinear(const Point<T>& p, const Point<T>& q, const Point<T>& r, T tol = T(1e-10)) {
  return det_residual(p.v, q.v, r.v) < tol;
}

template <class T>
inline bool concurrent(const Line<T>& k, const Line<T>& l, const Line<T>& m, T tol = T(1e-10)) {
  return det_residual(k.v, l.v, m.v) < tol;
}

// Coefficients (lambda, mu) with r = lambda p + mu q for collinear triples.
template <class T>
inline std::array<T, 2> pencil_coords(const Vec3<T>& p, const Vec3<T>& q, const Vec3<T>& r) {
  Vec3<T> pq = cross(p, q);
  T n2 = dot(pq, pq);
  return {dot(cross(r, q), pq) / n2, dot(cross(p, r), pq) / n2};
}

// (P,Q;R,S) with R = l1 P + m1 Q, S = l2 P + m2 Q on unit representatives.
template <class T>
inline T cross_ratio(const Vec3<T>& p0, const Vec3<T>& q0, const Vec3<T>& r0, const Vec3<T>& s0,
                     T tol = T(1e-8)) {
  Vec3<T> p = unit(p0), q = unit(q0), r = unit(r0), s = unit(s0);
  if (same(p, q)) fail(ErrorKind::DegenerateRange, "P = Q");
  if (det_residual(p, q, r) > tol || det_residual(p, q, s) > tol)
    fail(ErrorKind::NotCollinear, "cross ratio of non-collinear points");
  auto [l1, m1] = pencil_coords(p, q, r);
  auto [l2, m2] = pencil_coords(p, q, s);
  T den = l1 * m2;
  if (den == 0 || !std::isfinite(den) || std::abs(den) < 1e-300)
    fail(ErrorKind::DegenerateRange, "vanishing denominator in cross ratio");
  return (m1 * l2) / den;
}

template <class T>
inline T cross_ratio(const Point<T>& p, const Point<T>& q, const Point<T>& r, const Point<T>& s) {
  return cross_ratio(p.v, q.v, r.v, s.v);
}

}  // namespace ek
