#pragma once

// Brute-force spherical oracles. Everything here works on unit vectors of S^2
// with plain arccos distances and numeric root finding; nothing is taken from
// the library's closed forms.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

using R = long double;
using V = std::array<R, 3>;

inline V add(const V& a, const V& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline V sub(const V& a, const V& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline V mul(R s, const V& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline R dot(const V& a, const V& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline V cross(const V& a, const V& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline R len(const V& a) { return std::sqrt(dot(a, a)); }
inline V unit(const V& a) { return mul(1 / len(a), a); }

// Great-circle distance on the sphere, in [0, pi].
inline R sdist(const V& p, const V& q) {
  V u = unit(p), w = unit(q);
  return std::atan2(len(cross(u, w)), dot(u, w));
}

// Elliptic distance: antipodal points are identified.
inline R edist(const V& p, const V& q) {
  R d = sdist(p, q);
  return std::min(d, std::acos(R(-1)) - d);
}

// Distance from a point to the great circle with pole n.
inline R line_dist(const V& n, const V& p) { return std::asin(std::min(R(1), std::abs(dot(unit(n), unit(p))))); }

// Orthonormal tangent basis at x.
inline std::array<V, 2> tangent_basis(const V& x) {
  V a = std::abs(x[0]) < 0.9L ? V{1, 0, 0} : V{0, 1, 0};
  V u = unit(cross(x, a));
  return {u, cross(x, u)};
}

// Two residual functions of a point on S^2 driven to zero by Newton steps in
// the tangent plane with a finite-difference Jacobian.
inline V solve_on_sphere(const std::function<std::array<R, 2>(const V&)>& fn, V x, int iters = 60) {
  x = unit(x);
  for (int it = 0; it < iters; ++it) {
    auto r = fn(x);
    if (std::abs(r[0]) + std::abs(r[1]) < 1e-17L) break;
    auto tb = tangent_basis(x);
    const R h = 1e-8L;
    std::array<std::array<R, 2>, 2> J;
    for (int k = 0; k < 2; ++k) {
      auto rp = fn(unit(add(x, mul(h, tb[k]))));
      auto rm = fn(unit(sub(x, mul(h, tb[k]))));
      J[0][k] = (rp[0] - rm[0]) / (2 * h);
      J[1][k] = (rp[1] - rm[1]) / (2 * h);
    }
    R d = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (d == 0) throw std::runtime_error("oracle: singular jacobian");
    R s = (-r[0] * J[1][1] + r[1] * J[0][1]) / d;
    R t = (-r[1] * J[0][0] + r[0] * J[1][0]) / d;
    R step = std::hypot(s, t);
    if (step > 0.3L) s *= 0.3L / step, t *= 0.3L / step;
    x = unit(add(x, add(mul(s, tb[0]), mul(t, tb[1]))));
  }
  return x;
}

// Vertex C with sphere distances b to A and a to B, on the side of A x B
// given by orientation.
inline std::array<V, 3> synthesize(R a, R b, R c) {
  V A{0, 0, 1};
  V B{std::sin(c), 0, std::cos(c)};
  auto fn = [&](const V& x) { return std::array<R, 2>{sdist(x, A) - b, sdist(x, B) - a}; };
  V guess = unit(add(add(A, B), V{0, 1, 0}));
  V C = solve_on_sphere(fn, guess);
  return {A, B, C};
}

// Point equidistant (sphere distance) from three points, started near their
// normalized sum so that it lands on the circumcenter of the small triangle.
inline V circumcenter(const V& A, const V& B, const V& C) {
  auto fn = [&](const V& x) { return std::array<R, 2>{sdist(x, A) - sdist(x, B), sdist(x, A) - sdist(x, C)}; };
  return solve_on_sphere(fn, add(add(unit(A), unit(B)), unit(C)));
}

// Point at equal distance from the three great circles through the sides,
// started at the vertex sum (inside the triangle).
inline V incenter(const V& A, const V& B, const V& C) {
  V na = cross(B, C), nb = cross(C, A), nc = cross(A, B);
  auto fn = [&](const V& x) {
    return std::array<R, 2>{line_dist(na, x) - line_dist(nb, x), line_dist(na, x) - line_dist(nc, x)};
  };
  return solve_on_sphere(fn, add(add(unit(A), unit(B)), unit(C)));
}

// Bisection for a sign change of g on [lo, hi].
inline R bisect(const std::function<R(R)>& g, R lo, R hi) {
  R glo = g(lo);
  for (int it = 0; it < 200; ++it) {
    R mid = (lo + hi) / 2;
    R gm = g(mid);
    if ((gm < 0) == (glo < 0)) lo = mid, glo = gm;
    else hi = mid;
  }
  return (lo + hi) / 2;
}

// Midpoints of P and Q: the point on the great-circle arc from P to Q (and to
// -Q) with equal sphere distance to both ends.
inline std::array<V, 2> midpoints(const V& P, const V& Q) {
  auto along = [](const V& p, const V& q) {
    V u = unit(p), w = unit(q);
    R th = sdist(u, w);
    V e = unit(sub(w, mul(dot(u, w), u)));
    auto pt = [=](R t) { return add(mul(std::cos(t), u), mul(std::sin(t), e)); };
    R t = bisect([&](R s) { return sdist(pt(s), u) - sdist(pt(s), w); }, 0, th);
    return pt(t);
  };
  return {along(P, Q), along(P, mul(-1, Q))};
}

// Foot of the perpendicular from P to the great circle with pole n: the point
// of the circle nearest to P. Coarse scan, then bisection on the derivative of
// the cosine of the distance.
inline V pedal(const V& n, const V& P) {
  V m = unit(n), p = unit(P);
  auto tb = tangent_basis(m);
  auto pt = [&](R t) { return add(mul(std::cos(t), tb[0]), mul(std::sin(t), tb[1])); };
  const int N = 720;
  const R pi = std::acos(R(-1));
  int best = 0;
  R bd = 10;
  for (int k = 0; k < N; ++k) {
    R d = sdist(pt(2 * pi * k / N), p);
    if (d < bd) bd = d, best = k;
  }
  auto slope = [&](R t) { return -std::sin(t) * dot(tb[0], p) + std::cos(t) * dot(tb[1], p); };
  return pt(bisect(slope, 2 * pi * (best - 1) / N, 2 * pi * (best + 1) / N));
}

// Homogeneous gap: sine of the angle between two lines through the origin.
inline R gap(const V& p, const V& q) { return len(cross(unit(p), unit(q))); }

}  // namespace oracle
