#pragma once

#include <array>
#include <vector>

#include "conics.hpp"

namespace ek {

// Homogeneous cubic; coefficients in lexicographic monomial order
// x1^3, x1^2x2, x1^2x3, x1x2^2, x1x2x3, x1x3^2, x2^3, x2^2x3, x2x3^2, x3^3.
template <class T = double>
struct Cubic {
  std::array<T, 10> c{};
};

inline constexpr std::array<std::array<int, 3>, 10> cubic_exponents = {{{3, 0, 0},
                                                                        {2, 1, 0},
                                                                        {2, 0, 1},
                                                                        {1, 2, 0},
                                                                        {1, 1, 1},
                                                                        {1, 0, 2},
                                                                        {0, 3, 0},
                                                                        {0, 2, 1},
                                                                        {0, 1, 2},
                                                                        {0, 0, 3}}};

inline constexpr const char* cubic_monomial_names[10] = {"x1^3",   "x1^2x2", "x1^2x3", "x1x2^2", "x1x2x3",
                                                         "x1x3^2", "x2^3",   "x2^2x3", "x2x3^2", "x3^3"};

// Index of the monomial x_i x_j x_k (indices 0..2, any order).
inline int cubic_index(int i, int j, int k) {
  int e[3] = {0, 0, 0};
  ++e[i];
  ++e[j];
  ++e[k];
  for (int n = 0; n < 10; ++n)
    if (cubic_exponents[n][0] == e[0] && cubic_exponents[n][1] == e[1] && cubic_exponents[n][2] == e[2]) return n;
  return -1;
}

template <class T>
inline std::array<T, 10> cubic_monomials(const Vec3<T>& x) {
  std::array<T, 10> m;
  for (int n = 0; n < 10; ++n) {
    T v = 1;
    for (int k = 0; k < 3; ++k)
      for (int e = 0; e < cubic_exponents[n][k]; ++e) v *= x[k];
    m[n] = v;
  }
  return m;
}

template <class T>
inline T cubic_eval(const Cubic<T>& q, const Vec3<T>& x) {
  auto m = cubic_monomials(x);
  T s = 0;
  for (int n = 0; n < 10; ++n) s += q.c[n] * m[n];
  return s;
}

template <class T>
inline T cubic_norm(const Cubic<T>& q) {
  T s = 0;
  for (T x : q.c) s += x * x;
  return std::sqrt(s);
}

// |f(x)| relative to the coefficient norm, for unit x.
template <class T>
inline T cubic_residual(const Cubic<T>& q, const Vec3<T>& x) {
  return std::abs(cubic_eval(q, unit(x))) / cubic_norm(q);
}

// g(x) = f(N x).
template <class T>
inline Cubic<T> compose(const Cubic<T>& q, const Mat3<T>& n) {
  Cubic<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int k = j; k < 3; ++k) {
        T co = q.c[cubic_index(i, j, k)];
        if (co == 0) continue;
        for (int p = 0; p < 3; ++p)
          for (int s = 0; s < 3; ++s)
            for (int t = 0; t < 3; ++t) r.c[cubic_index(p, s, t)] += co * n[i][p] * n[j][s] * n[k][t];
      }
  return r;
}

// Locus of points having a Simson line, for a triangle with side cosines
// (ca, cb, cc).
template <class T>
inline Cubic<T> simson_locus_from_cosines(T ca, T cb, T cc) {
  T sa2 = 1 - ca * ca, sb2 = 1 - cb * cb, sc2 = 1 - cc * cc;
  Cubic<T> q;
  q.c[cubic_index(0, 1, 1)] = ca * sc2;
  q.c[cubic_index(0, 2, 2)] = ca * sb2;
  q.c[cubic_index(1, 2, 2)] = cb * sa2;
  q.c[cubic_index(0, 0, 1)] = cb * sc2;
  q.c[cubic_index(0, 0, 2)] = cc * sb2;
  q.c[cubic_index(1, 1, 2)] = cc * sa2;
  q.c[cubic_index(0, 1, 2)] = 2 * (1 - ca * cb * cc);
  return q;
}

template <class T>
inline Cubic<T> simson_locus(const Frame<T>& f) {
  return simson_locus_from_cosines(f.ca, f.cb, f.cc);
}

// Locus of tripoles of the Simson lines.
template <class T>
inline Cubic<T> simson_cubic(const Frame<T>& f) {
  Cubic<T> q;
  q.c[cubic_index(0, 1, 1)] = f.SA;
  q.c[cubic_index(0, 2, 2)] = f.SA;
  q.c[cubic_index(1, 2, 2)] = f.SB;
  q.c[cubic_index(0, 0, 1)] = f.SB;
  q.c[cubic_index(0, 0, 2)] = f.SC;
  q.c[cubic_index(1, 1, 2)] = f.SC;
  q.c[cubic_index(0, 1, 2)] = -2 * (1 - f.ca * f.cb * f.cc);
  return q;
}

// Points [-S_B S_C : s_b^2 S_B : s_c^2 S_C] and cyclic on the Simson locus.
template <class T>
inline Triple<T> simson_extra_points(const Frame<T>& f) {
  T sa2 = f.sa * f.sa, sb2 = f.sb * f.sb, sc2 = f.sc * f.sc;
  return {Vec3<T>{-f.SB * f.SC, sb2 * f.SB, sc2 * f.SC}, Vec3<T>{sa2 * f.SA, -f.SC * f.SA, sc2 * f.SC},
          Vec3<T>{sa2 * f.SA, sb2 * f.SB, -f.SA * f.SB}};
}

// Simson locus of the medial triangle, written in barycentrics of the frame.
template <class T>
inline Cubic<T> euler_feuerbach_cubic(const Frame<T>& f) {
  T na = std::sqrt(2 + 2 * f.ca), nb = std::sqrt(2 + 2 * f.cb), nc = std::sqrt(2 + 2 * f.cc);
  if (na == 0 || nb == 0 || nc == 0) fail(ErrorKind::ConstructionDegenerate, "medial vertex undefined");
  T g = 1 + f.ca + f.cb + f.cc;
  Cubic<T> m = simson_locus_from_cosines(g / (nb * nc), g / (nc * na), g / (na * nb));
  // columns: medial vertices in frame barycentrics
  Mat3<T> n{{{0, 1 / nb, 1 / nc}, {1 / na, 0, 1 / nc}, {1 / na, 1 / nb, 0}}};
  return compose(m, adjugate(n));
}

// Cubic through nine points (null vector of the monomial matrix).
template <class T>
inline Cubic<T> cubic_through(const std::array<Vec3<T>, 9>& pts) {
  std::vector<std::vector<long double>> a;
  for (auto& p : pts) {
    auto m = cubic_monomials(unit(p));
    a.emplace_back(m.begin(), m.end());
  }
  auto v = dense_null_vector(a);
  long double n = 0;
  for (auto x : v) n += x * x;
  if (!(n > 0.5)) fail(ErrorKind::ConstructionDegenerate, "nine points do not determine a cubic");
  Cubic<T> q;
  for (int k = 0; k < 10; ++k) q.c[k] = T(v[k]);
  return q;
}

// Cubic carrying the symmetry points of the circumconics through p. The
// traces of p and of G_0..G_3 leave a pencil of cubics (x1x2x3 is one of
// them), so the fit also takes the symmetry points of two reference members.
template <class T>
inline Vec3<T> pencil_normal(const Vec3<T>& p) {
  return {p[1] * p[2], p[2] * p[0], p[0] * p[1]};
}

template <class T>
inline Conic<T> pencil_member(const Vec3<T>& p, T theta) {
  Vec3<T> n = pencil_normal(p);
  Vec3<T> e{1, 0, 0};
  if (std::abs(unit(n)[0]) > T(0.6)) e = {0, 1, 0};
  Vec3<T> u = unit(cross(n, e)), v = unit(cross(n, u));
  Vec3<T> q = std::cos(theta) * u + std::sin(theta) * v;
  return {symmetric(T(0), T(0), T(0), q[0] / 2, q[1] / 2, q[2] / 2)};
}

template <class T>
inline Cubic<T> pencil_cubic(const Frame<T>& f, const Vec3<T>& p) {
  require_off_sidelines(p);
  auto t = traces(p);
  std::vector<Vec3<T>> pts{t[0], t[1], t[2], Vec3<T>{0, 1, 1}, Vec3<T>{0, 1, -1}, Vec3<T>{1, 0, 1},
                           Vec3<T>{1, 0, -1}, Vec3<T>{1, 1, 0}, Vec3<T>{1, -1, 0}};
  for (T th : {T(0.25), T(1.9)}) {
    auto c = pencil_member(p, th);
    if (classify(f, c).kind == ConicKind::LinePair) continue;
    for (auto& x : symmetry_points(f, c).points) pts.push_back(x);
  }
  std::vector<std::vector<long double>> a;
  for (auto& x : pts) {
    auto m = cubic_monomials(unit(x));
    a.emplace_back(m.begin(), m.end());
  }
  auto v = dense_least_singular(a);
  Cubic<T> q;
  for (int k = 0; k < 10; ++k) q.c[k] = T(v[k]);
  return q;
}

// Real points of the cubic on the line through x and y, found by bracketing
// sign changes of f(cos t x + sin t y) over t in [0, pi) and bisecting.
template <class T>
inline std::vector<Vec3<T>> cubic_points_on_line(const Cubic<T>& q, const Vec3<T>& x, const Vec3<T>& y,
                                                 int grid = 96) {
  Vec3<T> u = unit(x), w = unit(y - dot(y, u) * u);
  if (is_zero(w)) fail(ErrorKind::DegenerateInput, "points span no line");
  w = unit(w);
  auto g = [&](T t) { return cubic_eval(q, std::cos(t) * u + std::sin(t) * w); };
  std::vector<Vec3<T>> out;
  const T step = pi_v<T> / grid;
  T t0 = 0, g0 = g(t0);
  for (int k = 1; k <= grid; ++k) {
    // f is odd under t -> t + pi, so the last cell closes against -f(0)
    T t1 = k * step, g1 = k == grid ? -g(0) : g(t1);
    if (g0 == 0) {
      out.push_back(std::cos(t0) * u + std::sin(t0) * w);
    } else if ((g0 < 0) != (g1 < 0) && g1 != 0) {
      T lo = t0, hi = t1, glo = g0;
      for (int it = 0; it < 200 && hi - lo > std::numeric_limits<T>::epsilon() * 4; ++it) {
        T mid = (lo + hi) / 2, gm = g(mid);
        if ((gm < 0) == (glo < 0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      T t = (lo + hi) / 2;
      out.push_back(std::cos(t) * u + std::sin(t) * w);
    }
    t0 = t1;
    g0 = g1;
  }
  return out;
}

}  // namespace ek
