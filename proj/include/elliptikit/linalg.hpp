#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

namespace ek {

template <class T>
using Vec3 = std::array<T, 3>;
template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

template <class T>
constexpr T pi_v = std::numbers::pi_v<T>;

// Error-free transformations used for difference of products and dot products.
template <class T>
inline T diff_prod(T a, T b, T c, T d) {
  T w = c * d;
  T e = std::fma(-c, d, w);
  T f = std::fma(a, b, -w);
  return f + e;
}

template <class T>
inline void two_sum(T a, T b, T& s, T& err) {
  s = a + b;
  T bb = s - a;
  err = (a - (s - bb)) + (b - bb);
}

template <class T, std::size_t N>
inline T dot2(const std::array<T, N>& x, const std::array<T, N>& y) {
  T s = 0, c = 0;
  for (std::size_t i = 0; i < N; ++i) {
    T p = x[i] * y[i];
    T pe = std::fma(x[i], y[i], -p);
    T t, te;
    two_sum(s, p, t, te);
    s = t;
    c += te + pe;
  }
  return s + c;
}

template <class T>
inline Vec3<T> cross(const Vec3<T>& p, const Vec3<T>& q) {
  return {diff_prod(p[1], q[2], p[2], q[1]), diff_prod(p[2], q[0], p[0], q[2]),
          diff_prod(p[0], q[1], p[1], q[0])};
}

template <class T>
inline T dot(const Vec3<T>& p, const Vec3<T>& q) {
  return dot2(p, q);
}

template <class T>
inline T det3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) {
  return dot2(a, cross(b, c));
}

template <class T>
inline T norm(const Vec3<T>& p) {
  return std::hypot(p[0], p[1], p[2]);
}

template <class T>
inline T max_abs(const Vec3<T>& p) {
  return std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
}

template <class T>
inline Vec3<T> operator+(const Vec3<T>& p, const Vec3<T>& q) {
  return {p[0] + q[0], p[1] + q[1], p[2] + q[2]};
}
template <class T>
inline Vec3<T> operator-(const Vec3<T>& p, const Vec3<T>& q) {
  return {p[0] - q[0], p[1] - q[1], p[2] - q[2]};
}
template <class T>
inline Vec3<T> operator-(const Vec3<T>& p) {
  return {-p[0], -p[1], -p[2]};
}
template <class T>
inline Vec3<T> operator*(T s, const Vec3<T>& p) {
  return {s * p[0], s * p[1], s * p[2]};
}
template <class T>
inline Vec3<T> operator*(const Vec3<T>& p, T s) {
  return s * p;
}
template <class T>
inline Vec3<T> operator/(const Vec3<T>& p, T s) {
  return {p[0] / s, p[1] / s, p[2] / s};
}

// Scales to unit euclidean norm; a zero vector is returned unchanged.
template <class T>
inline Vec3<T> unit(const Vec3<T>& p) {
  T n = norm(p);
  return n > 0 ? p / n : p;
}

template <class T>
inline Vec3<T> hadamard(const Vec3<T>& p, const Vec3<T>& q) {
  return {p[0] * q[0], p[1] * q[1], p[2] * q[2]};
}

template <class T>
inline Mat3<T> identity3() {
  return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

template <class T>
inline Vec3<T> row(const Mat3<T>& m, int i) {
  return m[i];
}
template <class T>
inline Vec3<T> col(const Mat3<T>& m, int j) {
  return {m[0][j], m[1][j], m[2][j]};
}

template <class T>
inline Mat3<T> transpose(const Mat3<T>& m) {
  Mat3<T> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

template <class T>
inline Mat3<T> operator*(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = dot2(a[i], col(b, j));
  return r;
}

template <class T>
inline Mat3<T> operator*(T s, const Mat3<T>& a) {
  Mat3<T> r = a;
  for (auto& rw : r)
    for (auto& x : rw) x *= s;
  return r;
}

template <class T>
inline Mat3<T> operator+(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

template <class T>
inline Mat3<T> operator-(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

// Matrix times column vector.
template <class T>
inline Vec3<T> operator*(const Mat3<T>& m, const Vec3<T>& v) {
  return {dot2(m[0], v), dot2(m[1], v), dot2(m[2], v)};
}

// Row vector times matrix.
template <class T>
inline Vec3<T> operator*(const Vec3<T>& v, const Mat3<T>& m) {
  return {dot2(v, col(m, 0)), dot2(v, col(m, 1)), dot2(v, col(m, 2))};
}

template <class T>
inline T quad(const Vec3<T>& x, const Mat3<T>& m, const Vec3<T>& y) {
  return dot2(x, m * y);
}

template <class T>
inline Mat3<T> outer(const Vec3<T>& p, const Vec3<T>& q) {
  Mat3<T> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = p[i] * q[j];
  return r;
}

template <class T>
inline T frob(const Mat3<T>& m) {
  T s = 0;
  for (auto& rw : m)
    for (auto x : rw) s += x * x;
  return std::sqrt(s);
}

template <class T>
inline T det(const Mat3<T>& m) {
  return det3(m[0], m[1], m[2]);
}

// Classical adjugate (transposed cofactor matrix); m * adj(m) = det(m) I.
template <class T>
inline Mat3<T> adjugate(const Mat3<T>& m) {
  Vec3<T> c0 = cross(m[1], m[2]);
  Vec3<T> c1 = cross(m[2], m[0]);
  Vec3<T> c2 = cross(m[0], m[1]);
  return {{{c0[0], c1[0], c2[0]}, {c0[1], c1[1], c2[1]}, {c0[2], c1[2], c2[2]}}};
}

template <class T>
inline Mat3<T> symmetric(T m11, T m22, T m33, T m23, T m31, T m12) {
  return {{{m11, m12, m31}, {m12, m22, m23}, {m31, m23, m33}}};
}

// Real roots of x^3 + c2 x^2 + c1 x + c0, ascending, polished by Newton steps.
template <class T>
struct CubicRoots {
  std::vector<T> roots;
  bool complex_pair = false;
};

template <class T>
inline CubicRoots<T> solve_monic_cubic(T c2, T c1, T c0) {
  using std::abs;
  using std::cbrt;
  using std::cos;
  using std::sqrt;
  CubicRoots<T> out;
  T sh = c2 / 3;
  T p = c1 - c2 * c2 / 3;
  T q = 2 * c2 * c2 * c2 / 27 - c2 * c1 / 3 + c0;
  T scale = std::max({abs(c2), sqrt(abs(c1)), cbrt(abs(c0)), T(1e-300)});
  T disc = q * q / 4 + p * p * p / 27;
  T tol = std::numeric_limits<T>::epsilon() * 64 * scale * scale * scale * scale * scale * scale;
  if (disc > tol) {
    T sd = sqrt(disc);
    T u = cbrt(-q / 2 + sd);
    T v = cbrt(-q / 2 - sd);
    out.roots.push_back(u + v - sh);
    out.complex_pair = true;
  } else if (p >= 0) {
    // triple root
    out.roots = {-sh, -sh, -sh};
  } else {
    T r = sqrt(-p / 3);
    T arg = std::clamp(-q / (2 * r * r * r), T(-1), T(1));
    T th = std::acos(arg) / 3;
    for (int k = 0; k < 3; ++k) out.roots.push_back(2 * r * cos(th - 2 * pi_v<T> * k / 3) - sh);
  }
  auto f = [&](T x) { return ((x + c2) * x + c1) * x + c0; };
  auto fp = [&](T x) { return (3 * x + 2 * c2) * x + c1; };
  for (auto& x : out.roots) {
    for (int it = 0; it < 4; ++it) {
      T d = fp(x);
      if (d == 0) break;
      T nx = x - f(x) / d;
      if (!(abs(f(nx)) < abs(f(x)))) break;
      x = nx;
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

template <class T>
struct Eigen3 {
  std::vector<T> values;           // real eigenvalues, ascending
  std::vector<Vec3<T>> vectors;    // unit eigenvectors (one per value)
  bool complex_pair = false;
};

// Null direction of a rank-2 matrix: the largest cross product of two rows.
template <class T>
inline Vec3<T> null_vector(const Mat3<T>& m, T* quality = nullptr) {
  Vec3<T> best{};
  T bn = -1;
  for (int i = 0; i < 3; ++i) {
    Vec3<T> c = cross(m[i], m[(i + 1) % 3]);
    T n = norm(c);
    if (n > bn) {
      bn = n;
      best = c;
    }
  }
  if (quality) {
    T f = frob(m);
    *quality = f > 0 ? bn / (f * f) : 0;
  }
  return unit(best);
}

template <class T>
inline T trace(const Mat3<T>& m) {
  return m[0][0] + m[1][1] + m[2][2];
}

template <class T>
inline T principal_minor_sum(const Mat3<T>& m) {
  return diff_prod(m[0][0], m[1][1], m[0][1], m[1][0]) + diff_prod(m[1][1], m[2][2], m[1][2], m[2][1]) +
         diff_prod(m[0][0], m[2][2], m[0][2], m[2][0]);
}

// General real 3x3 eigen decomposition via the characteristic cubic.
template <class T>
inline Eigen3<T> eigen3(const Mat3<T>& m) {
  Eigen3<T> e;
  auto r = solve_monic_cubic(-trace(m), principal_minor_sum(m), -det(m));
  e.complex_pair = r.complex_pair;
  for (T lam : r.roots) {
    Mat3<T> a = m;
    for (int i = 0; i < 3; ++i) a[i][i] -= lam;
    e.values.push_back(lam);
    e.vectors.push_back(null_vector(a));
  }
  return e;
}

// Determinant of a small dense square matrix, partial pivoting.
template <class T>
inline T dense_det(std::vector<std::vector<T>> a) {
  const std::size_t n = a.size();
  T d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(a[r][k]) > std::abs(a[piv][k])) piv = r;
    if (a[piv][k] == 0) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      d = -d;
    }
    d *= a[k][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      T f = a[r][k] / a[k][k];
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
    }
  }
  return d;
}

// Kernel of an n x (n+1) matrix from signed maximal minors (unit length).
template <class T>
inline std::vector<T> dense_null_vector(const std::vector<std::vector<T>>& a) {
  const std::size_t n = a.size();
  std::vector<T> out(n + 1);
  T nn = 0;
  for (std::size_t m = 0; m <= n; ++m) {
    std::vector<std::vector<T>> sub(n, std::vector<T>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0, k = 0; c <= n; ++c)
        if (c != m) sub[r][k++] = a[r][c];
    out[m] = (m % 2 ? -1 : 1) * dense_det(std::move(sub));
    nn += out[m] * out[m];
  }
  nn = std::sqrt(nn);
  if (nn > 0)
    for (auto& x : out) x /= nn;
  return out;
}

// Right singular vector of the smallest singular value of an m x n matrix
// (m >= n), one-sided Jacobi.
template <class T>
inline std::vector<T> dense_least_singular(std::vector<std::vector<T>> a, T* sigma = nullptr) {
  const std::size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  std::vector<std::vector<T>> v(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;
  for (int sweep = 0; sweep < 60; ++sweep) {
    T off = 0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        T al = 0, be = 0, ga = 0;
        for (std::size_t r = 0; r < m; ++r) {
          al += a[r][p] * a[r][p];
          be += a[r][q] * a[r][q];
          ga += a[r][p] * a[r][q];
        }
        if (ga == 0) continue;
        off = std::max(off, std::abs(ga) / std::sqrt(al * be));
        T zeta = (be - al) / (2 * ga);
        T t = (zeta >= 0 ? T(1) : T(-1)) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
        T c = 1 / std::sqrt(1 + t * t), s = c * t;
        for (std::size_t r = 0; r < m; ++r) {
          T x = a[r][p], y = a[r][q];
          a[r][p] = c * x - s * y;
          a[r][q] = s * x + c * y;
        }
        for (std::size_t r = 0; r < n; ++r) {
          T x = v[r][p], y = v[r][q];
          v[r][p] = c * x - s * y;
          v[r][q] = s * x + c * y;
        }
      }
    if (off < std::numeric_limits<T>::epsilon()) break;
  }
  std::size_t best = 0;
  T bn = -1;
  for (std::size_t q = 0; q < n; ++q) {
    T s2 = 0;
    for (std::size_t r = 0; r < m; ++r) s2 += a[r][q] * a[r][q];
    if (bn < 0 || s2 < bn) {
      bn = s2;
      best = q;
    }
  }
  if (sigma) *sigma = std::sqrt(bn);
  std::vector<T> out(n);
  for (std::size_t r = 0; r < n; ++r) out[r] = v[r][best];
  return out;
}

}  // namespace ek
