#pragma once

#include <cmath>
#include <utility>

#include "metric.hpp"

namespace ek {

// Barycentric point [p1:p2:p3] relative to the unit vertex representatives of a frame.
template <class T = double>
struct Bary {
  Vec3<T> v;
};

// Barycentric line l1 x1 + l2 x2 + l3 x3 = 0.
template <class T = double>
struct BLine {
  Vec3<T> v;
};

template <class T>
struct SideData {
  T a, b, c;
};

// Side lengths of the triangle with index i built on a base triangle with sides (a,b,c).
template <class T>
inline SideData<T> sides_for_index(T a, T b, T c, int i) {
  const T p = pi_v<T>;
  switch (i) {
    case 0: return {a, b, c};
    case 1: return {a, p - b, p - c};
    case 2: return {p - a, b, p - c};
    case 3: return {p - a, p - b, c};
  }
  fail(ErrorKind::DomainError, "triangle index must be 0..3");
}

template <class T = double>
struct Frame {
  // Unit vertex representatives (sign of vertex i flipped for index i > 0).
  Vec3<T> A, B, C;
  int index = 0;
  T a, b, c, s;
  T ca, cb, cc;     // cosines of the sides
  T ua, ub, uc;     // versines 1 - cos
  T sa, sb, sc;     // sines of the sides
  T alpha, beta, gamma;
  T SA, SB, SC;
  T S2, S;          // S = det(A;B;C), S2 = S^2
  T excess;         // 2 epsilon
  T staudtian;      // |S| / 2
  Mat3<T> Tm;       // characteristic matrix
  Mat3<T> adjT;     // adjugate of Tm; rows are the dual triple

  Vec3<T> vertex(int k) const { return k == 0 ? A : (k == 1 ? B : C); }
  T eps() const { return excess / 2; }
  Mat3<T> inverse() const { return (T(1) / S2) * adjT; }
  // Maps (A;B;C) back to (BxC;CxA;AxB).
  Mat3<T> transfer() const { return (T(1) / S) * adjT; }
  Mat3<T> vertex_matrix() const { return {A, B, C}; }
};

template <class T>
inline T versine_of(T x) {
  T h = std::sin(x / 2);
  return 2 * h * h;
}

namespace detail {

template <class T>
inline void fill_from_sides(Frame<T>& f) {
  f.s = (f.a + f.b + f.c) / 2;
  f.ca = std::cos(f.a);
  f.cb = std::cos(f.b);
  f.cc = std::cos(f.c);
  f.ua = versine_of(f.a);
  f.ub = versine_of(f.b);
  f.uc = versine_of(f.c);
  f.sa = std::sin(f.a);
  f.sb = std::sin(f.b);
  f.sc = std::sin(f.c);
  f.SA = f.ub + f.uc - f.ua - f.ub * f.uc;
  f.SB = f.uc + f.ua - f.ub - f.uc * f.ua;
  f.SC = f.ua + f.ub - f.uc - f.ua * f.ub;
  f.S2 = 4 * std::sin(f.s) * std::sin(f.s - f.a) * std::sin(f.s - f.b) * std::sin(f.s - f.c);
  T absS = std::sqrt(std::max(T(0), f.S2));
  T d = det3(f.A, f.B, f.C);
  f.S = d < 0 ? -absS : absS;
  f.alpha = std::atan2(absS, f.SA);
  f.beta = std::atan2(absS, f.SB);
  f.gamma = std::atan2(absS, f.SC);
  f.excess = f.alpha + f.beta + f.gamma - pi_v<T>;
  f.staudtian = absS / 2;
  f.Tm = {{{1, f.cc, f.cb}, {f.cc, 1, f.ca}, {f.cb, f.ca, 1}}};
  T sa2 = f.sa * f.sa, sb2 = f.sb * f.sb, sc2 = f.sc * f.sc;
  f.adjT = {{{sa2, -f.SC, -f.SB}, {-f.SC, sb2, -f.SA}, {-f.SB, -f.SA, sc2}}};
}

template <class T>
inline T side_between(const Vec3<T>& p, const Vec3<T>& q) {
  return std::atan2(norm(cross(p, q)), dot(p, q));
}

}  // namespace detail

constexpr double default_staudtian_floor = 1e-6;

// Frame of the triangle with index i on the reference triple A, B, C.
template <class T>
inline Frame<T> build_frame(const Point<T>& A, const Point<T>& B, const Point<T>& C, int i = 0,
                            T floor = T(default_staudtian_floor)) {
  if (i < 0 || i > 3) fail(ErrorKind::DomainError, "triangle index must be 0..3");
  Frame<T> f;
  f.A = canonical(A);
  f.B = canonical(B);
  f.C = canonical(C);
  T d = std::abs(det3(f.A, f.B, f.C));
  if (d < T(1e-14)) fail(ErrorKind::CollinearVertices, "vertices are collinear");
  if (d / 2 < floor) fail(ErrorKind::IllConditioned, "staudtian below floor");
  if (i == 1) f.A = -f.A;
  if (i == 2) f.B = -f.B;
  if (i == 3) f.C = -f.C;
  f.index = i;
  f.a = detail::side_between(f.B, f.C);
  f.b = detail::side_between(f.C, f.A);
  f.c = detail::side_between(f.A, f.B);
  detail::fill_from_sides(f);
  return f;
}

template <class T>
inline void check_sides(T a, T b, T c) {
  bool ok = a > 0 && b > 0 && c > 0 && a < pi_v<T> && b < pi_v<T> && c < pi_v<T> && a < b + c && b < c + a &&
            c < a + b && a + b + c < 2 * pi_v<T>;
  if (!ok) fail(ErrorKind::Unrealizable, "side lengths violate the spherical triangle inequalities");
}

// Rotation taking unit vector n to e0 (Rodrigues form), applied to v.
template <class T>
inline Vec3<T> rotate_to_e0(const Vec3<T>& n, const Vec3<T>& v) {
  Vec3<T> e0{1, 0, 0};
  Vec3<T> k = cross(n, e0);
  T sn = norm(k), cs = dot(n, e0);
  if (sn < T(1e-300)) return cs > 0 ? v : Vec3<T>{-v[0], -v[1], v[2]};
  k = k / sn;
  Vec3<T> kv = cross(k, v);
  T kd = dot(k, v);
  return cs * v + sn * kv + (1 - cs) * kd * k;
}

// Vertices realizing sides a, b, c: A on (1:0:0), B in the x0x1-plane. When a
// vertex would not be lexicographically positive the configuration is rotated
// into the open hemisphere x0 > 0 so that the vertices stay canonical.
template <class T>
inline std::array<Vec3<T>, 3> synthesize_vertices(T a, T b, T c) {
  check_sides(a, b, c);
  T sb = std::sin(b);
  // stable angle from versines
  T ua = versine_of(a), ub = versine_of(b), uc = versine_of(c);
  T SA = ub + uc - ua - ub * uc;
  T s = (a + b + c) / 2;
  T S2 = 4 * std::sin(s) * std::sin(s - a) * std::sin(s - b) * std::sin(s - c);
  T alpha = std::atan2(std::sqrt(std::max(T(0), S2)), SA);
  Vec3<T> A{1, 0, 0};
  Vec3<T> B{std::cos(c), std::sin(c), 0};
  Vec3<T> C{std::cos(b), sb * std::cos(alpha), sb * std::sin(alpha)};
  if (lex_positive(B) && lex_positive(C)) return {A, B, C};
  Vec3<T> n = unit(cross(B, C) + cross(C, A) + cross(A, B));
  if (det3(A, B, C) < 0) n = -n;
  return {rotate_to_e0(n, A), rotate_to_e0(n, B), rotate_to_e0(n, C)};
}

template <class T>
inline Frame<T> frame_from_sides(T a, T b, T c, int i = 0) {
  auto v = synthesize_vertices(a, b, c);
  Frame<T> f = build_frame(Point<T>{v[0]}, Point<T>{v[1]}, Point<T>{v[2]}, 0, T(0));
  // keep the exact input sides; vertex-derived sides agree to rounding
  auto sd = sides_for_index(a, b, c, i);
  if (i == 1) f.A = -f.A;
  if (i == 2) f.B = -f.B;
  if (i == 3) f.C = -f.C;
  f.index = i;
  f.a = sd.a;
  f.b = sd.b;
  f.c = sd.c;
  detail::fill_from_sides(f);
  return f;
}

// The same reference triple viewed as triangle i (vertex representative i negated).
template <class T>
inline Frame<T> with_index(const Frame<T>& f, int i) {
  if (i == 0) return f;
  Frame<T> g = f;
  if (i == 1) g.A = -g.A;
  if (i == 2) g.B = -g.B;
  if (i == 3) g.C = -g.C;
  g.index = i;
  auto sd = sides_for_index(f.a, f.b, f.c, i);
  g.a = sd.a;
  g.b = sd.b;
  g.c = sd.c;
  detail::fill_from_sides(g);
  return g;
}

// Cosine rules and sine rule.
template <class T>
inline T cosine_rule_angle(T a, T b, T c) {
  check_sides(a, b, c);
  T v = (std::cos(a) - std::cos(b) * std::cos(c)) / (std::sin(b) * std::sin(c));
  if (!(std::abs(v) <= 1 + T(1e-12))) fail(ErrorKind::DomainError, "cosine rule out of range");
  return std::acos(std::clamp(v, T(-1), T(1)));
}

template <class T>
inline T cosine_rule_side(T al, T be, T ga) {
  if (!(al > 0 && be > 0 && ga > 0 && al < pi_v<T> && be < pi_v<T> && ga < pi_v<T>))
    fail(ErrorKind::DomainError, "angles must lie in (0, pi)");
  T v = (std::cos(al) + std::cos(be) * std::cos(ga)) / (std::sin(be) * std::sin(ga));
  if (!(std::abs(v) <= 1 + T(1e-12))) fail(ErrorKind::DomainError, "angles do not form an elliptic triangle");
  return std::acos(std::clamp(v, T(-1), T(1)));
}

// cos a through the excess: 1 + 2 sin(eps) sin(eps - alpha) / (sin beta sin gamma).
template <class T>
inline T cos_side_from_excess(T al, T be, T ga) {
  T e = (al + be + ga - pi_v<T>) / 2;
  return 1 + 2 * std::sin(e) * std::sin(e - al) / (std::sin(be) * std::sin(ga));
}

template <class T>
inline T sine_rule_ratio(const Frame<T>& f) {
  return std::abs(f.S) / (f.sa * f.sb * f.sc);
}

// Star product p T q.
template <class T>
inline T star(const Frame<T>& f, const Vec3<T>& p, const Vec3<T>& q) {
  return quad(p, f.Tm, q);
}

template <class T>
inline T star_norm(const Frame<T>& f, const Vec3<T>& p) {
  return std::sqrt(std::max(T(0), star(f, p, p)));
}

// Ambient point -> barycentrics: s_i = P.(V_j x V_k).
template <class T>
inline Bary<T> to_bary(const Frame<T>& f, const Point<T>& p) {
  Vec3<T> u = unit(p.v);
  return {Vec3<T>{dot(u, cross(f.B, f.C)), dot(u, cross(f.C, f.A)), dot(u, cross(f.A, f.B))}};
}

template <class T>
inline Point<T> from_bary(const Frame<T>& f, const Bary<T>& p) {
  const Vec3<T>& x = p.v;
  Vec3<T> r;
  for (int k = 0; k < 3; ++k) r[k] = dot2(Vec3<T>{x[0], x[1], x[2]}, Vec3<T>{f.A[k], f.B[k], f.C[k]});
  return {r};
}

// Ambient representative of a barycentric point, not canonicalized.
template <class T>
inline Vec3<T> ambient(const Frame<T>& f, const Vec3<T>& x) {
  return from_bary(f, Bary<T>{x}).v;
}

// Barycentric line -> ambient line coefficients (up to the factor 1/S).
template <class T>
inline Line<T> to_ambient_line(const Frame<T>& f, const BLine<T>& l) {
  Vec3<T> bc = cross(f.B, f.C), ca = cross(f.C, f.A), ab = cross(f.A, f.B);
  Vec3<T> r;
  for (int k = 0; k < 3; ++k) r[k] = dot2(l.v, Vec3<T>{bc[k], ca[k], ab[k]});
  return {r};
}

template <class T>
inline BLine<T> to_bary_line(const Frame<T>& f, const Line<T>& l) {
  return {Vec3<T>{dot(l.v, f.A), dot(l.v, f.B), dot(l.v, f.C)}};
}

// Incidence residual measured in the ambient chart: sine of the distance of the
// point from the line.
template <class T>
inline T bary_incidence(const Frame<T>& f, const Vec3<T>& line, const Vec3<T>& pt) {
  return incidence(to_ambient_line(f, BLine<T>{line}).v, ambient(f, pt));
}

template <class T>
inline T bary_distance(const Frame<T>& f, const Vec3<T>& p, const Vec3<T>& q) {
  T num = std::abs(star(f, p, q));
  T den = star_norm(f, p) * star_norm(f, q);
  return std::acos(std::clamp(num / den, T(0), T(1)));
}

template <class T>
inline Vec3<T> bary_join(const Vec3<T>& p, const Vec3<T>& q) {
  if (same(p, q)) fail(ErrorKind::DegenerateInput, "join of equal points");
  return cross(p, q);
}

template <class T>
inline Vec3<T> bary_meet(const Vec3<T>& k, const Vec3<T>& l) {
  if (same(k, l)) fail(ErrorKind::DegenerateInput, "meet of equal lines");
  return cross(k, l);
}

template <class T>
inline std::pair<Vec3<T>, Vec3<T>> bary_midpoints(const Frame<T>& f, const Vec3<T>& p, const Vec3<T>& q) {
  if (same(p, q)) fail(ErrorKind::DegenerateInput, "midpoints of equal points");
  Vec3<T> pp = lex_positive(p) ? p : -p;
  Vec3<T> qq = lex_positive(q) ? q : -q;
  pp = pp / star_norm(f, pp);
  qq = qq / star_norm(f, qq);
  return {pp + qq, pp - qq};
}

// Dual line of a point: p T.
template <class T>
inline Vec3<T> bary_dual_point(const Frame<T>& f, const Vec3<T>& p) {
  return f.Tm * p;
}

// Dual point of a line: l adj(T).
template <class T>
inline Vec3<T> bary_dual_line(const Frame<T>& f, const Vec3<T>& l) {
  return f.adjT * l;
}

// Both angle bisectors of two lines, weighted by sqrt(l adj(T) l).
template <class T>
inline std::pair<Vec3<T>, Vec3<T>> angle_bisectors(const Frame<T>& f, const Vec3<T>& k, const Vec3<T>& l) {
  if (same(k, l)) fail(ErrorKind::DegenerateInput, "bisectors of equal lines");
  T nk = std::sqrt(quad(k, f.adjT, k)), nl = std::sqrt(quad(l, f.adjT, l));
  Vec3<T> kk = k / nk, ll = l / nl;
  return {kk + ll, kk - ll};
}

// Distance of a barycentric point from a barycentric line, via the dual point.
template <class T>
inline T bary_point_line_distance(const Frame<T>& f, const Vec3<T>& p, const Vec3<T>& l) {
  return pi_v<T> / 2 - bary_distance(f, p, bary_dual_line(f, l));
}

template <class T>
inline T staudtian_of(const Vec3<T>& p, const Vec3<T>& q, const Vec3<T>& r) {
  return std::abs(det3(unit(p), unit(q), unit(r))) / 2;
}

template <class T>
inline T staudtian_of(const Frame<T>& f, const Bary<T>& p, const Bary<T>& q, const Bary<T>& r) {
  return staudtian_of(ambient(f, p.v), ambient(f, q.v), ambient(f, r.v));
}

// Excess of the spherical triangle spanned by the given representatives.
template <class T>
inline T excess_of(const Vec3<T>& p0, const Vec3<T>& q0, const Vec3<T>& r0) {
  Vec3<T> p = unit(p0), q = unit(q0), r = unit(r0);
  auto ang = [](const Vec3<T>& v, const Vec3<T>& x, const Vec3<T>& y) {
    Vec3<T> u = cross(v, x), w = cross(v, y);
    return std::atan2(norm(cross(u, w)), dot(u, w));
  };
  return ang(p, q, r) + ang(q, r, p) + ang(r, p, q) - pi_v<T>;
}

template <class T>
inline bool interior(const Vec3<T>& p) {
  return (p[0] > 0 && p[1] > 0 && p[2] > 0) || (p[0] < 0 && p[1] < 0 && p[2] < 0);
}

}  // namespace ek
