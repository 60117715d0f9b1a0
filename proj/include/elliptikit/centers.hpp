#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cevian.hpp"

namespace ek {

enum class CenterId {
  G,
  Gplus,
  Gsharp,
  I,
  O,
  Oplus,
  H,
  Hminus,
  Hsharp,
  Nsharp,
  K,
  Ktilde,
  Ge,
  Na,
  Fe,
  L,
  T,
  Hstar,
  OrthicAxisMeet,
  HtauDelta,
  OKtripole,
  KtildeTauDelta,
  KtildeConjO,
};

inline constexpr CenterId all_centers[] = {
    CenterId::G,      CenterId::Gplus,     CenterId::Gsharp,         CenterId::I,         CenterId::O,
    CenterId::Oplus,  CenterId::H,         CenterId::Hminus,         CenterId::Hsharp,    CenterId::Nsharp,
    CenterId::K,      CenterId::Ktilde,    CenterId::Ge,             CenterId::Na,        CenterId::Fe,
    CenterId::L,      CenterId::T,         CenterId::Hstar,          CenterId::OrthicAxisMeet,
    CenterId::HtauDelta, CenterId::OKtripole, CenterId::KtildeTauDelta, CenterId::KtildeConjO};

struct CenterInfo {
  CenterId id;
  std::string_view name;    // ASCII alias used by the CLI
  std::string_view symbol;  // notation
  int kimberling;           // 0 when no euclidean limit tag
  bool infinity_point;      // limit lies on the line at infinity
  bool has_angle_form;
};

inline constexpr CenterInfo center_table[] = {
    {CenterId::G, "G", "G", 2, false, true},
    {CenterId::Gplus, "G+", "G⁺", 2, false, true},
    {CenterId::Gsharp, "Gsharp", "G♯", 2, false, true},
    {CenterId::I, "I", "I", 1, false, true},
    {CenterId::O, "O", "O", 3, false, true},
    {CenterId::Oplus, "O+", "O⁺", 3, false, true},
    {CenterId::H, "H", "H", 4, false, true},
    {CenterId::Hminus, "Hminus", "H⁻", 4, false, true},
    {CenterId::Hsharp, "Hsharp", "H♯", 4, false, true},
    {CenterId::Nsharp, "Nsharp", "N♯", 5, false, true},
    {CenterId::K, "K", "K", 6, false, true},
    {CenterId::Ktilde, "Ktilde", "K̃", 6, false, true},
    {CenterId::Ge, "Ge", "Ge", 7, false, true},
    {CenterId::Na, "Na", "Na", 8, false, true},
    {CenterId::Fe, "Fe", "Fe", 11, false, true},
    {CenterId::L, "L", "L", 20, false, true},
    {CenterId::T, "T", "T", 20, false, true},
    {CenterId::Hstar, "Hstar", "H★", 0, false, false},
    {CenterId::OrthicAxisMeet, "OrthicAxisMeet", "orthoaxis ∧ orthic axis", 0, false, false},
    {CenterId::HtauDelta, "HtauDelta", "H^τδ", 30, true, true},
    {CenterId::OKtripole, "OKtripole", "(O∨K)^τ", 110, false, true},
    {CenterId::KtildeTauDelta, "KtildeTauDelta", "K̃^τδ", 511, true, true},
    {CenterId::KtildeConjO, "KtildeConjO", "K̃-conjugate of O", 0, false, false},
};

inline const CenterInfo& info(CenterId id) {
  for (auto& c : center_table)
    if (c.id == id) return c;
  fail(ErrorKind::DomainError, "unknown center id");
}

inline std::optional<CenterId> center_by_name(std::string_view n) {
  for (auto& c : center_table)
    if (c.name == n) return c.id;
  // a few extra spellings
  if (n == "Gplus") return CenterId::Gplus;
  if (n == "Oplus") return CenterId::Oplus;
  if (n == "H-") return CenterId::Hminus;
  return std::nullopt;
}

// Trigonometric data of a side triple, in the stable versine form.
template <class T>
struct SideTrig {
  T a, b, c;
  T ca, cb, cc, ua, ub, uc, sa, sb, sc;
  T ha, hb, hc;     // cos of half sides
  T qa, qb, qc;     // sin^2 of half sides
  T SA, SB, SC, S2, s;

  static SideTrig make(T a, T b, T c) {
    SideTrig t;
    t.a = a;
    t.b = b;
    t.c = c;
    t.ca = std::cos(a);
    t.cb = std::cos(b);
    t.cc = std::cos(c);
    t.ua = versine_of(a);
    t.ub = versine_of(b);
    t.uc = versine_of(c);
    t.sa = std::sin(a);
    t.sb = std::sin(b);
    t.sc = std::sin(c);
    t.ha = std::cos(a / 2);
    t.hb = std::cos(b / 2);
    t.hc = std::cos(c / 2);
    t.qa = t.ua / 2;
    t.qb = t.ub / 2;
    t.qc = t.uc / 2;
    t.SA = t.ub + t.uc - t.ua - t.ub * t.uc;
    t.SB = t.uc + t.ua - t.ub - t.uc * t.ua;
    t.SC = t.ua + t.ub - t.uc - t.ua * t.ub;
    t.s = (a + b + c) / 2;
    t.S2 = 4 * std::sin(t.s) * std::sin(t.s - a) * std::sin(t.s - b) * std::sin(t.s - c);
    return t;
  }
  SideTrig rotated() const { return make(b, c, a); }
};

namespace detail {

template <class T>
inline T nonzero(T d, const char* what) {
  if (d == 0 || !std::isfinite(d)) fail(ErrorKind::UndefinedCenter, std::string("vanishing denominator: ") + what);
  return d;
}

// First barycentric component f(a,b,c) of each center.
template <class T>
inline T center_fn(CenterId id, const SideTrig<T>& t) {
  const T ua = t.ua, ub = t.ub, uc = t.uc;
  switch (id) {
    case CenterId::G: return 1;
    case CenterId::Gplus: return t.ca;
    case CenterId::Gsharp: return t.ha / nonzero(t.ha + t.hb * t.hc, "c_{a/2}+c_{b/2}c_{c/2}");
    case CenterId::I: return t.sa;
    case CenterId::O: return ua * (ub + uc - ua);
    case CenterId::Oplus: return t.SA * t.sa * t.sa;
    case CenterId::H: return 1 / nonzero(t.SA, "S_A");
    case CenterId::Hminus: return (2 - ua) / nonzero(ub + uc - ua, "1+c_a-c_b-c_c");
    case CenterId::Hsharp: return t.ha / nonzero(t.ha - t.hb * t.hc, "c_{a/2}-c_{b/2}c_{c/2}");
    case CenterId::Nsharp:
      return (ua - 2) * (ua * ub * uc - ua * ub - ua * uc + ub * ub - 2 * ub * uc + uc * uc);
    case CenterId::K: return t.sa * t.sa;
    case CenterId::Ktilde: return ua;
    case CenterId::Ge: return 1 / nonzero(std::sin(t.s - t.a), "sin(s-a)");
    case CenterId::Na: return std::sin(t.s - t.a);
    case CenterId::Fe: return t.S2 + t.SB * t.SC - t.sa * t.sa * t.sb * t.sc;
    case CenterId::L:
      return ua * ua * ua - 3 * ua * ua - ua * ub * ub + 2 * ua * ub - ua * uc * uc + 2 * ua * uc + ub * ub -
             2 * ub * uc + uc * uc;
    case CenterId::T: return -3 * ua * ua + 2 * ua * ub + 2 * ua * uc + ub * ub - 2 * ub * uc + uc * uc;
    case CenterId::Hstar:
    case CenterId::HtauDelta: return 2 * t.SB * t.SC - t.SA * t.sa * t.sa;
    case CenterId::OrthicAxisMeet: return t.SB * t.SC * (-2 * ua * ua + 4 * ua + ub * ub - 2 * ub + uc * uc - 2 * uc);
    case CenterId::OKtripole: return ua / nonzero(uc - ub, "c_b-c_c");
    case CenterId::KtildeTauDelta: return ua * (ub * t.SB + uc * t.SC) - ub * uc * t.sa * t.sa;
    case CenterId::KtildeConjO: return 1 / nonzero(ub + uc - ua, "1+c_a-c_b-c_c");
  }
  fail(ErrorKind::DomainError, "unknown center id");
}

}  // namespace detail

template <class T>
inline Vec3<T> cyclic(CenterId id, const SideTrig<T>& t) {
  SideTrig<T> t1 = t.rotated(), t2 = t1.rotated();
  return {detail::center_fn(id, t), detail::center_fn(id, t1), detail::center_fn(id, t2)};
}

// Center of triangle i (0..3) in the barycentrics of the frame: the center
// function is evaluated on the sides of that triangle and component i negated.
template <class T>
inline Vec3<T> center(CenterId id, const Frame<T>& f, int i = 0) {
  auto sd = sides_for_index(f.a, f.b, f.c, i);
  Vec3<T> v = cyclic(id, SideTrig<T>::make(sd.a, sd.b, sd.c));
  if (i > 0) v[i - 1] = -v[i - 1];
  if (is_zero(v)) fail(ErrorKind::UndefinedCenter, std::string("all coordinates vanish for ") + std::string(info(id).name));
  return v;
}

// Angle-form center functions (final table), evaluated on angles and half sides.
template <class T>
struct AngleTrig {
  T al, be, ga, e;
  SideTrig<T> sides;
};

namespace detail {

template <class T>
inline T angle_fn(CenterId id, T al, T be, T ga, T e, const SideTrig<T>& t) {
  using std::cos;
  using std::sin;
  auto xi = [e](T x) { return sin(x) * sin(x - e); };
  switch (id) {
    case CenterId::G: return 1;
    case CenterId::Gplus: return 1 - 2 * sin(e) * sin(al - e) / (sin(be) * sin(ga));
    case CenterId::Gsharp: return sin(al) / (sin(al) + sin(al - e));
    case CenterId::I: return sin(al);
    case CenterId::O: return sin(al) * cos(al - e);
    case CenterId::Oplus: return sin(2 * al);
    case CenterId::H: return std::tan(al);
    case CenterId::Hminus: return sin(al) / cos(al - e);
    case CenterId::Hsharp: return sin(al) / (sin(al) - sin(al - e));
    case CenterId::Nsharp: return sin(al) * cos(be - ga);
    case CenterId::K: return sin(al) * sin(al);
    case CenterId::Ktilde: return sin(al) * sin(al - e);
    case CenterId::Ge: return std::tan(al / 2);
    case CenterId::Na: return 1 / std::tan(al / 2);
    case CenterId::Fe: return sin(al) - sin(al) * cos(be - ga);
    case CenterId::L: {
      T xa = xi(al), xb = xi(be), xc = xi(ga);
      T phi = 2 * sin(e) * sin(al - e) / (sin(be) * sin(ga));
      return 3 * xa * xa - 2 * xa * (xb + xc) - (xb - xc) * (xb - xc) - phi * (xa * xa - xb * xb - xc * xc);
    }
    case CenterId::T: {
      T qa = t.qa, qb = t.qb, qc = t.qc;
      return -3 * qa * qa + 2 * qa * (qb + qc) + (qb - qc) * (qb - qc);
    }
    case CenterId::HtauDelta: return sin(al) * (cos(al) - 2 * cos(be) * cos(ga));
    case CenterId::OKtripole: {
      auto z = [e](T x) { return sin(x) * sin(e - x); };
      return z(al) / (z(be) - z(ga));
    }
    case CenterId::KtildeTauDelta: {
      T xa = xi(al), xb = xi(be), xc = xi(ga);
      return xa * (xa * (xb + xc) - xb * xb - xc * xc - 2 * sin(e) * sin(al - e) * sin(be - e) * sin(ga - e));
    }
    default: break;
  }
  fail(ErrorKind::NoLimitTag, "no angle form for this center");
}

}  // namespace detail

// Angle-form coordinates for triangle i of the frame.
template <class T>
inline Vec3<T> center_angle_form(CenterId id, const Frame<T>& f, int i = 0) {
  if (!info(id).has_angle_form) fail(ErrorKind::NoLimitTag, "no angle form for this center");
  auto sd = sides_for_index(f.a, f.b, f.c, i);
  const T p = pi_v<T>;
  T al = f.alpha, be = f.beta, ga = f.gamma;
  if (i == 1) {
    be = p - be;
    ga = p - ga;
  } else if (i == 2) {
    al = p - al;
    ga = p - ga;
  } else if (i == 3) {
    al = p - al;
    be = p - be;
  }
  T e = (al + be + ga - p) / 2;
  SideTrig<T> t0 = SideTrig<T>::make(sd.a, sd.b, sd.c), t1 = t0.rotated(), t2 = t1.rotated();
  Vec3<T> v{detail::angle_fn(id, al, be, ga, e, t0), detail::angle_fn(id, be, ga, al, e, t1),
            detail::angle_fn(id, ga, al, be, e, t2)};
  if (i > 0) v[i - 1] = -v[i - 1];
  return v;
}

enum class VertexCenterId { Triplex, TriplexCircum, ExPedalTouch };

// Vertex-indexed points; vertex k = 0, 1, 2 for A, B, C.
template <class T>
inline Vec3<T> vertex_center(VertexCenterId id, int k, const Frame<T>& f) {
  if (k < 0 || k > 2) fail(ErrorKind::DomainError, "vertex index must be 0..2");
  Vec3<T> u{f.ua, f.ub, f.uc};
  int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
  Vec3<T> r{};
  switch (id) {
    case VertexCenterId::Triplex: {
      T d1 = u[k2] - u[k], d2 = u[k1] - u[k];
      if (d1 == 0 || d2 == 0) fail(ErrorKind::IsoscelesDegeneracy, "triplex point needs pairwise distinct sides at the vertex");
      r[k] = 1;
      r[k1] = u[k1] / d1;
      r[k2] = u[k2] / d2;
      break;
    }
    case VertexCenterId::TriplexCircum: {
      r[k] = u[k];
      r[k1] = u[k2] - u[k1];
      r[k2] = u[k1] - u[k2];
      if (r[k1] == 0) fail(ErrorKind::IsoscelesDegeneracy, "circumcircle triplex point collapses to the vertex");
      break;
    }
    case VertexCenterId::ExPedalTouch: {
      Vec3<T> na = center(CenterId::Na, f);
      r = na;
      r[k] = 0;
      break;
    }
  }
  return r;
}

// Circumradius and inradius of triangle i from the side data.
template <class T>
inline T circumradius_cos2(const SideTrig<T>& t) {
  T den = 2 * t.ua * t.ub + 2 * t.ua * t.uc + 2 * t.ub * t.uc - t.ua * t.ua - t.ub * t.ub - t.uc * t.uc;
  return std::abs(t.S2 / den);
}

template <class T>
inline T circumradius(const Frame<T>& f, int i = 0) {
  auto sd = sides_for_index(f.a, f.b, f.c, i);
  auto t = SideTrig<T>::make(sd.a, sd.b, sd.c);
  return std::acos(std::min(T(1), std::sqrt(circumradius_cos2(t))));
}

template <class T>
inline T kappa(const SideTrig<T>& t) {
  return std::sqrt(t.sa * t.sa + t.sb * t.sb + t.sc * t.sc +
                   2 * (t.ca * t.sb * t.sc + t.cb * t.sc * t.sa + t.cc * t.sa * t.sb));
}

template <class T>
inline T inradius_cos(const Frame<T>& f, int i = 0) {
  auto sd = sides_for_index(f.a, f.b, f.c, i);
  auto t = SideTrig<T>::make(sd.a, sd.b, sd.c);
  return 2 * std::sin(t.s) / kappa(t);
}

template <class T>
inline T inradius(const Frame<T>& f, int i = 0) {
  return std::acos(std::clamp(inradius_cos(f, i), T(-1), T(1)));
}

// Radius of the circumcircle of the dual triangle, centered at I.
template <class T>
inline T dual_circumradius(const Frame<T>& f) {
  auto t = SideTrig<T>::make(f.a, f.b, f.c);
  return std::acos(std::clamp(std::sqrt(t.S2) / kappa(t), T(0), T(1)));
}

// Euclidean reference center functions at side proportions a:b:c.
template <class T>
inline T kimberling_fn(int x, T a, T b, T c) {
  T a2 = a * a, b2 = b * b, c2 = c * c;
  switch (x) {
    case 1: return a;
    case 2: return 1;
    case 3: return a2 * (b2 + c2 - a2);
    case 4: return 1 / (b2 + c2 - a2);
    case 5: return a2 * (b2 + c2) - (b2 - c2) * (b2 - c2);
    case 6: return a2;
    case 7: return 1 / (b + c - a);
    case 8: return b + c - a;
    case 11: return (b + c - a) * (b - c) * (b - c);
    case 20: return 3 * a2 * a2 - 2 * a2 * (b2 + c2) - (b2 - c2) * (b2 - c2);
    case 30: return 2 * a2 * a2 - a2 * (b2 + c2) - (b2 - c2) * (b2 - c2);
    case 110: return a2 / (b2 - c2);
    case 511: return a2 * (a2 * (b2 + c2) - b2 * b2 - c2 * c2);
  }
  fail(ErrorKind::NoLimitTag, "no euclidean reference for X" + std::to_string(x));
}

template <class T>
inline Vec3<T> kimberling(int x, T a, T b, T c) {
  return {kimberling_fn(x, a, b, c), kimberling_fn(x, b, c, a), kimberling_fn(x, c, a, b)};
}

// Finite points: normalized to coordinate sum 1. Infinity points: unit norm,
// sign fixed by the largest-magnitude coordinate.
template <class T>
inline Vec3<T> limit_normalize(const Vec3<T>& v, bool infinity) {
  if (!infinity) {
    T s = v[0] + v[1] + v[2];
    return v / s;
  }
  Vec3<T> u = unit(v);
  int k = 0;
  for (int j = 1; j < 3; ++j)
    if (std::abs(u[j]) > std::abs(u[k])) k = j;
  return u[k] < 0 ? -u : u;
}

// Max-norm discrepancy between the center of the shrunken frame and its
// euclidean reference.
template <class T>
inline T euclidean_limit_check(CenterId id, T a, T b, T c, T lambda) {
  const auto& in = info(id);
  if (in.kimberling == 0) fail(ErrorKind::NoLimitTag, std::string(in.name) + " has no euclidean limit tag");
  if (!(lambda > 0 && lambda <= T(0.2))) fail(ErrorKind::DomainError, "shrink factor must lie in (0, 0.2]");
  Frame<T> f = frame_from_sides(lambda * a, lambda * b, lambda * c);
  Vec3<T> p = limit_normalize(center(id, f), in.infinity_point);
  Vec3<T> q = limit_normalize(kimberling(in.kimberling, a, b, c), in.infinity_point);
  return max_abs(p - q);
}

struct LimitRow {
  double lambda;
  double discrepancy;
};

struct LimitReport {
  std::vector<LimitRow> rows;
  std::vector<double> orders;  // log10 ratio between consecutive rows
};

template <class T = long double>
inline LimitReport limit_sweep(CenterId id, T a, T b, T c, const std::vector<double>& lambdas) {
  LimitReport r;
  for (double l : lambdas) r.rows.push_back({l, double(euclidean_limit_check<T>(id, a, b, c, T(l)))});
  for (std::size_t k = 1; k < r.rows.size(); ++k) {
    double d0 = r.rows[k - 1].discrepancy, d1 = r.rows[k].discrepancy;
    double ord = (d0 == 0 && d1 == 0) ? 2.0 : std::log(d0 / d1) / std::log(r.rows[k - 1].lambda / r.rows[k].lambda);
    r.orders.push_back(ord);
  }
  return r;
}

}  // namespace ek
