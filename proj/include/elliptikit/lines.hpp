#pragma once

#include <string>
#include <vector>

#include "cubics.hpp"

namespace ek {

enum class LineId { Orthoaxis, GO, OK, Akopyan, OrthicAxis, LemoineAxis, GTripolar };

inline constexpr LineId all_lines[] = {LineId::Orthoaxis, LineId::GO,          LineId::OK,       LineId::Akopyan,
                                       LineId::OrthicAxis, LineId::LemoineAxis, LineId::GTripolar};

inline const char* line_name(LineId id) {
  switch (id) {
    case LineId::Orthoaxis: return "orthoaxis";
    case LineId::GO: return "GO";
    case LineId::OK: return "OK";
    case LineId::Akopyan: return "akopyan";
    case LineId::OrthicAxis: return "orthic-axis";
    case LineId::LemoineAxis: return "lemoine-axis";
    case LineId::GTripolar: return "G-tripolar";
  }
  return "?";
}

inline std::optional<LineId> line_by_name(std::string_view n) {
  for (auto id : all_lines)
    if (n == line_name(id)) return id;
  return std::nullopt;
}

namespace detail {

template <class T>
inline T line_fn(LineId id, const SideTrig<T>& t) {
  const T ua = t.ua, ub = t.ub, uc = t.uc;
  switch (id) {
    case LineId::Orthoaxis: return t.SA * (uc - ub) * (2 - ub - uc);
    case LineId::GO: return (ub + uc - ua) * (uc - ub);
    case LineId::OK: return (uc - ub) / ua;
    case LineId::Akopyan: return (uc - ub) * (-2 * ua + 2 * ub + 2 * uc - ub * uc);
    case LineId::OrthicAxis: return t.SA;
    case LineId::LemoineAxis: return ub * uc;
    case LineId::GTripolar: return 1;
  }
  return 0;
}

}  // namespace detail

// Barycentric line coefficients of a central line of the base triangle.
template <class T>
inline Vec3<T> central_line(LineId id, const Frame<T>& f) {
  auto t0 = SideTrig<T>::make(f.a, f.b, f.c);
  auto t1 = t0.rotated(), t2 = t1.rotated();
  Vec3<T> l{detail::line_fn(id, t0), detail::line_fn(id, t1), detail::line_fn(id, t2)};
  T scale = std::max({f.ua, f.ub, f.uc});
  if (max_abs(l) <= T(1e-13) * std::max(T(1), scale * scale * scale))
    fail(ErrorKind::EquilateralDegeneracy, std::string(line_name(id)) + " collapses for this triangle");
  return l;
}

template <class T>
struct RosterEntry {
  std::string name;
  Vec3<T> point;
};

template <class T>
inline Vec3<T> triplex_cevian_foot(const Frame<T>& f, int k) {
  const Vec3<T> E[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  Vec3<T> t = vertex_center(VertexCenterId::Triplex, k, f);
  return cross(cross(E[k], t), E[k]);
}

template <class T>
inline std::vector<RosterEntry<T>> roster(LineId id, const Frame<T>& f) {
  std::vector<RosterEntry<T>> r;
  auto add = [&](CenterId c) { r.push_back({std::string(info(c).name), center(c, f)}); };
  switch (id) {
    case LineId::Orthoaxis:
      for (auto c : {CenterId::H, CenterId::Gplus, CenterId::Hstar, CenterId::Oplus, CenterId::L,
                     CenterId::OrthicAxisMeet})
        add(c);
      break;
    case LineId::GO:
      for (auto c : {CenterId::G, CenterId::O, CenterId::Hminus, CenterId::KtildeConjO, CenterId::L, CenterId::T}) add(c);
      r.push_back({"T_A", vertex_center(VertexCenterId::Triplex, 0, f)});
      r.push_back({"T_B", vertex_center(VertexCenterId::Triplex, 1, f)});
      r.push_back({"T_C", vertex_center(VertexCenterId::Triplex, 2, f)});
      break;
    case LineId::OK: {
      for (auto c : {CenterId::O, CenterId::K, CenterId::Ktilde}) add(c);
      r.push_back({"lemoine-axis-dual", bary_dual_line(f, central_line(LineId::LemoineAxis, f))});
      auto [tp, tm] = apollonian_common_points(f);
      r.push_back({"t+", tp});
      r.push_back({"t-", tm});
      r.push_back({"(A v T_A) ^ (B v C)", triplex_cevian_foot(f, 0)});
      r.push_back({"(B v T_B) ^ (C v A)", triplex_cevian_foot(f, 1)});
      r.push_back({"(C v T_C) ^ (A v B)", triplex_cevian_foot(f, 2)});
      break;
    }
    case LineId::Akopyan:
      for (auto c : {CenterId::O, CenterId::Hstar, CenterId::Gsharp, CenterId::Hsharp, CenterId::Nsharp}) add(c);
      break;
    case LineId::OrthicAxis: r.push_back({"OrthicAxisMeet", center(CenterId::OrthicAxisMeet, f)}); break;
    case LineId::LemoineAxis: {
      auto c = apollonian_centers(f);
      r.push_back({"L_A", c[0]});
      r.push_back({"L_B", c[1]});
      r.push_back({"L_C", c[2]});
      break;
    }
    case LineId::GTripolar: break;
  }
  return r;
}

// Largest normalized incidence residual of the roster on its line.
template <class T>
inline T roster_residual(LineId id, const Frame<T>& f, std::string* worst = nullptr) {
  Vec3<T> l = central_line(id, f);
  T m = 0;
  for (auto& e : roster(id, f)) {
    T r = bary_incidence(f, l, e.point);
    if (r > m) {
      m = r;
      if (worst) *worst = e.name;
    }
  }
  return m;
}

template <class T>
struct HarmonicQuad {
  std::string label;
  T cross_ratio;
};

// Harmonic ranges (O, H-; G, L) on G v O and (O, N#; G#, H#) on the Akopyan line.
template <class T>
inline std::vector<HarmonicQuad<T>> harmonic_range_check(LineId id, const Frame<T>& f) {
  std::vector<HarmonicQuad<T>> out;
  central_line(id, f);
  auto c = [&](CenterId x) { return center(x, f); };
  if (id == LineId::GO)
    out.push_back({"(O,H-;G,L)", cross_ratio(c(CenterId::O), c(CenterId::Hminus), c(CenterId::G), c(CenterId::L))});
  else if (id == LineId::Akopyan)
    out.push_back(
        {"(O,Nsharp;Gsharp,Hsharp)", cross_ratio(c(CenterId::O), c(CenterId::Nsharp), c(CenterId::Gsharp), c(CenterId::Hsharp))});
  return out;
}

template <class T>
struct Vigara {
  Conic<T> conic;
  Vec3<T> axis;
  Triple<T> symmetry_points;  // dual(orthoaxis), H + O+, H - O+ (star-unit representatives)
  T identity_residual;
};

template <class T>
inline Vigara<T> vigara_symmetry(const Frame<T>& f) {
  Vec3<T> h = center(CenterId::H, f), gp = center(CenterId::Gplus, f), op = center(CenterId::Oplus, f);
  Conic<T> m = bicevian_conic(h, gp);
  Vec3<T> ax = central_line(LineId::Orthoaxis, f);
  Vec3<T> hn = h / star_norm(f, h), on = op / star_norm(f, op);
  Vec3<T> x = hn + on, y = hn - on;
  T res = std::abs(quad(x, m.m, y)) / (frob(m.m) * norm(x) * norm(y));
  return {m, ax, {bary_dual_line(f, ax), x, y}, res};
}

enum class TouchSpecies { External, Internal, AntipodalExternal, AntipodalInternal };

inline const char* species_name(TouchSpecies s) {
  switch (s) {
    case TouchSpecies::External: return "d = R + r";
    case TouchSpecies::Internal: return "d = |R - r|";
    case TouchSpecies::AntipodalExternal: return "pi - d = R + r";
    case TouchSpecies::AntipodalInternal: return "pi - d = |R - r|";
  }
  return "?";
}

template <class T>
struct Touch {
  int index;
  T residual;
  TouchSpecies species;
};

// Tangency of two circles from center distance and radii.
template <class T>
inline Touch<T> touch(T d, T r1, T r2, int index = 0) {
  const T p = pi_v<T>;
  T cand[4] = {std::abs(d - (r1 + r2)), std::abs(d - std::abs(r1 - r2)), std::abs(p - d - (r1 + r2)),
               std::abs(p - d - std::abs(r1 - r2))};
  int k = 0;
  for (int j = 1; j < 4; ++j)
    if (cand[j] < cand[k]) k = j;
  return {index, cand[k], TouchSpecies(k)};
}

template <class T>
struct Hart {
  Conic<T> conic;
  Vec3<T> center;
  T radius;
  Vec3<T> feuerbach;
  std::array<Touch<T>, 4> tangencies;
};

template <class T>
inline Hart<T> hart_circle(const Frame<T>& f) {
  Vec3<T> g = center(CenterId::Gsharp, f), h = center(CenterId::Hsharp, f), n = center(CenterId::Nsharp, f);
  Hart<T> r{bicevian_conic(g, h), n, bary_distance(f, n, Vec3<T>{0, g[1], g[2]}), center(CenterId::Fe, f), {}};
  for (int i = 0; i < 4; ++i)
    r.tangencies[i] = touch(bary_distance(f, n, center(CenterId::I, f, i)), r.radius, inradius(f, i), i);
  return r;
}

// Centers of the circles through two vertices and the two H#-traces on
// their sides; k names the third vertex (k = 2: A, B, A_H#, B_H#).
template <class T>
inline Vec3<T> sharp_cevian_circle_center(const Frame<T>& f, int k) {
  const T h[3] = {std::cos(f.a / 2), std::cos(f.b / 2), std::cos(f.c / 2)};
  const T q[3] = {f.ua / 2, f.ub / 2, f.uc / 2};
  int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
  T d1 = h[k1] + h[k2] * h[k], d2 = h[k2] + h[k1] * h[k];
  if (d1 == 0 || d2 == 0) fail(ErrorKind::UndefinedCenter, "vanishing c_{a/2} + c_{b/2}c_{c/2}");
  Vec3<T> r;
  r[k1] = h[k1] / d1;
  r[k2] = h[k2] / d2;
  r[k] = h[k] * q[k] / (d1 * d2);
  return r;
}

template <class T>
inline Triple<T> sharp_cevian_circle_centers(const Frame<T>& f) {
  return {sharp_cevian_circle_center(f, 0), sharp_cevian_circle_center(f, 1), sharp_cevian_circle_center(f, 2)};
}

// Power circles C(A_G, A), C(B_G, B), C(C_G, C).
template <class T>
inline std::array<CircleData<T>, 3> power_circles(const Frame<T>& f) {
  const Vec3<T> mid[3] = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  const Vec3<T> E[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  std::array<CircleData<T>, 3> out;
  for (int k = 0; k < 3; ++k)
    out[k] = {mid[k], std::abs(star(f, mid[k], E[k])) / (star_norm(f, mid[k]) * star_norm(f, E[k]))};
  return out;
}

// Power of x with respect to a circle: cos d(x, M) / cos r.
template <class T>
inline T circle_power_ratio(const Frame<T>& f, const Vec3<T>& x, const CircleData<T>& c) {
  return std::abs(star(f, x, c.center)) / (star_norm(f, x) * star_norm(f, c.center) * c.cosradius);
}

}  // namespace ek
