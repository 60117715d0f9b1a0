#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "lines.hpp"

namespace ek::verify {

// Thrown by a check when the sampled configuration lies outside its domain.
struct Skip {};

inline bool skippable(ErrorKind k) {
  return k == ErrorKind::UndefinedCenter || k == ErrorKind::IsoscelesDegeneracy ||
         k == ErrorKind::EquilateralDegeneracy;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <class T>
struct Ctx {
  const Frame<T>& f;
  std::mt19937_64 rng;
  std::vector<std::optional<Vec3<T>>>* cache;

  Vec3<T> c(CenterId id) {
    auto& slot = (*cache)[static_cast<std::size_t>(id)];
    if (!slot) slot = center(id, f);
    return *slot;
  }
  Vec3<T> c(CenterId id, int i) { return i == 0 ? c(id) : center(id, f, i); }

  T gauss() { return std::normal_distribution<T>()(rng); }
  T uniform(T lo, T hi) { return std::uniform_real_distribution<T>(lo, hi)(rng); }
  Vec3<T> rand_vec() { return {gauss(), gauss(), gauss()}; }
  Vec3<T> rand_unit() { return unit(rand_vec()); }
  // Barycentric point strictly inside the base triangle.
  Vec3<T> rand_interior() {
    Vec3<T> w;
    for (auto& x : w) x = -std::log(uniform(T(1e-3), T(1)));
    return w;
  }
};

template <class T>
struct Check {
  std::string name;
  std::string statement;
  double tol;
  bool informational = false;
  std::function<T(Ctx<T>&)> fn;
};

namespace detail {

template <class T>
inline const Vec3<T>& e(int k) {
  static const Vec3<T> E[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  return E[k % 3];
}

template <class T>
inline void upd(T& m, T r) {
  if (!(r <= m)) m = r;  // NaN propagates as a failure
}

template <class T>
inline Point<T> amb(const Frame<T>& f, const Vec3<T>& x) {
  return Point<T>{ambient(f, x)};
}

template <class T>
inline Vec3<T> ambient_pedal(const Frame<T>& f, const Vec3<T>& line, const Vec3<T>& x) {
  return pedal(to_ambient_line(f, BLine<T>{line}), amb(f, x)).v;
}

// Points on a cubic along a few random lines.
template <class T>
inline std::vector<Vec3<T>> cubic_samples(Ctx<T>& cx, const Cubic<T>& q, int lines) {
  std::vector<Vec3<T>> out;
  for (int k = 0; k < lines; ++k)
    for (auto& x : cubic_points_on_line(q, cx.rand_vec(), cx.rand_vec())) out.push_back(x);
  return out;
}

// The identities T T^-1 = I and its 1/S variant cannot be resolved below
// eps * cond(T); frames where that exceeds 1e-13 are outside their domain.
template <class T>
inline void require_resolvable(const Frame<T>& f) {
  auto inf_norm = [](const Mat3<T>& m) {
    T r = 0;
    for (auto& row : m) r = std::max(r, std::abs(row[0]) + std::abs(row[1]) + std::abs(row[2]));
    return r;
  };
  T kappa = inf_norm(f.Tm) * inf_norm(f.inverse());
  if (kappa * std::numeric_limits<T>::epsilon() > T(1e-13)) throw Skip{};
}

template <class T>
inline T sum_staudtians(const Frame<T>& f, const Vec3<T>& p) {
  Vec3<T> P = ambient(f, p);
  return staudtian_of(P, f.B, f.C) + staudtian_of(f.A, P, f.C) + staudtian_of(f.A, f.B, P);
}

}  // namespace detail

// The full registry, in report order.
template <class T>
inline std::vector<Check<T>> registry() {
  using V = Vec3<T>;
  using detail::e;
  using detail::upd;
  using detail::amb;
  std::vector<Check<T>> r;
  auto add = [&](std::string name, std::string statement, double tol, std::function<T(Ctx<T>&)> fn,
                 bool info = false) { r.push_back({std::move(name), std::move(statement), tol, info, std::move(fn)}); };

  // projective plane
  add("proj.join_meet_duality", "dual(P v Q) = dual(P) ^ dual(Q)", 1e-12, [](Ctx<T>& cx) {
    Point<T> p{cx.rand_unit()}, q{cx.rand_unit()};
    return proj_gap(dual(join(p, q)).v, meet(dual(p), dual(q)).v);
  });
  add("proj.cross_ratio_swap", "(P,Q;R,S)(P,Q;S,R) = 1", 1e-10, [](Ctx<T>& cx) {
    V p = cx.rand_unit(), q = cx.rand_unit();
    auto coef = [&] { return (cx.uniform(0, 1) < 0.5 ? -1 : 1) * cx.uniform(T(0.2), T(2)); };
    V rr = coef() * p + coef() * q, s = coef() * p + coef() * q;
    return std::abs(cross_ratio(p, q, rr, s) * cross_ratio(p, q, s, rr) - 1);
  });
  add("proj.canonical_idempotent", "canonical(canonical(v)) = canonical(v) bit for bit", 0, [](Ctx<T>& cx) {
    V v = std::pow(T(10), cx.uniform(-3, 3)) * cx.rand_vec();
    V c1 = canonical(v), c2 = canonical(c1);
    return T(c1 == c2 ? 0 : 1);
  });
  add("proj.harmonic_midpoints", "(P,Q;M+,M-) = -1 for the two midpoints", 1e-10, [](Ctx<T>& cx) {
    Point<T> p{cx.rand_unit()}, q{cx.rand_unit()};
    auto [m1, m2] = midpoints(p, q);
    return std::abs(cross_ratio(p, q, m1, m2) + 1);
  });

  // elliptic metric
  add("metric.triangle_inequality", "d(X,Z) <= d(X,Y) + d(Y,Z)", 1e-12, [](Ctx<T>& cx) {
    V x = cx.rand_unit(), y = cx.rand_unit(), z = cx.rand_unit();
    T dxy = distance(x, y), dyz = distance(y, z), dxz = distance(x, z);
    return std::max({T(0), dxz - dxy - dyz, dxy - dxz - dyz, dyz - dxy - dxz});
  });
  add("metric.segment_pairing", "mu[P,Q]+ + mu[P,Q]- = pi", 1e-12, [](Ctx<T>& cx) {
    Point<T> p{cx.rand_vec()}, q{cx.rand_vec()};
    return std::abs(segment_measure(p, q, Branch::Plus) + segment_measure(p, q, Branch::Minus) - pi_v<T>);
  });
  add("metric.perp_pedal", "perp(l,P) passes through P and pedal(l,P) and is orthogonal to l", 1e-12,
      [](Ctx<T>& cx) {
        Line<T> l{cx.rand_unit()};
        Point<T> p{cx.rand_unit()};
        Line<T> m = perp(l, p);
        Point<T> ft = pedal(l, p);
        return std::max({incidence(m, p), incidence(m, ft), incidence(l, ft), incidence(m, dual(l))});
      });
  add("metric.par_double_perp", "perp(perp(l,P),P) passes through P and is orthogonal to perp(l,P)", 1e-12,
      [](Ctx<T>& cx) {
        Line<T> l{cx.rand_unit()};
        Point<T> p{cx.rand_unit()};
        Line<T> m = perp(l, p), k = perp(m, p);
        return std::max({incidence(k, p), incidence(k, dual(m)), proj_gap(k.v, par(l, p).v)});
      });
  add("metric.reflection_isometry", "d(rho_S X, rho_S Y) = d(X,Y)", 1e-10, [](Ctx<T>& cx) {
    Point<T> x{cx.rand_unit()}, y{cx.rand_unit()}, s{cx.rand_unit()};
    return std::abs(distance(reflect_point(x, s), reflect_point(y, s)) - distance(x, y));
  });
  add("metric.circle_reflection", "reflecting a point of a circle in its center stays on the circle", 1e-10,
      [](Ctx<T>& cx) {
        V m = cx.rand_unit();
        V u = unit(cross(m, cx.rand_vec())), w = cross(m, u);
        T rad = cx.uniform(T(0.05), T(1.5)), t = cx.uniform(0, 2 * pi_v<T>);
        Point<T> x{std::cos(rad) * m + std::sin(rad) * (std::cos(t) * u + std::sin(t) * w)};
        auto c = circle_through(Point<T>{m}, x);
        T res = 0;
        for (int k = 0; k < 4; ++k) {
          T t2 = cx.uniform(0, 2 * pi_v<T>);
          Point<T> y{std::cos(rad) * m + std::sin(rad) * (std::cos(t2) * u + std::sin(t2) * w)};
          upd(res, circle_residual(reflect_point(y, Point<T>{m}), c));
        }
        return std::max(res, circle_residual(reflect_point(x, Point<T>{m}), c));
      });
  add("metric.radical_axis", "points of a radical axis have equal power ratio to both circles", 1e-9,
      [](Ctx<T>& cx) {
        AmbientCircle<T> c1{Point<T>{cx.rand_unit()}, cx.uniform(T(0.2), T(0.95))};
        AmbientCircle<T> c2{Point<T>{cx.rand_unit()}, cx.uniform(T(0.2), T(0.95))};
        auto [g, h] = radical_axes(c1, c2);
        T res = 0;
        for (auto& l : {g, h}) {
          V x = unit(cross(l.v, cx.rand_vec()));
          T r1 = std::abs(dot(x, unit(c1.center.v))) / c1.cosradius;
          T r2 = std::abs(dot(x, unit(c2.center.v))) / c2.cosradius;
          upd(res, std::abs(r1 - r2) / std::max({r1, r2, T(1e-300)}));
        }
        return res;
      });

  // triangle frame
  add("frame.inverse", "T * T^-1 = I (frames with eps * cond(T) <= 1e-13)", 1e-12, [](Ctx<T>& cx) {
    detail::require_resolvable(cx.f);
    Mat3<T> p = cx.f.Tm * cx.f.inverse();
    T res = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) upd(res, std::abs(p[i][j] - (i == j ? 1 : 0)));
    return res;
  });
  add("frame.transfer", "(adj T / S)(A;B;C) = (BxC;CxA;AxB) (frames with eps * cond(T) <= 1e-13)", 1e-12,
      [](Ctx<T>& cx) {
    const auto& f = cx.f;
    detail::require_resolvable(f);
    Mat3<T> w = f.transfer() * f.vertex_matrix();
    V want[3] = {cross(f.B, f.C), cross(f.C, f.A), cross(f.A, f.B)};
    T res = 0;
    for (int k = 0; k < 3; ++k) upd(res, max_abs(w[k] - want[k]));
    return res;
  });
  add("frame.dual_triple", "dual(B v C) = [s_a^2 : -S_C : -S_B] and cyclic", 1e-10, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    T res = 0;
    for (int k = 0; k < 3; ++k) {
      V pole = cross(f.vertex((k + 1) % 3), f.vertex((k + 2) % 3));
      upd(res, proj_gap(to_bary(f, Point<T>{pole}).v, f.adjT[k]));
    }
    return res;
  });
  add("frame.trig_rules", "both cosine rules and the sine rule hold for the vertex-measured sides and angles",
      1e-12, [](Ctx<T>& cx) {
        const auto& f = cx.f;
        Point<T> A{f.A}, B{f.B}, C{f.C};
        T al = angle_measure(B, A, C), be = angle_measure(C, B, A), ga = angle_measure(A, C, B);
        T a = f.a, b = f.b, c = f.c;
        T res = 0;
        upd(res, std::abs(std::cos(al) - (std::cos(a) - std::cos(b) * std::cos(c)) / (std::sin(b) * std::sin(c))));
        upd(res, std::abs(std::cos(be) - (std::cos(b) - std::cos(c) * std::cos(a)) / (std::sin(c) * std::sin(a))));
        upd(res, std::abs(std::cos(a) - (std::cos(al) + std::cos(be) * std::cos(ga)) / (std::sin(be) * std::sin(ga))));
        upd(res, std::abs(std::cos(c) - (std::cos(ga) + std::cos(al) * std::cos(be)) / (std::sin(al) * std::sin(be))));
        T ra = std::sin(a) / std::sin(al), rb = std::sin(b) / std::sin(be), rc = std::sin(c) / std::sin(ga);
        upd(res, std::abs(ra - rb) / ra);
        upd(res, std::abs(ra - rc) / ra);
        upd(res, std::abs(al - f.alpha) + std::abs(be - f.beta) + std::abs(ga - f.gamma));
        return res;
      });
  add("frame.staudtian_altitude", "n = (1/2) sin a sin h_a = (1/2) sin a sin b sin gamma", 1e-12, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    Point<T> A{f.A};
    T ha = distance(A, pedal(join(Point<T>{f.B}, Point<T>{f.C}), A));
    return std::max(std::abs(f.staudtian - std::sin(f.a) * std::sin(ha) / 2),
                    std::abs(f.staudtian - std::sin(f.a) * std::sin(f.b) * std::sin(f.gamma) / 2));
  });
  add("frame.staudtian_representation", "P = [n(PBC) : n(APC) : n(ABP)] for interior P", 1e-10, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    T res = 0;
    for (int k = 0; k < 5; ++k) {
      V p = cx.rand_interior(), P = ambient(f, p);
      V n{staudtian_of(P, f.B, f.C), staudtian_of(f.A, P, f.C), staudtian_of(f.A, f.B, P)};
      upd(res, proj_gap(n, to_bary(f, Point<T>{P}).v));
    }
    return res;
  });
  add("frame.staudtian_inequality", "n(BPC) + n(CPA) + n(APB) > n(ABC) for interior P", 0, [](Ctx<T>& cx) {
    T bad = 0;
    for (int k = 0; k < 10; ++k)
      if (!(detail::sum_staudtians(cx.f, cx.rand_interior()) > cx.f.staudtian)) bad += 1;
    return bad;
  });
  add("frame.staudtian_max_at_I", "n(BPC) + n(CPA) + n(APB) is locally maximal at P = I", 0,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        V I = unit(ambient(f, cx.c(CenterId::I)));
        T s0 = detail::sum_staudtians(f, to_bary(f, Point<T>{I}).v);
        T step = T(1e-2) * inradius(f);
        T res = 0;
        for (int k = 0; k < 10; ++k) {
          V P = unit(I + step * cx.rand_unit());
          upd(res, std::max(T(0), (detail::sum_staudtians(f, to_bary(f, Point<T>{P}).v) - s0) / s0));
        }
        return res;
      },
      true);
  add("frame.excess_total", "the excesses of the four triangles add up to 2 pi", 1e-12, [](Ctx<T>& cx) {
    T s = 0;
    for (int i = 0; i < 4; ++i) s += with_index(cx.f, i).excess;
    return std::abs(s - 2 * pi_v<T>);
  });
  add("frame.synthesis_roundtrip", "vertices synthesized from (a,b,c) have sides a, b, c", 1e-12, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    auto v = synthesize_vertices(f.a, f.b, f.c);
    using ek::detail::side_between;
    return std::max({std::abs(side_between(v[1], v[2]) - f.a), std::abs(side_between(v[2], v[0]) - f.b),
                     std::abs(side_between(v[0], v[1]) - f.c), std::abs(std::abs(det3(v[0], v[1], v[2])) - std::abs(f.S))});
  });

  // cevian apparatus
  add("cevian.tripole_roundtrip", "tripole(tripolar(p)) = p", 1e-10, [](Ctx<T>& cx) {
    V p = cx.rand_vec();
    return proj_gap(tripole(tripolar(p)), p);
  });
  add("cevian.tripolar_collinear", "the harmonic conjugates of the traces lie on the tripolar", 1e-12,
      [](Ctx<T>& cx) {
        V p = cx.rand_vec();
        auto t = trace_conjugates(p);
        V l = tripolar(p);
        T res = std::abs(det_residual(t[0], t[1], t[2]));
        for (auto& x : t) upd(res, incidence(l, x));
        return res;
      });
  add("cevian.ktilde_isoconjugate", "Ktilde-isoconjugates of circumcircle points lie on the tripolar of G", 1e-9,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        V kt = cx.c(CenterId::Ktilde);
        T res = 0;
        for (auto& x : sample_conic(circumcircle(f), 5, e<T>(int(cx.rng() % 3)))) {
          if (std::min({std::abs(x[0]), std::abs(x[1]), std::abs(x[2])}) < T(1e-6) * max_abs(x)) continue;
          upd(res, bary_incidence(f, V{1, 1, 1}, isoconjugate(kt, x)));
        }
        return res;
      });
  add("cevian.antipedal_pedal", "the pedal of P on each side of its antipedal triangle is the vertex on it", 1e-10,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        V p = cx.rand_vec();
        auto ap = antipedal_triple(f, p);
        T res = 0;
        for (int k = 0; k < 3; ++k)
          upd(res, proj_gap(detail::ambient_pedal(f, bary_join(ap[(k + 1) % 3], ap[(k + 2) % 3]), p), f.vertex(k)));
        return res;
      });
  add("cevian.chasles", "the altitudes A v dual(B v C) meet at H", 1e-10, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    V h = cx.c(CenterId::H);
    T res = 0;
    for (int k = 0; k < 3; ++k) upd(res, bary_incidence(f, bary_join(e<T>(k), f.adjT[k]), h));
    return res;
  });
  add("cevian.pedal_O", "the pedals of O are the side midpoints", 1e-10, [](Ctx<T>& cx) {
    auto pd = pedal_triple(cx.f, cx.c(CenterId::O));
    T res = 0;
    for (int k = 0; k < 3; ++k) upd(res, proj_gap(pd[k], e<T>(k + 1) + e<T>(k + 2)));
    return res;
  });

  // centers
  add("centers.harmonic_associates", "G_i and I_i are the harmonic associates of G and I", 1e-12, [](Ctx<T>& cx) {
    T res = 0;
    for (auto id : {CenterId::G, CenterId::I}) {
      auto h = harmonic_associates(cx.c(id));
      for (int i = 1; i <= 3; ++i) upd(res, proj_gap(h[i - 1], cx.c(id, i)));
    }
    return res;
  });
  add("centers.H_absolute", "H = H_1 = H_2 = H_3", 1e-12, [](Ctx<T>& cx) {
    T res = 0;
    for (int i = 1; i <= 3; ++i) upd(res, proj_gap(cx.c(CenterId::H, i), cx.c(CenterId::H)));
    return res;
  });
  add("centers.O_equidistant", "d(O,A) = d(O,B) = d(O,C) = R", 1e-10, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    V o = cx.c(CenterId::O);
    T R = circumradius(f), res = 0;
    for (int k = 0; k < 3; ++k) upd(res, std::abs(bary_distance(f, o, e<T>(k)) - R));
    return res;
  });
  add("centers.I_equidistant", "I is at distance r from its three pedals, cos r = 2 sin s / kappa", 1e-10,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        V in = cx.c(CenterId::I);
        auto pd = pedal_triple(f, in);
        T cr = inradius_cos(f), r = inradius(f), res = 0;
        for (auto& x : pd) {
          T d = bary_distance(f, in, x);
          upd(res, std::abs(d - r));
          upd(res, std::abs(std::cos(d) - cr));
        }
        return res;
      });
  add("centers.Ge_traces", "the traces of Ge are the pedals of I", 1e-10, [](Ctx<T>& cx) {
    auto t = traces(cx.c(CenterId::Ge));
    auto pd = pedal_triple(cx.f, cx.c(CenterId::I));
    T res = 0;
    for (int k = 0; k < 3; ++k) upd(res, proj_gap(t[k], pd[k]));
    return res;
  });
  add("centers.isogonal", "O+ and H- are the isogonal conjugates of H and O", 1e-10, [](Ctx<T>& cx) {
    V k = cx.c(CenterId::K);
    return std::max(proj_gap(isoconjugate(k, cx.c(CenterId::H)), cx.c(CenterId::Oplus)),
                    proj_gap(isoconjugate(k, cx.c(CenterId::O)), cx.c(CenterId::Hminus)));
  });
  add("centers.ktilde_conj_O", "the Ktilde-conjugate of O lies on G v O", 1e-10, [](Ctx<T>& cx) {
    V q = isoconjugate(cx.c(CenterId::Ktilde), cx.c(CenterId::O));
    return std::max(bary_incidence(cx.f, bary_join(cx.c(CenterId::G), cx.c(CenterId::O)), q),
                    proj_gap(q, cx.c(CenterId::KtildeConjO)));
  });
  add("centers.Hminus_perspector", "A v O_1, B v O_2, C v O_3 concur at H-", 1e-10, [](Ctx<T>& cx) {
    V hm = cx.c(CenterId::Hminus);
    T res = 0;
    for (int k = 0; k < 3; ++k) upd(res, bary_incidence(cx.f, bary_join(e<T>(k), cx.c(CenterId::O, k + 1)), hm));
    return res;
  });
  add("centers.Gsharp_area", "each cevian of G# cuts the triangle into two triangles of excess epsilon", 1e-9,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        auto t = traces(cx.c(CenterId::Gsharp));
        T res = 0;
        for (int k = 0; k < 3; ++k) {
          V foot = ambient(f, t[k]);
          V v0 = f.vertex(k), v1 = f.vertex((k + 1) % 3), v2 = f.vertex((k + 2) % 3);
          upd(res, std::abs(excess_of(v0, v1, foot) - f.eps()));
          upd(res, std::abs(excess_of(v0, foot, v2) - f.eps()));
        }
        return res;
      });
  add("centers.angle_form", "side-form and angle-form center functions agree on all four triangles", 1e-10,
      [](Ctx<T>& cx) {
        T res = 0;
        for (auto& in : center_table) {
          if (!in.has_angle_form) continue;
          for (int i = 0; i < 4; ++i) {
            try {
              upd(res, proj_gap(center(in.id, cx.f, i), center_angle_form(in.id, cx.f, i)));
            } catch (const Error& er) {
              if (!skippable(er.kind())) throw;
            }
          }
        }
        return res;
      });
  add("centers.dual_circumradius", "I is equidistant from the dual triple", 1e-10, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    T rr = dual_circumradius(f), res = 0;
    for (int k = 0; k < 3; ++k) upd(res, std::abs(bary_distance(f, cx.c(CenterId::I), f.adjT[k]) - rr));
    return res;
  });
  add("centers.triplex_circum", "T<A> lies on the circumcircle and equals (B v T_C) ^ (C v T_B)", 1e-10,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        auto cc = circumcircle(f);
        T res = 0;
        for (int k = 0; k < 3; ++k) {
          int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
          V t = vertex_center(VertexCenterId::TriplexCircum, k, f);
          upd(res, conic_residual(cc, t));
          V m = bary_meet(bary_join(e<T>(k1), vertex_center(VertexCenterId::Triplex, k2, f)),
                          bary_join(e<T>(k2), vertex_center(VertexCenterId::Triplex, k1, f)));
          upd(res, proj_gap(m, t));
        }
        return res;
      });
  add("centers.triplex_on_median", "T<A> lies on the cevian A v A^G", 1e-10,
      [](Ctx<T>& cx) {
        T res = 0;
        for (int k = 0; k < 3; ++k) {
          V t = unit(vertex_center(VertexCenterId::TriplexCircum, k, cx.f));
          upd(res, std::abs(t[(k + 1) % 3] - t[(k + 2) % 3]));
        }
        return res;
      },
      true);

  // conics
  add("conics.pole_polar", "pole(polar(p)) = p", 1e-10, [](Ctx<T>& cx) {
    V a = cx.rand_vec(), b = cx.rand_vec();
    Conic<T> c{symmetric(a[0], a[1], a[2], b[0], b[1], b[2])};
    V p = cx.rand_vec();
    return proj_gap(pole(polar(p, c), c), p);
  });
  add("conics.adjoint", "adj(M) M = det(M) I", 1e-12, [](Ctx<T>& cx) {
    V a = cx.rand_vec(), b = cx.rand_vec();
    Mat3<T> m = symmetric(a[0], a[1], a[2], b[0], b[1], b[2]);
    Mat3<T> p = adjoint(m) * m;
    T d = det(m), n = frob(m), res = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) upd(res, std::abs(p[i][j] - (i == j ? d : 0)) / (n * n * n));
    return res;
  });
  add("conics.perspector_roundtrip", "the perspector of circumconic(p) and of inconic(p) is p", 1e-10,
      [](Ctx<T>& cx) {
        T res = 0;
        for (int k = 0; k < 4; ++k) {
          V p = cx.rand_vec();
          upd(res, proj_gap(conic_perspector(circumconic(p)), p));
          upd(res, proj_gap(conic_perspector(inconic(p)), p));
        }
        return res;
      });
  add("conics.perspectors_known", "perspectors: T -> H, circumcircle -> Ktilde, incircle -> Ge", 1e-10,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        return std::max({proj_gap(conic_perspector(Conic<T>{f.Tm}), cx.c(CenterId::H)),
                         proj_gap(conic_perspector(circumcircle(f)), cx.c(CenterId::Ktilde)),
                         proj_gap(conic_perspector(incircle(f)), cx.c(CenterId::Ge))});
      });
  add("conics.center_to_perspector", "the circumconic centered at O has perspector Ktilde", 1e-10, [](Ctx<T>& cx) {
    return proj_gap(circumconic_center_to_perspector(cx.f, cx.c(CenterId::O)), cx.c(CenterId::Ktilde));
  });
  add("conics.circumcircle", "the circumcircle passes through A, B, C and has center O and radius R", 1e-10,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        auto c = circumcircle(f);
        T res = 0;
        for (int k = 0; k < 3; ++k) upd(res, conic_residual(c, e<T>(k)));
        auto cd = circle_of(f, c);
        upd(res, proj_gap(cd.center, cx.c(CenterId::O)));
        upd(res, std::abs(cd.cosradius - std::cos(circumradius(f))));
        return res;
      });
  add("conics.incircle", "the incircle touches the sides at the pedals of I and has center I", 1e-9,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        auto c = incircle(f);
        T res = 0;
        for (auto& x : pedal_triple(f, cx.c(CenterId::I))) upd(res, conic_residual(c, x));
        auto cd = circle_of(f, c);
        upd(res, proj_gap(cd.center, cx.c(CenterId::I)));
        upd(res, std::abs(cd.cosradius - inradius_cos(f)));
        return res;
      });
  add("conics.circumconic_eigen", "[1:1:1] is a symmetry point of the circumconic with perspector [1+2c_a:...]",
      1e-10, [](Ctx<T>& cx) {
        const auto& f = cx.f;
        auto c = circumconic(V{1 + 2 * f.ca, 1 + 2 * f.cb, 1 + 2 * f.cc});
        V w = f.adjT * (c.m * V{1, 1, 1});
        T lam = (w[0] + w[1] + w[2]) / 3;
        return std::max(proj_gap(w, V{1, 1, 1}), std::abs(lam - f.S2) / (frob(f.adjT) * frob(c.m)));
      });
  add("conics.ellipse_symmetry",
      "a proper ellipse has three mutually orthogonal symmetry points whose reflections preserve it", 1e-8,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        V p = cx.rand_vec(), q = cx.rand_vec();
        auto c = bicevian_conic(p, q);
        if (classify(f, c).kind != ConicKind::ProperEllipse) throw Skip{};
        auto s = symmetry_points(f, c);
        if (s.points.size() != 3) return T(1);
        T res = 0;
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j)
            upd(res, std::abs(star(f, s.points[i], s.points[j])) / (star_norm(f, s.points[i]) * star_norm(f, s.points[j])));
        for (auto& x : sample_conic(c, 6, traces(p)[0]))
          for (auto& y : s.points) upd(res, conic_residual(c, unit(bary_reflect(f, x, y))));
        return res;
      });
  add("conics.bicevian_traces", "the bicevian conic of P and Q passes through all six traces", 1e-10,
      [](Ctx<T>& cx) {
        V p = cx.rand_vec(), q = cx.rand_vec();
        auto c = bicevian_conic(p, q);
        T res = 0;
        for (auto& x : traces(p)) upd(res, conic_residual(c, x));
        for (auto& x : traces(q)) upd(res, conic_residual(c, x));
        return res;
      });
  add("conics.circumcevian", "the traces of P and of each circumcevian conjugate are concyclic", 1e-9,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        V p = cx.rand_vec();
        auto tp = traces(p);
        T res = 0;
        for (auto& cc : circumcevian_conjugates(f, p)) {
          auto tq = traces(cc.conjugate);
          for (int k = 0; k < 3; ++k) {
            upd(res, std::abs(bary_distance(f, cc.center, tp[k]) - cc.radius));
            upd(res, std::abs(bary_distance(f, cc.center, tq[k]) - cc.radius));
          }
        }
        return res;
      });
  add("conics.bicevian_circle", "the bicevian conic of P and a circumcevian conjugate is a circle", 0,
      [](Ctx<T>& cx) {
        T bad = 0;
        V p = cx.rand_vec();
        for (auto& cc : circumcevian_conjugates(cx.f, p))
          if (classify(cx.f, bicevian_conic(p, cc.conjugate)).kind != ConicKind::Circle) bad += 1;
        return bad;
      });
  add("conics.bicevian_circle_center", "that circle is centered at the circumcevian center", 1e-8, [](Ctx<T>& cx) {
    V p = cx.rand_vec();
    T res = 0;
    for (auto& cc : circumcevian_conjugates(cx.f, p)) {
      auto c = bicevian_conic(p, cc.conjugate);
      if (classify(cx.f, c).kind != ConicKind::Circle) return T(1);
      upd(res, proj_gap(circle_of(cx.f, c).center, cc.center));
    }
    return res;
  });
  add("conics.lemoine_six", "the six Lemoine points lie on one conic", 1e-9, [](Ctx<T>& cx) {
    auto lp = lemoine_points(cx.f);
    return conic_residual(lemoine_conic(cx.f), lp.six[5]);
  });
  add("conics.lemoine_dual_line", "the three auxiliary Lemoine points lie on the dual of Ktilde", 1e-10,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        V l = bary_dual_point(f, cx.c(CenterId::Ktilde));
        T res = 0;
        for (auto& x : lemoine_points(f).on_dual) upd(res, bary_incidence(f, l, x));
        return res;
      });
  add("conics.lemoine_symmetry", "the dual of K v O is a symmetry point of the Lemoine conic", 1e-9,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        V sp = bary_dual_line(f, bary_join(cx.c(CenterId::K), cx.c(CenterId::O)));
        return proj_gap(lemoine_conic(f).m * sp, f.Tm * sp);
      });
  add("conics.lemoine_pole", "the pole of dual(Ktilde) for the Lemoine conic lies on K v O", 1e-9, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    V ko = bary_join(cx.c(CenterId::K), cx.c(CenterId::O));
    return bary_incidence(f, ko, pole(bary_dual_point(f, cx.c(CenterId::Ktilde)), lemoine_conic(f)));
  });
  add("conics.lemoine_display", "the closed-form Lemoine conic passes through the six Lemoine points", 1e-9,
      [](Ctx<T>& cx) {
        auto d = lemoine_conic_display(cx.f);
        T res = 0;
        for (auto& x : lemoine_points(cx.f).six) upd(res, conic_residual(d, x));
        return res;
      },
      true);
  add("conics.apollonian", "the apollonian circles pass through their vertex and through t+ and t-, centers on the Lemoine axis",
      1e-10, [](Ctx<T>& cx) {
        const auto& f = cx.f;
        auto ap = apollonian_circles(f);
        auto [tp, tm] = apollonian_common_points(f);
        V la = central_line(LineId::LemoineAxis, f);
        T res = 0;
        for (int k = 0; k < 3; ++k) {
          T rad = ap[k].radius();
          upd(res, std::abs(bary_distance(f, ap[k].center, e<T>(k)) - rad));
          upd(res, std::abs(bary_distance(f, ap[k].center, tp) - rad));
          upd(res, std::abs(bary_distance(f, ap[k].center, tm) - rad));
          upd(res, bary_incidence(f, la, ap[k].center));
        }
        return res;
      });
  add("conics.euler_feuerbach", "the traces of H- and of G_0..G_3 lie on the Euler-Feuerbach cubic", 1e-9,
      [](Ctx<T>& cx) {
        auto ef = euler_feuerbach_cubic(cx.f);
        T res = 0;
        for (auto& x : traces(cx.c(CenterId::Hminus))) upd(res, cubic_residual(ef, x));
        for (int i = 0; i < 4; ++i)
          for (auto& x : traces(cx.c(CenterId::G, i))) upd(res, cubic_residual(ef, x));
        return res;
      });
  add("conics.euler_feuerbach_pedals", "points of the Euler-Feuerbach cubic have collinear pedals on the medial sidelines",
      1e-8, [](Ctx<T>& cx) {
        const auto& f = cx.f;
        auto ef = euler_feuerbach_cubic(f);
        const V m[3] = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
        T res = 0;
        for (auto& x : detail::cubic_samples(cx, ef, 3)) {
          V pd[3];
          for (int k = 0; k < 3; ++k) pd[k] = detail::ambient_pedal(f, bary_join(m[(k + 1) % 3], m[(k + 2) % 3]), x);
          upd(res, std::abs(det_residual(pd[0], pd[1], pd[2])));
        }
        return res;
      });
  add("conics.simson_pedal_on", "points of the Simson locus have collinear pedals", 1e-8, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    T res = 0;
    for (auto& x : detail::cubic_samples(cx, simson_locus(f), 3)) {
      auto pd = pedal_triple(f, x);
      upd(res, std::abs(det_residual(ambient(f, pd[0]), ambient(f, pd[1]), ambient(f, pd[2]))));
    }
    return res;
  });
  add("conics.simson_pedal_off", "points off the Simson locus have non-collinear pedals", 0, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    auto q = simson_locus(f);
    T bad = 0;
    for (int k = 0; k < 5; ++k) {
      V x = cx.rand_vec();
      if (cubic_residual(q, x) < T(1e-3)) continue;
      auto pd = pedal_triple(f, x);
      // rounding noise is near 1e-18
      if (std::abs(det_residual(ambient(f, pd[0]), ambient(f, pd[1]), ambient(f, pd[2]))) < T(1e-13)) bad += 1;
    }
    return bad;
  });
  add("conics.simson_dual_vertices", "the dual triple lies on the Simson locus", 1e-9, [](Ctx<T>& cx) {
    auto q = simson_locus(cx.f);
    T res = 0;
    for (auto& x : dual_triple(cx.f)) upd(res, cubic_residual(q, x));
    return res;
  });
  add("conics.simson_extra_points", "[-S_B S_C : s_b^2 S_B : s_c^2 S_C] and cyclic lie on the Simson locus", 1e-9,
      [](Ctx<T>& cx) {
        auto q = simson_locus(cx.f);
        T res = 0;
        for (auto& x : simson_extra_points(cx.f)) upd(res, cubic_residual(q, x));
        return res;
      });
  add("conics.simson_extra_points_cosine_form", "[-S_B S_C : c_b^2 S_B : c_c^2 S_C] and cyclic lie on the Simson locus",
      1e-9,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        auto q = simson_locus(f);
        T a2 = f.ca * f.ca, b2 = f.cb * f.cb, c2 = f.cc * f.cc;
        V pts[3] = {{-f.SB * f.SC, b2 * f.SB, c2 * f.SC}, {a2 * f.SA, -f.SC * f.SA, c2 * f.SC},
                    {a2 * f.SA, b2 * f.SB, -f.SA * f.SB}};
        T res = 0;
        for (auto& x : pts) upd(res, cubic_residual(q, x));
        return res;
      },
      true);
  add("conics.simson_tripoles", "tripoles of Simson lines lie on the Simson cubic", 1e-8, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    auto sc = simson_cubic(f);
    T res = 0;
    for (auto& x : detail::cubic_samples(cx, simson_locus(f), 2)) {
      auto pd = pedal_triple(f, x);
      V l = bary_join(pd[0], pd[1]);
      if (std::min({std::abs(l[0]), std::abs(l[1]), std::abs(l[2])}) < T(1e-9) * max_abs(l)) continue;
      upd(res, cubic_residual(sc, tripole(l)));
    }
    return res;
  });
  add("conics.simson_dual_points", "dual points of Simson lines lie on the Simson locus", 1e-8, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    auto q = simson_locus(f);
    T res = 0;
    for (auto& x : detail::cubic_samples(cx, q, 2)) {
      auto pd = pedal_triple(f, x);
      upd(res, cubic_residual(q, bary_dual_line(f, bary_join(pd[0], pd[1]))));
    }
    return res;
  });
  add("conics.pencil_cubic", "symmetry points of the circumconics through P lie on one cubic", 1e-10,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        V p = cx.rand_vec();
        auto q = pencil_cubic(f, p);
        T res = 0;
        for (int k = 0; k < 4; ++k) {
          auto c = pencil_member(p, cx.uniform(0, pi_v<T>));
          if (classify(f, c).kind == ConicKind::LinePair) continue;
          for (auto& x : symmetry_points(f, c).points) upd(res, cubic_residual(q, x));
        }
        return res;
      });
  add("conics.euler_feuerbach_in_pencil", "the Euler-Feuerbach cubic is the symmetry-point cubic of the circumconics through H-",
      1e-9,
      [](Ctx<T>& cx) {
        auto ef = euler_feuerbach_cubic(cx.f);
        auto pc = pencil_cubic(cx.f, cx.c(CenterId::Hminus));
        T d = 0;
        for (int k = 0; k < 10; ++k) d += ef.c[k] * pc.c[k];
        return 1 - std::abs(d) / (cubic_norm(ef) * cubic_norm(pc));
      },
      true);

  // central lines
  const std::pair<LineId, const char*> roster_lines[] = {
      {LineId::Orthoaxis, "roster.orthoaxis"}, {LineId::GO, "roster.GO"},
      {LineId::OK, "roster.OK"},               {LineId::Akopyan, "roster.akopyan"},
      {LineId::OrthicAxis, "roster.orthic_axis"}, {LineId::LemoineAxis, "roster.lemoine_axis"}};
  for (auto [id, nm] : roster_lines) {
    std::string st = std::string("every listed point lies on the ") + line_name(id) + " line";
    add(nm, st, 1e-10, [id = id](Ctx<T>& cx) { return roster_residual(id, cx.f); });
  }
  add("lines.join_consistency", "each central line equals the join of two of its points", 1e-10, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    T res = 0;
    for (auto id : {LineId::Orthoaxis, LineId::GO, LineId::OK, LineId::Akopyan}) {
      auto ro = roster(id, f);
      upd(res, proj_gap(central_line(id, f), bary_join(ro[0].point, ro[1].point)));
    }
    upd(res, proj_gap(central_line(LineId::OrthicAxis, f), tripolar(cx.c(CenterId::H))));
    auto lc = apollonian_centers(f);
    upd(res, proj_gap(central_line(LineId::LemoineAxis, f), bary_join(lc[0], lc[1])));
    upd(res, proj_gap(central_line(LineId::GTripolar, f), tripolar(cx.c(CenterId::G))));
    return res;
  });
  add("lines.OK_tripole", "the tripole of O v K lies on the circumcircle", 1e-10, [](Ctx<T>& cx) {
    V t = tripole(central_line(LineId::OK, cx.f));
    return std::max(conic_residual(circumcircle(cx.f), t), proj_gap(t, cx.c(CenterId::OKtripole)));
  });
  add("lines.lemoine_axis_perp", "the Lemoine axis is perpendicular to O v K", 1e-10, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    return bary_incidence(f, central_line(LineId::OK, f), bary_dual_line(f, central_line(LineId::LemoineAxis, f)));
  });
  add("lines.cevian_axis", "G#, H# and N# are collinear", 1e-9, [](Ctx<T>& cx) {
    return bary_incidence(cx.f, bary_join(cx.c(CenterId::Gsharp), cx.c(CenterId::Hsharp)), cx.c(CenterId::Nsharp));
  });
  add("lines.L_radical_center", "L has equal power with respect to the three power circles", 1e-9, [](Ctx<T>& cx) {
    auto pc = power_circles(cx.f);
    V l = cx.c(CenterId::L);
    T r0 = circle_power_ratio(cx.f, l, pc[0]), r1 = circle_power_ratio(cx.f, l, pc[1]),
      r2 = circle_power_ratio(cx.f, l, pc[2]);
    return (std::max({r0, r1, r2}) - std::min({r0, r1, r2})) / std::max({r0, r1, r2});
  });
  add("lines.L_incidences", "L lies on I v Ge and on every G_i v O_i", 1e-10, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    V l = cx.c(CenterId::L);
    T res = bary_incidence(f, bary_join(cx.c(CenterId::I), cx.c(CenterId::Ge)), l);
    for (int i = 0; i < 4; ++i) upd(res, bary_incidence(f, bary_join(cx.c(CenterId::G, i), cx.c(CenterId::O, i)), l));
    return res;
  });
  add("harmonic.GO", "(O, H-; G, L) = -1", 1e-9, [](Ctx<T>& cx) {
    return std::abs(harmonic_range_check(LineId::GO, cx.f).at(0).cross_ratio + 1);
  });
  add("harmonic.akopyan", "(O, N#; G#, H#) = -1", 1e-9, [](Ctx<T>& cx) {
    return std::abs(harmonic_range_check(LineId::Akopyan, cx.f).at(0).cross_ratio + 1);
  });
  add("vigara.identity", "(H/|H| + O+/|O+|) M (H/|H| - O+/|O+|) = 0 for the bicevian conic of H and G+", 1e-10,
      [](Ctx<T>& cx) { return vigara_symmetry(cx.f).identity_residual; });
  add("vigara.reflection", "reflections in the three symmetry points preserve the bicevian conic of H and G+", 1e-8,
      [](Ctx<T>& cx) {
        const auto& f = cx.f;
        auto vg = vigara_symmetry(f);
        V h = cx.c(CenterId::H);
        T res = 0;
        for (auto& x : sample_conic(vg.conic, 8, V{0, h[1], h[2]}))
          for (auto& s : vg.symmetry_points) upd(res, conic_residual(vg.conic, unit(bary_reflect(f, x, s))));
        return res;
      });
  add("vigara.perspector", "dual(orthoaxis) is the displayed perspector of the bicevian conic of H and G+", 1e-10,
      [](Ctx<T>& cx) {
        auto vg = vigara_symmetry(cx.f);
        return proj_gap(vg.symmetry_points[0], bicevian_perspector(cx.c(CenterId::H), cx.c(CenterId::Gplus)));
      });
  add("vigara.eigen", "the three Vigara points are eigenvectors of adj(T) M", 1e-9, [](Ctx<T>& cx) {
    auto vg = vigara_symmetry(cx.f);
    T res = 0;
    // adj(T) M s = lambda s  <=>  M s = (lambda / S^2) T s
    for (auto& s : vg.symmetry_points) upd(res, proj_gap(vg.conic.m * s, cx.f.Tm * s));
    return res;
  });
  add("hart.tangency", "the Hart circle touches the incircle and the three excircles", 1e-7, [](Ctx<T>& cx) {
    T res = 0;
    for (auto& t : hart_circle(cx.f).tangencies) upd(res, t.residual);
    return res;
  });
  add("hart.feuerbach", "Fe lies on the incircle and on the Hart circle", 1e-9, [](Ctx<T>& cx) {
    auto h = hart_circle(cx.f);
    return std::max(conic_residual(h.conic, h.feuerbach), conic_residual(incircle(cx.f), h.feuerbach));
  });
  add("hart.nsharp_lines", "N# lies on G v H and on O+ v H-", 1e-9, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    V n = cx.c(CenterId::Nsharp);
    return std::max(bary_incidence(f, bary_join(cx.c(CenterId::G), cx.c(CenterId::H)), n),
                    bary_incidence(f, bary_join(cx.c(CenterId::Oplus), cx.c(CenterId::Hminus)), n));
  });
  add("hart.circle", "the bicevian conic of G# and H# is a circle centered at N#", 1e-9, [](Ctx<T>& cx) {
    const auto& f = cx.f;
    auto h = hart_circle(f);
    if (classify(f, h.conic).kind != ConicKind::Circle) return T(1);
    auto cd = circle_of(f, h.conic);
    return std::max(proj_gap(cd.center, h.center), std::abs(cd.cosradius - std::cos(h.radius)));
  });
  add("hart.circumcevian", "H# is a circumcevian conjugate of G#", 1e-9, [](Ctx<T>& cx) {
    T best = 1;
    for (auto& cc : circumcevian_conjugates(cx.f, cx.c(CenterId::Gsharp)))
      best = std::min(best, proj_gap(cc.conjugate, cx.c(CenterId::Hsharp)));
    return best;
  });
  add("sharp.equidistance", "each sharp cevian circle center is equidistant from two vertices and two H# traces",
      1e-9, [](Ctx<T>& cx) {
        const auto& f = cx.f;
        V hs = cx.c(CenterId::Hsharp);
        T res = 0;
        for (int k = 0; k < 3; ++k) {
          int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
          V m = sharp_cevian_circle_center(f, k), t1 = hs, t2 = hs;
          t1[k1] = 0;
          t2[k2] = 0;
          T d[4] = {bary_distance(f, m, e<T>(k1)), bary_distance(f, m, e<T>(k2)), bary_distance(f, m, t1),
                    bary_distance(f, m, t2)};
          upd(res, std::max({d[0], d[1], d[2], d[3]}) - std::min({d[0], d[1], d[2], d[3]}));
        }
        return res;
      });
  add("sharp.cevian", "each sharp cevian circle center lies on a cevian of G#", 1e-9, [](Ctx<T>& cx) {
    T res = 0;
    for (int k = 0; k < 3; ++k)
      upd(res, bary_incidence(cx.f, bary_join(e<T>(k), cx.c(CenterId::Gsharp)), sharp_cevian_circle_center(cx.f, k)));
    return res;
  });
  add("limit.order",
      "tagged centers converge to their euclidean references with order 2 (shapes with all euclidean angles >= 5 deg)",
      0.3, [](Ctx<T>& cx) {
        const auto& f = cx.f;
        T m = std::max({f.a, f.b, f.c});
        T a = f.a / m, b = f.b / m, c = f.c / m;
        // needle shapes are still pre-asymptotic at lambda = 1e-2
        T ea = std::acos((b * b + c * c - a * a) / (2 * b * c)), eb = std::acos((c * c + a * a - b * b) / (2 * c * a));
        if (std::min({ea, eb, pi_v<T> - ea - eb}) < pi_v<T> / 36) throw Skip{};
        T res = 0;
        for (auto& in : center_table) {
          if (in.kimberling == 0) continue;
          T d1 = euclidean_limit_check(in.id, a, b, c, T(1e-2));
          T d2 = euclidean_limit_check(in.id, a, b, c, T(1e-3));
          if (d1 < T(1e-13)) continue;  // exact at every scale
          upd(res, std::abs(std::log10(d1 / d2) - 2));
        }
        return res;
      });
  return r;
}

struct Options {
  std::uint64_t seed = 42;
  int frames = 1000;
  double staudtian_floor = default_staudtian_floor;
  std::vector<std::string> only;                           // exact names or group prefixes
  std::vector<std::pair<std::string, double>> tolerances;  // name or group -> tolerance
  double tol_scale = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct CheckResult {
  std::string name;
  std::string statement;
  int frames_tested = 0;
  int frames_skipped = 0;
  double max_residual = 0;
  double tolerance = 0;
  int worst_frame = -1;
  bool pass = false;
  bool informational = false;
  std::string error;  // first unexpected exception, if any
};

struct Report {
  std::uint64_t seed = 0;
  int frames = 0;
  std::string precision;
  double staudtian_floor = 0;
  double tol_scale = 1;
  std::vector<CheckResult> checks;
  bool all_pass = false;
  std::string to_json() const;
  std::uint64_t hash() const { return fnv1a(to_json()); }
  const CheckResult* find(const std::string& name) const {
    for (auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline bool matches(const std::string& name, const std::string& pat) {
  return name == pat || (name.size() > pat.size() && name.compare(0, pat.size(), pat) == 0 && name[pat.size()] == '.');
}

template <class T>
inline std::string precision_name() {
  if constexpr (std::is_same_v<T, float>) return "float";
  if constexpr (std::is_same_v<T, double>) return "double";
  return "long double";
}

// Frames are drawn in sequence from one generator so frame k depends only on
// the seed and k.
template <class T>
inline std::vector<Frame<T>> generate_frames(std::uint64_t seed, int n, double floor) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<T> nd;
  std::vector<Frame<T>> out;
  out.reserve(std::max(0, n));
  while (static_cast<int>(out.size()) < n) {
    Vec3<T> v[3];
    for (auto& x : v) x = {nd(rng), nd(rng), nd(rng)};
    try {
      out.push_back(build_frame(Point<T>{v[0]}, Point<T>{v[1]}, Point<T>{v[2]}, 0, T(floor)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IllConditioned && e.kind() != ErrorKind::CollinearVertices &&
          e.kind() != ErrorKind::DegenerateInput)
        throw;
    }
  }
  return out;
}

template <class T>
inline std::vector<Check<T>> select(const Options& o) {
  auto all = registry<T>();
  std::vector<Check<T>> sel;
  for (auto& p : o.only) {
    bool hit = false;
    for (auto& c : all) hit = hit || matches(c.name, p);
    if (!hit) fail(ErrorKind::ParseError, "no check matches '" + p + "'");
  }
  for (auto& c : all) {
    bool keep = o.only.empty();
    for (auto& p : o.only) keep = keep || matches(c.name, p);
    if (!keep) continue;
    for (auto& [pat, t] : o.tolerances)
      if (matches(c.name, pat)) c.tol = t;
    c.tol *= o.tol_scale;
    sel.push_back(std::move(c));
  }
  for (auto& [pat, t] : o.tolerances) {
    bool hit = false;
    for (auto& c : sel) hit = hit || matches(c.name, pat);
    if (!hit) fail(ErrorKind::ParseError, "tolerance override '" + pat + "' matches no selected check");
  }
  return sel;
}

template <class T = long double>
inline Report run(const Options& o) {
  if (o.frames <= 0) fail(ErrorKind::ParseError, "frame count must be positive");
  if (!(o.tol_scale > 0)) fail(ErrorKind::ParseError, "tolerance scale must be positive");
  auto checks = select<T>(o);
  auto frames = generate_frames<T>(o.seed, o.frames, o.staudtian_floor);
  const std::size_t nc = checks.size(), nf = frames.size();

  struct Cell {
    double r = 0;
    int status = 0;  // 0 evaluated, 1 skipped, 2 unexpected error
    std::string err;
  };
  std::vector<Cell> cells(nc * nf);
  std::vector<std::uint64_t> name_hash(nc);
  for (std::size_t j = 0; j < nc; ++j) name_hash[j] = fnv1a(checks[j].name);
  const std::size_t ncenters = std::size(all_centers);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < nf;) {
      std::vector<std::optional<Vec3<T>>> cache(ncenters);
      for (std::size_t j = 0; j < nc; ++j) {
        Cell& cell = cells[k * nc + j];
        std::uint64_t s = splitmix64(o.seed ^ splitmix64(name_hash[j] ^ splitmix64(k)));
        Ctx<T> cx{frames[k], std::mt19937_64(s), &cache};
        try {
          T r = checks[j].fn(cx);
          cell.r = std::isnan(static_cast<double>(r)) ? std::numeric_limits<double>::infinity() : double(r);
        } catch (const Skip&) {
          cell.status = 1;
        } catch (const Error& e) {
          if (skippable(e.kind())) {
            cell.status = 1;
          } else {
            cell.status = 2;
            cell.err = e.what();
          }
        } catch (const std::exception& e) {
          cell.status = 2;
          cell.err = e.what();
        }
      }
    }
  };
  unsigned nt = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  nt = static_cast<unsigned>(std::min<std::size_t>(nt, std::max<std::size_t>(1, nf)));
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Report rep;
  rep.seed = o.seed;
  rep.frames = static_cast<int>(nf);
  rep.precision = precision_name<T>();
  rep.staudtian_floor = o.staudtian_floor;
  rep.tol_scale = o.tol_scale;
  rep.all_pass = true;
  for (std::size_t j = 0; j < nc; ++j) {
    CheckResult cr;
    cr.name = checks[j].name;
    cr.statement = checks[j].statement;
    cr.tolerance = checks[j].tol;
    cr.informational = checks[j].informational;
    bool errored = false;
    for (std::size_t k = 0; k < nf; ++k) {
      const Cell& c = cells[k * nc + j];
      if (c.status == 1) {
        ++cr.frames_skipped;
        continue;
      }
      if (c.status == 2) {
        if (!errored) cr.error = c.err, cr.worst_frame = static_cast<int>(k);
        errored = true;
        cr.max_residual = std::numeric_limits<double>::infinity();
        continue;
      }
      ++cr.frames_tested;
      if (!errored && (cr.worst_frame < 0 || c.r > cr.max_residual)) {
        cr.max_residual = c.r;
        cr.worst_frame = static_cast<int>(k);
      }
    }
    cr.pass = !errored && cr.frames_tested > 0 && cr.max_residual <= cr.tolerance;
    if (!cr.pass && !cr.informational) rep.all_pass = false;
    rep.checks.push_back(std::move(cr));
  }
  return rep;
}

namespace detail {

inline std::string json_num(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string json_str(const std::string& s) {
  std::string o = "\"";
  for (unsigned char ch : s) {
    switch (ch) {
      case '"': o += "\\\""; break;
      case '\\': o += "\\\\"; break;
      case '\n': o += "\\n"; break;
      case '\t': o += "\\t"; break;
      default:
        if (ch < 0x20) {
          char b[8];
          std::snprintf(b, sizeof b, "\\u%04x", ch);
          o += b;
        } else {
          o += static_cast<char>(ch);
        }
    }
  }
  return o + "\"";
}

}  // namespace detail

// Canonical serialization: fixed key order, two-space indent, 17 significant digits.
inline std::string Report::to_json() const {
  using detail::json_num;
  using detail::json_str;
  std::string s = "{\n";
  s += "  \"seed\": " + std::to_string(seed) + ",\n";
  s += "  \"frames\": " + std::to_string(frames) + ",\n";
  s += "  \"precision\": " + json_str(precision) + ",\n";
  s += "  \"staudtian_floor\": " + json_num(staudtian_floor) + ",\n";
  s += "  \"tol_scale\": " + json_num(tol_scale) + ",\n";
  s += "  \"checks\": [";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    s += i ? ",\n    {" : "\n    {";
    s += "\"name\": " + json_str(c.name);
    s += ", \"statement\": " + json_str(c.statement);
    s += ", \"frames_tested\": " + std::to_string(c.frames_tested);
    s += ", \"frames_skipped\": " + std::to_string(c.frames_skipped);
    s += ", \"max_residual\": " + json_num(c.max_residual);
    s += ", \"tolerance\": " + json_num(c.tolerance);
    s += ", \"worst_frame\": " + (c.worst_frame < 0 ? std::string("null") : std::to_string(c.worst_frame));
    s += ", \"pass\": " + std::string(c.pass ? "true" : "false");
    s += ", \"informational\": " + std::string(c.informational ? "true" : "false");
    if (!c.error.empty()) s += ", \"error\": " + json_str(c.error);
    s += "}";
  }
  s += checks.empty() ? "],\n" : "\n  ],\n";
  s += "  \"all_pass\": " + std::string(all_pass ? "true" : "false") + "\n}\n";
  return s;
}

}  // namespace ek::verify
