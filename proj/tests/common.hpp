#pragma once

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "elliptikit/elliptikit.hpp"
#include "oracles.hpp"

namespace ektest {

using L = long double;
using ek::Vec3;
using namespace ek;

inline Vec3<L> rand_vec(std::mt19937_64& g) {
  std::normal_distribution<L> n;
  return {n(g), n(g), n(g)};
}

// Frames from uniform random vertex triples, same rejection rule as the
// verification sweep.
inline std::vector<Frame<L>> random_frames(int n, std::uint64_t seed = 2024) {
  std::mt19937_64 g(seed);
  std::vector<Frame<L>> out;
  while (static_cast<int>(out.size()) < n) {
    try {
      out.push_back(build_frame(Point<L>{rand_vec(g)}, Point<L>{rand_vec(g)}, Point<L>{rand_vec(g)}));
    } catch (const Error&) {
    }
  }
  return out;
}

inline Frame<L> octant() {
  return build_frame(Point<L>{{1, 0, 0}}, Point<L>{{0, 1, 0}}, Point<L>{{0, 0, 1}});
}

inline Frame<L> scalene() { return frame_from_sides<L>(1.0L, 0.8L, 0.6L); }

inline oracle::V ov(const Vec3<L>& v) { return {v[0], v[1], v[2]}; }

// Barycentric point in ambient coordinates, as an oracle vector.
inline oracle::V amb(const Frame<L>& f, const Vec3<L>& x) { return ov(ambient(f, x)); }

inline L gap(const Vec3<L>& p, const Vec3<L>& q) { return proj_gap(p, q); }

}  // namespace ektest
