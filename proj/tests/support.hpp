#pragma once

// Brute-force oracles shared by the unit and acceptance suites. They use only
// the definitions (sphere parametrizations and dual-ball grids), never the
// estimators under test.

#include <cmath>
#include <numbers>
#include <random>

#include "polyrad/poly.hpp"
#include "polyrad/spaces.hpp"

namespace polyrad::testing {

/// max over unit x of |<x, T x>| on Euclidean R^2, sampled on n angles.
inline double angle_grid_radius(const LinOp &t, int n = 200000) {
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = std::numbers::pi * i / n;
    const Vector x{std::cos(a), std::sin(a)};
    const auto tx = t.apply(x);
    best = std::max(best, std::abs(x[0] * tx[0] + x[1] * tx[1]));
  }
  return best;
}

/// Walks the boundary of the real l1^2 sphere (n points per edge).
template <class Fn> void for_each_l1_point(int n, Fn &&fn) {
  for (int e = 0; e < 4; ++e)
    for (int i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) / n;
      const double s1 = (e == 0 || e == 3) ? 1.0 : -1.0;
      const double s2 = (e < 2) ? 1.0 : -1.0;
      fn(Vector{s1 * (1.0 - t), s2 * t});
    }
}

/// Walks the boundary of the real l_inf^2 sphere (n points per edge).
template <class Fn> void for_each_linf_point(int n, Fn &&fn) {
  for (int i = 0; i <= n; ++i) {
    const double t = -1.0 + 2.0 * i / n;
    fn(Vector{1.0, t});
    fn(Vector{-1.0, t});
    fn(Vector{t, 1.0});
    fn(Vector{t, -1.0});
  }
}

/// v_{Q,delta}(P) for real maps l1^2 -> l1^2 by a grid over the domain
/// sphere times a grid over the dual (l_inf) sphere.
inline double l1sq_slice_oracle(const HomPoly &p, const HomPoly &q,
                                double delta, int nx, int ny) {
  double best = 0.0;
  std::vector<Vector> duals;
  for_each_linf_point(ny, [&](const Vector &b) { duals.push_back(b); });
  for_each_l1_point(nx, [&](const Vector &x) {
    const auto qx = evaluate(q, x);
    const auto px = evaluate(p, x);
    for (const auto &b : duals) {
      const double r = (b[0] * qx[0] + b[1] * qx[1]).real();
      if (r > 1.0 - delta)
        best = std::max(best, std::abs(b[0] * px[0] + b[1] * px[1]));
    }
  });
  return best;
}

inline Vector random_vector(int n, Field f, std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  Vector v(n);
  for (auto &z : v) {
    const double re = g(rng);
    const double im = f == Field::complex ? g(rng) : 0.0;
    z = {re, im};
  }
  return v;
}

inline Scalar random_scalar(Field f, std::mt19937_64 &rng) {
  return random_vector(1, f, rng)[0];
}

} // namespace polyrad::testing
