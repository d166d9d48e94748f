#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "polyrad/poly.hpp"
#include "polyrad/spaces.hpp"

namespace polyrad {

struct OptimConfig {
  int restarts = 12;
  int max_iters = 200;
  double step_init = 0.05;
  /// Pattern-search step floor.
  double tol = 1e-13;
  std::uint64_t seed = 1;
  /// Points per face edge on one-parameter spheres (real dim 2), and a
  /// quarter of the phase count on the complex unit circle.
  int grid_resolution = 512;
  /// Points per axis on two- and three-parameter spheres.
  int grid_resolution_multi = 40;

  void validate() const;
};

enum class Certification { grid_certified, heuristic };

struct TracePoint {
  int restart = 0;
  double best = 0.0;
};

using Objective = std::function<double(std::span<const Scalar>)>;

struct SearchOptions {
  /// Lipschitz bound of the objective w.r.t. the grid parameters; feeds the
  /// certified gap.
  double lipschitz = kInf;
  /// f(e^{i t} x) = f(x): the grid may skip the global phase.
  bool phase_invariant = false;
};

/// Everything a sweep saw: the raw grid (or sample) values and the locally
/// refined maxima started from the best separated grid points.
struct SphereSweep {
  std::vector<Vector> points;
  std::vector<double> values;
  std::vector<Vector> refined;
  std::vector<double> refined_values;
  Vector best_point;
  double best_value = 0.0;
  Certification status = Certification::heuristic;
  double spacing = 0.0;
  double gap = kInf;
  std::vector<TracePoint> trace;
};

struct SphereMax {
  Vector point;
  double value = 0.0;
  Certification status = Certification::heuristic;
  double gap = kInf;
  std::vector<TracePoint> trace;
};

struct LocalResult {
  Vector point;
  double value = 0.0;
};

/// True when the sphere has real dimension <= 3 and gets a dense grid.
bool has_grid_chart(const Space &space);

/// Deterministic grid on the unit sphere; empty when there is no chart.
/// Real spheres are swept over the faces of the cube [-1,1]^n mapped
/// radially onto the l_p sphere, so vertices, face centres and edges are
/// hit exactly. `spacing` receives the parameter spacing.
std::vector<Vector> sphere_grid(const Space &space, const OptimConfig &cfg,
                                bool phase_invariant, double *spacing);

/// Compass search on the sphere over the real coordinates with radial
/// retraction. `f` may return -inf to reject a point.
LocalResult refine_locally(const Space &space, const Objective &f, Vector start,
                           double start_value, double step,
                           const OptimConfig &cfg);

SphereSweep sweep_sphere(const Space &space, const Objective &f,
                         const OptimConfig &cfg, const SearchOptions &opts = {});

SphereMax maximize_on_sphere(const Space &space, const Objective &f,
                             const OptimConfig &cfg,
                             const SearchOptions &opts = {});

struct NormEstimate {
  double value = 0.0;
  Vector maximizer;
  Certification status = Certification::heuristic;
  double gap = kInf;
  double lipschitz = 0.0;
  std::vector<TracePoint> trace;
};

/// k * sum|c_alpha| * dim^k.
double norm_lipschitz(const HomPoly &p);

/// Lower bound on ||P|| = sup over the unit sphere of ||P(x)||.
NormEstimate poly_norm(const HomPoly &p, const OptimConfig &cfg);

/// P / ||P|| using the norm estimate. Throws ComputationError when the
/// estimate is at most `floor`.
HomPoly normalize_poly(const HomPoly &p, const OptimConfig &cfg,
                       double floor = 1e-9, NormEstimate *estimate = nullptr);

/// Unit vectors x with ||Q(x)|| >= min(1, ||Q||) - eta. Throws
/// ComputationError("no attainment") when the estimated norm is below
/// 1 - eta. With modulo_phase, complex points are listed up to a global
/// phase.
std::vector<Vector> near_maximizer_set(const HomPoly &q, double eta,
                                       const OptimConfig &cfg,
                                       bool modulo_phase = false);

/// Sweep points (grid and refined) with value >= threshold; refined points
/// within `dedup` (sup distance) of an earlier entry are dropped.
std::vector<Vector> points_above(const SphereSweep &sweep, double threshold,
                                 double dedup);

double sup_distance(std::span<const Scalar> a, std::span<const Scalar> b);

} // namespace polyrad
