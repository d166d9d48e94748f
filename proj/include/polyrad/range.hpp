#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyrad/optim.hpp"
#include "polyrad/poly.hpp"
#include "polyrad/spaces.hpp"

namespace polyrad {

struct RangeConfig {
  OptimConfig optim;
  /// Attainment set: ||Q(x)|| >= ||Q|| - attain_eta.
  double attain_eta = 1e-12;
  /// Relative slack for zero (p = 1) and maximal (p = inf) coordinates when
  /// describing the face of norming functionals.
  double face_tol = 1e-7;
  /// Strictly decreasing positive deltas.
  std::vector<double> delta_ladder{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  /// Allowed gap between the attainment value and the smallest-delta ladder
  /// value; beyond 10x the estimate is rejected.
  double cross_tol = 5e-3;
  /// Phase grid for complex limit quotients.
  int theta_points = 64;
  /// Limit quotients: first step and number of halvings.
  double alpha_start = 1e-2;
  int alpha_levels = 16;
  double alpha_stop = 1e-7;
  /// Run the delta ladder inside numerical_radius.
  bool run_ladder = true;

  void validate() const;
};

enum class RadiusMethod { delta_ladder, attainment, limit_formula };

const char *to_string(RadiusMethod m);

/// (x, y*) with residual = 1 - Re y*(Q(x)) and value = y*(P(x)).
struct WitnessPair {
  Vector x;
  DualVector y_star;
  double residual = 0.0;
  Scalar value{0.0, 0.0};
};

/// One rung of a delta ladder (step = delta) or of an alpha ladder (step =
/// alpha, value = extrapolated quotient).
struct LadderPoint {
  double step = 0.0;
  double value = 0.0;
};

struct RadiusEstimate {
  double value = 0.0;
  RadiusMethod method = RadiusMethod::attainment;
  std::optional<WitnessPair> witness;
  std::vector<LadderPoint> ladder;
  /// Estimated ||Q|| used for the attainment threshold.
  double q_norm = 0.0;
  /// numerical_radius: |attainment - ladder at the smallest delta|.
  std::optional<double> agreement;
  /// False when the ladder disagrees beyond cross_tol.
  bool consistent = true;
  /// radius_via_limit: the extrapolated quotients settled within alpha_stop.
  bool converged = true;
  /// radius_via_limit over C: v * (1 - cos(pi / theta_points)).
  double theta_error = 0.0;
};

struct FaceSup {
  double value = 0.0;
  DualVector y_star;
};

/// sup |b(w)| over norming functionals b of u (||b|| = 1, b(u) = ||u||).
FaceSup face_sup(const Space &codomain, std::span<const Scalar> u,
                 std::span<const Scalar> w, double face_tol);

/// sup |b(w)| over unit b with Re b(u) > 1 - delta, computed from the dual
/// problem max_theta min_{mu >= 0} ||theta w + mu u|| - mu (1 - delta).
/// Returns -inf when ||u|| <= 1 - delta.
struct SliceSup {
  double value = 0.0;
  Scalar theta{1.0, 0.0};
  double mu = 0.0;
};
SliceSup slice_sup(const Space &codomain, std::span<const Scalar> u,
                   std::span<const Scalar> w, double delta);

/// A functional in the delta-slice of u maximizing Re theta b(w), recovered
/// from the dual solution.
DualVector slice_functional(const Space &codomain, std::span<const Scalar> u,
                            std::span<const Scalar> w, double delta,
                            const SliceSup &dual, double face_tol);

/// Throws PreconditionError("Q not norm-one") if the estimated ||Q|| is
/// further than tol from 1; returns the estimate.
double require_norm_one(const HomPoly &q, const OptimConfig &cfg,
                        double tol = 1e-4);

/// v_{Q,delta}(P): lower bound with witness. Throws ComputationError("empty
/// delta-slice") when no x with ||Q(x)|| > 1 - delta is found.
RadiusEstimate v_delta(const HomPoly &p, const HomPoly &q, double delta,
                       const RangeConfig &cfg);

/// sup |y*(P(x))| over the attainment set and the norming functionals of
/// Q(x) there.
RadiusEstimate attainment_radius(const HomPoly &p, const HomPoly &q,
                                 const RangeConfig &cfg);

/// Attainment value, cross-checked against the delta ladder.
RadiusEstimate numerical_radius(const HomPoly &p, const HomPoly &q,
                                const RangeConfig &cfg);

/// max over theta of lim (||Q + alpha theta P|| - ||Q||) / alpha, with
/// two-point Richardson extrapolation on a halving alpha ladder.
RadiusEstimate radius_via_limit(const HomPoly &p, const HomPoly &q,
                                const RangeConfig &cfg);

struct RangeCloud {
  std::vector<Scalar> points;
  /// Counter-clockwise hull vertices; [min, max] for real fields.
  std::vector<Scalar> hull;
  double delta = 0.0;
  /// v_delta estimate from the same sweep.
  double radius = 0.0;
};

RangeCloud range_cloud(const HomPoly &p, const HomPoly &q, double delta,
                       int count, std::uint64_t seed, const RangeConfig &cfg);

/// Andrew monotone chain on (Re, Im); collinear points are dropped. With
/// real_line the result is {min, max} of the real parts.
std::vector<Scalar> convex_hull(std::vector<Scalar> points, bool real_line);

} // namespace polyrad
