#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyrad/poly.hpp"
#include "polyrad/range.hpp"

namespace polyrad {

/// A named test polynomial for the index search.
struct Candidate {
  std::string id;
  HomPoly poly;
};

struct IndexSample {
  std::string id;
  double radius = 0.0;
  /// Norm estimate the candidate was divided by.
  double norm = 0.0;
};

struct IndexEstimate {
  double upper_bound = 1.0;
  std::optional<HomPoly> argmin_poly;
  std::string argmin_id;
  int samples = 0;
  std::vector<IndexSample> per_sample;
  /// Largest certified gap among the candidate norm estimates.
  double norm_gap = 0.0;
};

/// Coordinate swaps, sign flips and the T o Q family (signed permutations
/// for codomain dim <= 4 and quarter-turn rotations on coordinate pairs).
std::vector<Candidate> structured_candidates(const HomPoly &q);

/// Signed permutation matrices on the space (dim <= 4), identity first.
std::vector<LinOp> signed_permutations(const Space &space);

/// Upper bound on the index of Q: the least attainment radius over random
/// Gaussian polynomials, the structured candidates and `extra`, each
/// normalized by its norm estimate.
IndexEstimate index_upper_bound(const HomPoly &q, int n_samples,
                                std::uint64_t seed, const RangeConfig &cfg,
                                std::span<const Candidate> extra = {});

struct SpearReport {
  double lambda = 1.0;
  double worst_margin = 0.0;
  std::optional<HomPoly> worst_p;
  int trials = 0;
};

/// min over the scales s in {1, 1e-1, 1e-2, 1e-3} of
/// max_theta ||Q + theta s P|| - ||Q|| - lambda s ||P||. Zero for P = 0.
double spear_margin_for(const HomPoly &q, const HomPoly &p, double lambda,
                        const RangeConfig &cfg);

/// Worst margin over `trials` random norm-one P plus `extra`.
SpearReport spear_margin(const HomPoly &q, int trials, double lambda,
                         std::uint64_t seed, const RangeConfig &cfg,
                         std::span<const HomPoly> extra = {});

/// Classical numerical radius v(T) through the attainment estimator with Q
/// the identity.
double op_numerical_radius(const LinOp &t, const RangeConfig &cfg);

/// v(T) / ||T o Q||. Throws ComputationError("degenerate composition") when
/// the composition norm is at most 1e-9.
double operator_bound(const HomPoly &q, const LinOp &t, const RangeConfig &cfg);

/// First quarter-turn rotation or signed permutation T with v(T) <= eps and
/// ||T|| >= 1 - eps.
std::optional<LinOp> zero_radius_witness_search(const Space &y, double eps,
                                                const RangeConfig &cfg);

} // namespace polyrad
