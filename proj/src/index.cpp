#include "polyrad/index.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "polyrad/error.hpp"
#include "polyrad/parallel.hpp"

namespace polyrad {

namespace {

constexpr double kNegligibleNorm = 1e-9;
constexpr double kGolden = 0.6180339887498949;

HomPoly with_terms(const HomPoly &q, std::vector<Term> terms) {
  return HomPoly(q.degree(), q.domain(), q.codomain(), std::move(terms));
}

HomPoly swap_outputs(const HomPoly &q, int i, int j) {
  std::vector<Term> terms(q.terms().begin(), q.terms().end());
  for (auto &t : terms)
    t.out = t.out == i ? j : (t.out == j ? i : t.out);
  return with_terms(q, std::move(terms));
}

HomPoly swap_inputs(const HomPoly &q, int i, int j) {
  std::vector<Term> terms(q.terms().begin(), q.terms().end());
  for (auto &t : terms)
    std::swap(t.alpha[i], t.alpha[j]);
  return with_terms(q, std::move(terms));
}

HomPoly flip_output(const HomPoly &q, int i) {
  std::vector<Term> terms(q.terms().begin(), q.terms().end());
  for (auto &t : terms)
    if (t.out == i)
      t.coeff = -t.coeff;
  return with_terms(q, std::move(terms));
}

std::string matrix_id(const LinOp &t) {
  std::string s = "T[";
  for (int r = 0; r < t.dim(); ++r) {
    if (r)
      s += ';';
    for (int c = 0; c < t.dim(); ++c) {
      if (c)
        s += ',';
      const double v = t.at(r, c).real();
      s += v > 0.0 ? "1" : (v < 0.0 ? "-1" : "0");
    }
  }
  return s + "]";
}

// max over theta of ||Q + theta P||, real: theta = +-1; complex: grid plus
// golden refinement around the best phase.
double max_over_theta(const HomPoly &q, const HomPoly &p,
                      const RangeConfig &cfg) {
  auto value = [&](Scalar theta) {
    return poly_norm(q + p.scaled(theta), cfg.optim).value;
  };
  if (q.field() == Field::real)
    return std::max(value(1.0), value(-1.0));
  const int m = cfg.theta_points;
  const double step = 2.0 * std::numbers::pi / m;
  const auto grid = parallel_map(static_cast<std::size_t>(m), [&](auto j) {
    return value(std::polar(1.0, step * static_cast<double>(j)));
  });
  const auto top = std::max_element(grid.begin(), grid.end());
  double best = *top;
  const double centre = step * static_cast<double>(top - grid.begin());
  double a = centre - step, b = centre + step;
  double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
  double f1 = value(std::polar(1.0, x1)), f2 = value(std::polar(1.0, x2));
  for (int it = 0; it < 40; ++it) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = value(std::polar(1.0, x1));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = value(std::polar(1.0, x2));
    }
  }
  return std::max({best, f1, f2});
}

} // namespace

std::vector<LinOp> signed_permutations(const Space &space) {
  const int n = space.dim();
  std::vector<LinOp> out;
  if (n > 4)
    return out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      std::vector<Scalar> m(static_cast<std::size_t>(n) * n);
      for (int r = 0; r < n; ++r)
        m[r * n + perm[r]] = (mask >> r) & 1U ? -1.0 : 1.0;
      out.emplace_back(space, std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Candidate> structured_candidates(const HomPoly &q) {
  std::vector<Candidate> out;
  const int nin = q.domain().dim(), nout = q.codomain().dim();
  out.push_back({"neg", q.scaled(-1.0)});
  for (int i = 0; i < nin; ++i)
    for (int j = i + 1; j < nin; ++j)
      out.push_back({"swap_in_" + std::to_string(i) + std::to_string(j),
                     swap_inputs(q, i, j)});
  for (int i = 0; i < nout; ++i)
    for (int j = i + 1; j < nout; ++j)
      out.push_back({"swap_out_" + std::to_string(i) + std::to_string(j),
                     swap_outputs(q, i, j)});
  if (nout > 1)
    for (int i = 0; i < nout; ++i)
      out.push_back({"flip_out_" + std::to_string(i), flip_output(q, i)});
  for (const auto &t : signed_permutations(q.codomain()))
    out.push_back({"compose_" + matrix_id(t), compose_linear(t, q)});
  for (int i = 0; i < nout; ++i)
    for (int j = i + 1; j < nout; ++j) {
      const auto r = LinOp::rotation(q.codomain(), std::numbers::pi / 2.0, i, j);
      out.push_back({"rotate_" + std::to_string(i) + std::to_string(j),
                     compose_linear(r, q)});
    }
  std::erase_if(out, [](const Candidate &c) { return c.poly.is_zero(); });
  return out;
}

IndexEstimate index_upper_bound(const HomPoly &q, int n_samples,
                                std::uint64_t seed, const RangeConfig &cfg,
                                std::span<const Candidate> extra) {
  if (n_samples < 0)
    throw InputError("sample count must be non-negative");
  RangeConfig local = cfg;
  local.run_ladder = false;
  local.validate();

  std::vector<Candidate> cands;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < n_samples; ++s)
    cands.push_back({"random_" + std::to_string(s),
                     random_poly(q.degree(), q.domain(), q.codomain(), rng)});
  for (auto &c : structured_candidates(q))
    cands.push_back(std::move(c));
  cands.insert(cands.end(), extra.begin(), extra.end());

  struct Scored {
    bool used = false;
    double radius = 0.0;
    double norm = 0.0;
    double gap = 0.0;
  };
  const auto scores = parallel_map(cands.size(), [&](std::size_t i) {
    Scored sc;
    NormEstimate est;
    const auto &p = cands[i].poly;
    est = poly_norm(p, local.optim);
    if (!(est.value > kNegligibleNorm))
      return sc;
    sc.used = true;
    sc.norm = est.value;
    sc.gap = std::isfinite(est.gap) ? est.gap : 0.0;
    sc.radius =
        attainment_radius(p.scaled(1.0 / est.value), q, local).value;
    return sc;
  });

  IndexEstimate out;
  out.upper_bound = kInf;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!scores[i].used)
      continue;
    out.per_sample.push_back({cands[i].id, scores[i].radius, scores[i].norm});
    out.norm_gap = std::max(out.norm_gap, scores[i].gap);
    if (scores[i].radius < out.upper_bound) {
      out.upper_bound = scores[i].radius;
      out.argmin_id = cands[i].id;
      out.argmin_poly = cands[i].poly.scaled(1.0 / scores[i].norm);
    }
  }
  out.samples = static_cast<int>(out.per_sample.size());
  if (out.samples == 0)
    throw ComputationError("no usable candidate polynomial");
  return out;
}

double spear_margin_for(const HomPoly &q, const HomPoly &p, double lambda,
                        const RangeConfig &cfg) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw InputError("lambda must lie in (0, 1]");
  if (p.is_zero())
    return 0.0;
  const double nq = poly_norm(q, cfg.optim).value;
  const double np = poly_norm(p, cfg.optim).value;
  double worst = kInf;
  for (double s : {1.0, 1e-1, 1e-2, 1e-3}) {
    const double m =
        max_over_theta(q, p.scaled(s), cfg) - nq - lambda * s * np;
    worst = std::min(worst, m);
  }
  return worst;
}

SpearReport spear_margin(const HomPoly &q, int trials, double lambda,
                         std::uint64_t seed, const RangeConfig &cfg,
                         std::span<const HomPoly> extra) {
  if (trials < 0)
    throw InputError("trial count must be non-negative");
  cfg.validate();
  std::vector<HomPoly> ps;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto p = random_poly(q.degree(), q.domain(), q.codomain(), rng);
    const double np = poly_norm(p, cfg.optim).value;
    ps.push_back(np > kNegligibleNorm ? p.scaled(1.0 / np) : p);
  }
  ps.insert(ps.end(), extra.begin(), extra.end());
  const auto margins = parallel_map(ps.size(), [&](std::size_t i) {
    return spear_margin_for(q, ps[i], lambda, cfg);
  });
  SpearReport rep;
  rep.lambda = lambda;
  rep.trials = static_cast<int>(ps.size());
  rep.worst_margin = ps.empty() ? 0.0 : kInf;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (margins[i] < rep.worst_margin) {
      rep.worst_margin = margins[i];
      rep.worst_p = ps[i];
    }
  return rep;
}

double op_numerical_radius(const LinOp &t, const RangeConfig &cfg) {
  RangeConfig local = cfg;
  local.run_ladder = false;
  const auto id = linear_as_poly(LinOp::identity(t.space()));
  return attainment_radius(linear_as_poly(t), id, local).value;
}

double operator_bound(const HomPoly &q, const LinOp &t, const RangeConfig &cfg) {
  const double n = poly_norm(compose_linear(t, q), cfg.optim).value;
  if (!(n > kNegligibleNorm))
    throw ComputationError("degenerate composition: ||T o Q|| is negligible");
  return op_numerical_radius(t, cfg) / n;
}

std::optional<LinOp> zero_radius_witness_search(const Space &y, double eps,
                                                const RangeConfig &cfg) {
  std::vector<LinOp> family;
  for (int i = 0; i < y.dim(); ++i)
    for (int j = i + 1; j < y.dim(); ++j)
      family.push_back(LinOp::rotation(y, std::numbers::pi / 2.0, i, j));
  for (auto &t : signed_permutations(y))
    family.push_back(std::move(t));
  for (const auto &t : family) {
    if (op_numerical_radius(t, cfg) > eps)
      continue;
    if (poly_norm(linear_as_poly(t), cfg.optim).value >= 1.0 - eps)
      return t;
  }
  return std::nullopt;
}

} // namespace polyrad
