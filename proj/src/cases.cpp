#include "polyrad/cases.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "polyrad/error.hpp"

namespace polyrad {

namespace {

constexpr std::uint64_t kCaseSeed = 20240601;

Expectation eq(std::string q, Radical v, double tol,
               Basis b = Basis::closed_form) {
  return {std::move(q), v, tol, Relation::equal, b};
}

Expectation at_most(std::string q, Radical v, double tol,
                    Basis b = Basis::closed_form) {
  return {std::move(q), v, tol, Relation::at_most, b};
}

std::string label(double p, int k) {
  std::ostringstream os;
  os << "p" << p << "_k" << k;
  return os.str();
}

Scalar random_unit_scalar(Field field, std::mt19937_64 &rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  if (field == Field::real)
    return g(rng) < 0.0 ? -1.0 : 1.0;
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, u(rng));
}

RangeConfig fast_config() {
  RangeConfig cfg;
  cfg.run_ladder = false;
  cfg.optim.restarts = 4;
  return cfg;
}

// Scalar field: every unit P has radius 1 and so does the index.
CaseSpec scalar_case() {
  CaseSpec s;
  s.name = "scalar_k";
  s.summary = "scalar field, k = 1..6, both fields: radius and index are 1";
  for (const char *f : {"real", "complex"}) {
    s.expected.push_back(eq(std::string("radius_max_error_") + f, {0.0}, 1e-9));
    s.expected.push_back(eq(std::string("index_max_error_") + f, {0.0}, 1e-9));
  }
  s.compute = [] {
    std::map<std::string, double> out;
    const auto cfg = fast_config();
    std::mt19937_64 rng(kCaseSeed);
    for (Field field : {Field::real, Field::complex}) {
      const std::string tag = field == Field::real ? "real" : "complex";
      const Space k1(field, 2.0, 1);
      double radius_err = 0.0, index_err = 0.0;
      for (int k = 1; k <= 6; ++k) {
        const auto q = scalar_monomial(field, k, random_unit_scalar(field, rng));
        for (int t = 0; t < 100; ++t) {
          const auto p = random_unit_poly(k, k1, k1, rng, cfg.optim);
          radius_err = std::max(
              radius_err, std::abs(numerical_radius(p, q, cfg).value - 1.0));
        }
        const auto idx = index_upper_bound(q, 10, kCaseSeed + k, cfg);
        index_err = std::max(index_err, std::abs(idx.upper_bound - 1.0));
      }
      out["radius_max_error_" + tag] = radius_err;
      out["index_max_error_" + tag] = index_err;
    }
    return out;
  };
  return s;
}

CaseSpec l1_square_case() {
  CaseSpec s;
  s.name = "l1sq_k2";
  s.summary = "l1^2, k = 2: ||P|| = 1, radius 1/2, index at most 1/2";
  s.expected = {
      eq("norm_p", {1.0}, 1e-6),
      eq("norm_p_grid_certified", {1.0}, 0.0, Basis::definition),
      eq("radius_attainment", {1.0, 2.0}, 1e-9),
      eq("radius_limit", {1.0, 2.0}, 5e-3),
      at_most("ladder_gap", {0.0}, 5e-3, Basis::oracle),
      at_most("index_upper_bound", {1.0, 2.0}, 1e-6),
      eq("direct_sum_matches_q", {1.0}, 0.0, Basis::definition),
  };
  s.compute = [] {
    std::map<std::string, double> out;
    RangeConfig cfg;
    const auto pr = l1_square_pair();
    const auto pn = poly_norm(pr.p, cfg.optim);
    out["norm_p"] = pn.value;
    out["norm_p_grid_certified"] =
        pn.status == Certification::grid_certified ? 1.0 : 0.0;
    const auto est = numerical_radius(pr.p, pr.q, cfg);
    out["radius_attainment"] = est.value;
    out["ladder_gap"] = est.agreement.value_or(kInf);
    out["radius_limit"] = radius_via_limit(pr.p, pr.q, cfg).value;
    const std::vector<Candidate> extra{{"worked_example", pr.p}};
    out["index_upper_bound"] =
        index_upper_bound(pr.q, 20, kCaseSeed, cfg, extra).upper_bound;
    const Space k1(Field::real, 1.0, 1);
    const auto a2 = HomPoly(2, k1, k1, {{0, {2}, 1.0}});
    out["direct_sum_matches_q"] =
        direct_sum({SumKind::ell_1, 1.0, {a2, a2}}) == pr.q ? 1.0 : 0.0;
    return out;
  };
  return s;
}

CaseSpec lp_swap_case() {
  CaseSpec s;
  s.name = "lpsq_k_ge_p";
  s.summary = "lp^2, k >= p, P swaps the coordinates: radius and index 0";
  const std::vector<std::pair<double, int>> grid{
      {1.5, 2}, {1.5, 3}, {2.0, 2}, {2.0, 3}, {3.0, 3}, {3.0, 4}};
  for (const auto &[p, k] : grid) {
    const auto l = label(p, k);
    s.expected.push_back(eq(l + ".norm_p", {1.0}, 1e-6));
    s.expected.push_back(at_most(l + ".radius", {0.0}, 1e-6));
    s.expected.push_back(at_most(l + ".radius_limit", {0.0}, 1e-3));
    s.expected.push_back(at_most(l + ".index_upper_bound", {0.0}, 1e-6));
  }
  s.compute = [grid] {
    std::map<std::string, double> out;
    auto cfg = fast_config();
    for (const auto &[p, k] : grid) {
      const auto l = label(p, k);
      const auto pr = lp_swap_pair(p, k);
      out[l + ".norm_p"] = poly_norm(pr.p, cfg.optim).value;
      out[l + ".radius"] = numerical_radius(pr.p, pr.q, cfg).value;
      out[l + ".radius_limit"] = radius_via_limit(pr.p, pr.q, cfg).value;
      out[l + ".index_upper_bound"] =
          index_upper_bound(pr.q, 4, kCaseSeed, cfg).upper_bound;
    }
    return out;
  };
  return s;
}

CaseSpec linf_cubic_case() {
  CaseSpec s;
  s.name = "linf_sq_k3_real";
  s.summary = "real l_inf^2, k = 3: radius 2/(3 sqrt 3) at x = (1, 1/sqrt 3)";
  s.expected = {
      eq("norm_p", {1.0}, 1e-6),
      eq("radius", {2.0, 3.0, 3.0}, 1e-6),
      eq("witness_abs_x1", {1.0}, 1e-4),
      eq("witness_abs_x2", {1.0, 1.0, 3.0}, 1e-4),
      eq("radius_limit", {2.0, 3.0, 3.0}, 5e-3),
      at_most("ladder_gap", {0.0}, 5e-3, Basis::oracle),
  };
  s.compute = [] {
    std::map<std::string, double> out;
    RangeConfig cfg;
    const auto pr = linf_cubic_pair();
    out["norm_p"] = poly_norm(pr.p, cfg.optim).value;
    const auto est = numerical_radius(pr.p, pr.q, cfg);
    out["radius"] = est.value;
    out["witness_abs_x1"] = std::abs(est.witness->x[0]);
    out["witness_abs_x2"] = std::abs(est.witness->x[1]);
    out["ladder_gap"] = est.agreement.value_or(kInf);
    out["radius_limit"] = radius_via_limit(pr.p, pr.q, cfg).value;
    return out;
  };
  return s;
}

CaseSpec rotation_case() {
  CaseSpec s;
  s.name = "rotation_codomain";
  s.summary = "Euclidean R^2 codomain: the quarter turn has radius 0, so "
              "every Q has index 0";
  s.expected = {
      at_most("op_radius_rotation", {0.0}, 1e-9, Basis::oracle),
      eq("zero_radius_witness_found", {1.0}, 0.0, Basis::oracle),
      at_most("max_operator_bound", {0.0}, 1e-6, Basis::oracle),
      at_most("max_index_upper_bound", {0.0}, 1e-3, Basis::oracle),
  };
  s.compute = [] {
    std::map<std::string, double> out;
    const auto cfg = fast_config();
    const Space e2(Field::real, 2.0, 2);
    const auto rot = LinOp::rotation(e2, std::numbers::pi / 2.0);
    out["op_radius_rotation"] = op_numerical_radius(rot, cfg);
    out["zero_radius_witness_found"] =
        zero_radius_witness_search(e2, 1e-9, cfg) ? 1.0 : 0.0;
    std::mt19937_64 rng(kCaseSeed);
    double worst_op = 0.0, worst_idx = 0.0;
    const double ps[] = {1.0, 2.0, kInf};
    for (int t = 0; t < 10; ++t) {
      const Space dom(Field::real, ps[t % 3], 2);
      const auto q = random_unit_poly(2, dom, e2, rng, cfg.optim);
      worst_op = std::max(worst_op, operator_bound(q, rot, cfg));
      worst_idx =
          std::max(worst_idx, index_upper_bound(q, 0, kCaseSeed, cfg).upper_bound);
    }
    out["max_operator_bound"] = worst_op;
    out["max_index_upper_bound"] = worst_idx;
    return out;
  };
  return s;
}

CaseSpec embedding_case() {
  CaseSpec s;
  s.name = "linf_sum_embedding";
  s.summary = "l_inf sum of two blocks: P(x, w) = (R(x), 0) has the radius "
              "of R on its block";
  s.expected = {
      eq("sum_norm_q", {1.0}, 1e-6),
      at_most("max_radius_gap", {0.0}, 5e-3, Basis::oracle),
  };
  s.compute = [] {
    std::map<std::string, double> out;
    const auto cfg = fast_config();
    const auto block = linf_cubic_pair();
    const Space k1(Field::real, kInf, 1);
    const auto q2 = HomPoly(3, k1, k1, {{0, {3}, 1.0}});
    const auto q = direct_sum({SumKind::ell_inf, kInf, {block.q, q2}});
    out["sum_norm_q"] = poly_norm(q, cfg.optim).value;
    std::mt19937_64 rng(kCaseSeed);
    std::vector<HomPoly> rs{block.p};
    for (int t = 0; t < 4; ++t)
      rs.push_back(random_unit_poly(3, block.q.domain(), block.q.codomain(),
                                    rng, cfg.optim));
    double gap = 0.0;
    for (const auto &r : rs) {
      const auto embedded = embed_block(r, q.domain(), q.codomain(), 0, 0);
      gap = std::max(gap, std::abs(numerical_radius(embedded, q, cfg).value -
                                   numerical_radius(r, block.q, cfg).value));
    }
    out["max_radius_gap"] = gap;
    return out;
  };
  return s;
}

} // namespace

const char *to_string(Relation r) {
  return r == Relation::equal ? "equal" : "at_most";
}

const char *to_string(Basis b) {
  switch (b) {
  case Basis::closed_form:
    return "closed_form";
  case Basis::oracle:
    return "oracle";
  case Basis::definition:
    return "definition";
  }
  return "unknown";
}

PolyPair l1_square_pair(Field field) {
  const Space s(field, 1.0, 2);
  HomPoly q(2, s, s, {{0, {2, 0}, 1.0}, {1, {0, 2}, 1.0}});
  HomPoly p(2, s, s,
            {{0, {2, 0}, 0.5},
             {0, {1, 1}, 2.0},
             {1, {0, 2}, -0.5},
             {1, {1, 1}, -1.0}});
  return {std::move(p), std::move(q)};
}

PolyPair lp_swap_pair(double p, int k) {
  const Space s(Field::real, p, 2);
  HomPoly q(k, s, s, {{0, {k, 0}, 1.0}, {1, {0, k}, 1.0}});
  HomPoly pp(k, s, s, {{0, {0, k}, 1.0}, {1, {k, 0}, 1.0}});
  return {std::move(pp), std::move(q)};
}

PolyPair linf_cubic_pair() {
  const Space s(Field::real, kInf, 2);
  HomPoly q(3, s, s, {{0, {3, 0}, 1.0}, {1, {0, 3}, 1.0}});
  HomPoly p(3, s, s, {{0, {2, 1}, 1.0}, {0, {0, 3}, -1.0}});
  return {std::move(p), std::move(q)};
}

HomPoly scalar_monomial(Field field, int k, Scalar c) {
  const Space s(field, 2.0, 1);
  return HomPoly(k, s, s, {{0, {k}, c}});
}

HomPoly random_unit_poly(int k, const Space &domain, const Space &codomain,
                         std::mt19937_64 &rng, const OptimConfig &cfg) {
  while (true) {
    auto p = random_poly(k, domain, codomain, rng);
    const double n = poly_norm(p, cfg).value;
    if (n > 1e-6)
      return p.scaled(1.0 / n);
  }
}

const std::vector<CaseSpec> &case_catalog() {
  static const std::vector<CaseSpec> catalog{
      scalar_case(),    l1_square_case(), lp_swap_case(),
      linf_cubic_case(), rotation_case(),  embedding_case(),
  };
  return catalog;
}

CaseReport evaluate_case(const CaseSpec &spec,
                         const std::map<std::string, double> &computed,
                         double seconds) {
  CaseReport rep;
  rep.name = spec.name;
  rep.seconds = seconds;
  rep.pass = true;
  for (const auto &e : spec.expected) {
    CheckResult c;
    c.expect = e;
    const auto it = computed.find(e.quantity);
    c.computed = it == computed.end() ? std::nan("") : it->second;
    const double want = e.expected.value();
    if (e.relation == Relation::equal)
      c.pass = std::abs(c.computed - want) <= e.tolerance;
    else
      c.pass = c.computed <= want + e.tolerance;
    rep.pass = rep.pass && c.pass;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

CaseReport run_case(const std::string &name) {
  const auto &cat = case_catalog();
  const auto it = std::find_if(cat.begin(), cat.end(),
                               [&](const CaseSpec &c) { return c.name == name; });
  if (it == cat.end())
    throw InputError("unknown case: " + name);
  const auto t0 = std::chrono::steady_clock::now();
  const auto computed = it->compute();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return evaluate_case(*it, computed, secs);
}

} // namespace polyrad
