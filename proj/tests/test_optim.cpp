#include <doctest.h>

#include <cmath>
#include <random>

#include "polyrad/cases.hpp"
#include "polyrad/error.hpp"
#include "polyrad/optim.hpp"
#include "support.hpp"

using namespace polyrad;

TEST_SUITE("optim") {

TEST_CASE("linear functional on the Euclidean sphere") {
  const Space s(Field::real, 2.0, 3);
  const Vector u{1.0, -2.0, 2.0};
  const Objective f = [&](std::span<const Scalar> x) {
    return (u[0] * x[0] + u[1] * x[1] + u[2] * x[2]).real();
  };
  const auto m = maximize_on_sphere(s, f, OptimConfig{});
  CHECK(m.value == doctest::Approx(3.0).epsilon(1e-8));
}

TEST_CASE("worked objectives reach their maxima") {
  OptimConfig cfg;
  SUBCASE("l1 square sum of moduli") {
    const Space s(Field::real, 1.0, 2);
    const Objective f = [](std::span<const Scalar> x) {
      const double a = x[0].real(), b = x[1].real();
      return std::abs(a * a / 2 + 2 * a * b) + std::abs(b * b / 2 + a * b);
    };
    const auto m = maximize_on_sphere(s, f, cfg);
    CHECK(m.value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(m.point[0].real()) == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(std::abs(m.point[1].real()) == doctest::Approx(0.5).epsilon(1e-3));
  }
  SUBCASE("cubic on the square") {
    const Space s(Field::real, kInf, 2);
    const Objective f = [](std::span<const Scalar> x) {
      const double a = x[0].real(), b = x[1].real();
      return std::abs(a * a * b - b * b * b);
    };
    const auto m = maximize_on_sphere(s, f, cfg);
    CHECK(m.value == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("non-finite objective is reported") {
  const Space s(Field::real, 2.0, 2);
  const Objective f = [](std::span<const Scalar>) { return std::nan(""); };
  CHECK_THROWS_AS(maximize_on_sphere(s, f, OptimConfig{}), ComputationError);
}

TEST_CASE("poly_norm of worked examples") {
  OptimConfig cfg;
  const auto l1 = l1_square_pair();
  const auto e = poly_norm(l1.p, cfg);
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(e.status == Certification::grid_certified);
  CHECK(norm(l1.p.codomain(), evaluate(l1.p, e.maximizer)) ==
        doctest::Approx(e.value).epsilon(1e-10));

  CHECK(poly_norm(HomPoly::zero(2, l1.p.domain(), l1.p.codomain()), cfg).value ==
        0.0);

  for (double p : {1.5, 2.0, 3.0})
    for (int k : {2, 3, 4})
      CHECK(poly_norm(lp_swap_pair(p, k).p, cfg).value ==
            doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("norm estimates are deterministic and monotone in the trace") {
  std::mt19937_64 rng(12);
  const Space s(Field::complex, 3.0, 2);
  const auto p = random_poly(3, s, s, rng);
  OptimConfig cfg;
  const auto a = poly_norm(p, cfg);
  const auto b = poly_norm(p, cfg);
  CHECK(a.value == b.value);
  CHECK(a.maximizer == b.maximizer);
  for (std::size_t i = 1; i < a.trace.size(); ++i)
    CHECK(a.trace[i].best >= a.trace[i - 1].best);
}

TEST_CASE("grid certification holds under refinement") {
  std::mt19937_64 rng(21);
  for (double p : {1.0, 2.0, kInf}) {
    const Space s(Field::real, p, 2);
    const auto poly = random_poly(2, s, s, rng);
    OptimConfig cfg;
    const auto coarse = poly_norm(poly, cfg);
    REQUIRE(coarse.status == Certification::grid_certified);
    cfg.grid_resolution *= 2;
    const auto fine = poly_norm(poly, cfg);
    CHECK(std::abs(fine.value - coarse.value) <= coarse.gap);
  }
}

TEST_CASE("lower-bound semantics against a boundary grid") {
  // The estimate is an attained value, so it never exceeds a dense oracle by
  // more than the oracle's own discretization error.
  std::mt19937_64 rng(31);
  const Space s(Field::real, kInf, 2);
  for (int t = 0; t < 5; ++t) {
    const auto poly = random_poly(3, s, s, rng);
    double oracle = 0.0;
    polyrad::testing::for_each_linf_point(20000, [&](const Vector &x) {
      oracle = std::max(oracle, norm(s, evaluate(poly, x)));
    });
    const double v = poly_norm(poly, OptimConfig{}).value;
    CHECK(v >= oracle - 1e-9);
    CHECK(v <= oracle + 1e-6 * (1.0 + oracle));
  }
}

TEST_CASE("attainment sets of the worked examples") {
  OptimConfig cfg;
  SUBCASE("l1 square attains at the four vertices") {
    const auto xs = near_maximizer_set(l1_square_pair().q, 1e-6, cfg);
    for (const auto &x : xs)
      CHECK(std::min(std::abs(x[0]), std::abs(x[1])) < 1e-5);
    for (const Vector v : {Vector{1.0, 0.0}, Vector{-1.0, 0.0},
                           Vector{0.0, 1.0}, Vector{0.0, -1.0}}) {
      bool hit = false;
      for (const auto &x : xs)
        hit = hit || sup_distance(x, v) < 1e-5;
      CHECK(hit);
    }
  }
  SUBCASE("cubic on the square attains along the vertical faces") {
    const auto xs = near_maximizer_set(linf_cubic_pair().q, 1e-6, cfg);
    int along = 0;
    for (const auto &x : xs)
      if (std::abs(std::abs(x[0]) - 1.0) < 1e-9 && std::abs(x[1]) < 0.9)
        ++along;
    CHECK(along > 100);
  }
  SUBCASE("scalar monomial attains on the whole circle") {
    const auto xs = near_maximizer_set(
        scalar_monomial(Field::complex, 3, 1.0), 1e-6, cfg);
    REQUIRE(!xs.empty());
    for (const auto &x : xs)
      CHECK(std::abs(x[0]) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("half-norm map has no attainment") {
    CHECK_THROWS_AS(near_maximizer_set(l1_square_pair().q.scaled(0.5), 1e-6, cfg),
                    ComputationError);
  }
}

TEST_CASE("normalize_poly rescales to unit norm") {
  std::mt19937_64 rng(2);
  const Space s(Field::real, 2.0, 2);
  OptimConfig cfg;
  const auto p = normalize_poly(random_poly(2, s, s, rng), cfg);
  CHECK(poly_norm(p, cfg).value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(normalize_poly(HomPoly::zero(2, s, s), cfg), ComputationError);
}

TEST_CASE("config validation") {
  OptimConfig cfg;
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg = {};
  cfg.tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
}

} // TEST_SUITE
