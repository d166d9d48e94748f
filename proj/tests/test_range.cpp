#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "polyrad/cases.hpp"
#include "polyrad/error.hpp"
#include "polyrad/index.hpp"
#include "polyrad/range.hpp"
#include "support.hpp"

using namespace polyrad;
using polyrad::testing::random_vector;

namespace {

RangeConfig quick() {
  RangeConfig cfg;
  cfg.run_ladder = false;
  return cfg;
}

double cubic_face_oracle() {
  // On the face |x1| = 1 the functional is e1 and the value is |x2 - x2^3|.
  double best = 0.0;
  const int n = 2000000;
  for (int i = 0; i <= n; ++i) {
    const double t = -1.0 + 2.0 * i / n;
    best = std::max(best, std::abs(t - t * t * t));
  }
  return best;
}

} // namespace

TEST_SUITE("range") {

TEST_CASE("face_sup equals the best extreme norming functional") {
  std::mt19937_64 rng(17);
  for (Field f : {Field::real, Field::complex})
    for (double p : {1.0, 2.0, 3.0, kInf}) {
      const Space s(f, p, 3);
      for (int t = 0; t < 30; ++t) {
        auto u = random_vector(3, f, rng);
        if (t % 3 == 0)
          u[1] = 0.0;
        if (t % 5 == 0 && p == kInf && f == Field::complex)
          u[2] = u[0] * Scalar(0.0, 1.0);
        const auto w = random_vector(3, f, rng);
        const auto fs = face_sup(s, u, w, 1e-7);
        double best = 0.0;
        for (const auto &b : norming_functionals(s, u, 0, 1e-7))
          best = std::max(best, std::abs(pair(b, w)));
        if (f == Field::real || p == 2.0 || p == 3.0)
          CHECK(fs.value == doctest::Approx(best).epsilon(1e-9));
        else
          CHECK(fs.value >= best - 1e-9);
        CHECK(dual_norm(s, fs.y_star) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::abs(pair(fs.y_star, w)) ==
              doctest::Approx(fs.value).epsilon(1e-9));
      }
    }
}

TEST_CASE("slice_sup agrees with a dual-ball grid on real l1^2") {
  std::mt19937_64 rng(23);
  const Space s(Field::real, 1.0, 2);
  std::vector<Vector> duals;
  polyrad::testing::for_each_linf_point(20000,
                                        [&](const Vector &b) { duals.push_back(b); });
  for (int t = 0; t < 20; ++t) {
    auto u = random_vector(2, Field::real, rng);
    const double nu = norm(s, u);
    for (auto &z : u)
      z *= (1.0 + 0.05 * (t % 3)) / nu;
    const auto w = random_vector(2, Field::real, rng);
    for (double delta : {1e-1, 1e-2}) {
      double oracle = -kInf;
      for (const auto &b : duals)
        if (pair(DualVector{b}, u).real() > 1.0 - delta)
          oracle = std::max(oracle, std::abs(pair(DualVector{b}, w)));
      const auto ss = slice_sup(s, u, w, delta);
      CHECK(ss.value == doctest::Approx(oracle).epsilon(1e-3));
      const auto b = slice_functional(s, u, w, delta, ss, 1e-7);
      CHECK(dual_norm(s, b) == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(pair(b, u).real() >= 1.0 - delta - 1e-12);
    }
  }
  CHECK(slice_sup(s, Vector{0.5, 0.0}, Vector{1.0, 0.0}, 0.1).value == -kInf);
}

TEST_CASE("v_delta of the identity pair is one") {
  const auto l1 = l1_square_pair();
  for (double d : {1e-1, 1e-3, 1e-6})
    CHECK(v_delta(l1.q, l1.q, d, quick()).value ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("v_delta of the l1 square example matches the grid oracle") {
  const auto l1 = l1_square_pair();
  const double oracle = polyrad::testing::l1sq_slice_oracle(l1.p, l1.q, 1e-3, 4000, 800);
  const auto est = v_delta(l1.p, l1.q, 1e-3, quick());
  CHECK(oracle == doctest::Approx(0.5).epsilon(5e-3));
  CHECK(est.value == doctest::Approx(0.5).epsilon(5e-3));
  // Both are attained values; the estimator must not fall short of the grid.
  CHECK(est.value >= oracle - 1e-6);
  REQUIRE(est.witness);
  CHECK(est.witness->residual <= 1e-3);
  CHECK(std::abs(est.witness->value) == doctest::Approx(est.value).epsilon(1e-9));
}

TEST_CASE("v_delta rejects an empty slice") {
  const auto l1 = l1_square_pair();
  CHECK_THROWS_AS(v_delta(l1.p, l1.q.scaled(0.5), 0.1, quick()), ComputationError);
}

TEST_CASE("numerical radius of the worked examples") {
  RangeConfig cfg;
  SUBCASE("l1 square") {
    const auto l1 = l1_square_pair();
    const auto est = numerical_radius(l1.p, l1.q, cfg);
    CHECK(est.value == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(est.consistent);
    REQUIRE(est.agreement);
    CHECK(*est.agreement <= 5e-3);
    for (std::size_t i = 1; i < est.ladder.size(); ++i)
      CHECK(est.ladder[i].value <= est.ladder[i - 1].value + 1e-9);
  }
  SUBCASE("cubic on the square") {
    const auto pr = linf_cubic_pair();
    const auto est = numerical_radius(pr.p, pr.q, cfg);
    const double closed = 2.0 / (3.0 * std::sqrt(3.0));
    CHECK(std::abs(est.value - closed) <= 1e-6);
    CHECK(std::abs(cubic_face_oracle() - closed) <= 1e-9);
    REQUIRE(est.witness);
    CHECK(std::abs(est.witness->x[0]) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(std::abs(est.witness->x[1]) ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-4));
  }
  SUBCASE("coordinate swap on l_p^2") {
    for (double p : {1.5, 2.0, 3.0}) {
      const auto pr = lp_swap_pair(p, static_cast<int>(std::ceil(p)));
      CHECK(attainment_radius(pr.p, pr.q, cfg).value <= 1e-6);
    }
  }
}

TEST_CASE("limit formula") {
  RangeConfig cfg;
  SUBCASE("scalar square against itself") {
    const auto q = scalar_monomial(Field::complex, 2, 1.0);
    CHECK(radius_via_limit(q, q, cfg).value == doctest::Approx(1.0).epsilon(1e-6));
    const auto qr = scalar_monomial(Field::real, 2, 1.0);
    CHECK(radius_via_limit(qr, qr, cfg).value == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("l1 square example") {
    const auto l1 = l1_square_pair();
    const auto lim = radius_via_limit(l1.p, l1.q, cfg);
    CHECK(std::abs(lim.value - 0.5) <= 5e-3);
    CHECK(std::abs(lim.value - attainment_radius(l1.p, l1.q, cfg).value) <= 5e-3);
    CHECK(lim.method == RadiusMethod::limit_formula);
  }
  SUBCASE("coordinate swap has limit zero") {
    for (double p : {1.5, 2.0, 3.0}) {
      const auto pr = lp_swap_pair(p, static_cast<int>(std::ceil(p)));
      CHECK(radius_via_limit(pr.p, pr.q, cfg).value <= 1e-3);
    }
  }
  SUBCASE("complex phase grid error is recorded") {
    const auto q = scalar_monomial(Field::complex, 3, 1.0);
    const auto p = scalar_monomial(Field::complex, 3, Scalar(0.0, 1.0));
    const auto lim = radius_via_limit(p, q, cfg);
    CHECK(lim.value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(lim.theta_error ==
          doctest::Approx(lim.value * (1.0 - std::cos(std::numbers::pi / 64))));
  }
}

TEST_CASE("range clouds") {
  RangeConfig cfg;
  SUBCASE("identity pair contains one") {
    const auto l1 = l1_square_pair();
    const auto c = range_cloud(l1.q, l1.q, 1e-6, 100, 1, cfg);
    bool one = false;
    for (const auto &z : c.points) {
      CHECK(std::abs(z) <= 1.0 + 1e-9);
      one = one || std::abs(z - 1.0) < 1e-9;
    }
    CHECK(one);
    REQUIRE(!c.hull.empty());
    CHECK(c.hull.back().real() == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("l1 square example is the two-point set") {
    const auto l1 = l1_square_pair();
    const auto c = range_cloud(l1.p, l1.q, 1e-6, 200, 1, cfg);
    REQUIRE(!c.points.empty());
    for (const auto &z : c.points)
      CHECK(std::abs(std::abs(z.real()) - 0.5) <= 1e-3);
    const double vd = v_delta(l1.p, l1.q, 1e-6, quick()).value;
    for (const auto &z : c.points)
      CHECK(std::abs(z) <= vd + 1e-9);
  }
  SUBCASE("complex scalar rotation lies on the unit circle") {
    const auto q = scalar_monomial(Field::complex, 2, 1.0);
    const auto p = scalar_monomial(Field::complex, 2, Scalar(0.0, 1.0));
    const auto c = range_cloud(p, q, 1e-6, 50, 3, cfg);
    REQUIRE(!c.points.empty());
    for (const auto &z : c.points)
      CHECK(std::abs(z) == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("hull contains every point") {
    std::mt19937_64 rng(41);
    const Space s(Field::complex, 2.0, 2);
    const auto q = random_unit_poly(2, s, s, rng, cfg.optim);
    const auto p = random_poly(2, s, s, rng);
    const auto c = range_cloud(p, q, 1e-2, 300, 4, cfg);
    const auto &h = c.hull;
    REQUIRE(h.size() >= 3);
    for (const auto &z : c.points)
      for (std::size_t i = 0; i < h.size(); ++i) {
        const auto a = h[i], b = h[(i + 1) % h.size()];
        const double cross = (b - a).real() * (z - a).imag() -
                             (b - a).imag() * (z - a).real();
        CHECK(cross >= -1e-9);
      }
  }
}

TEST_CASE("convex hull") {
  const std::vector<Scalar> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0}};
  const auto h = convex_hull(pts, false);
  CHECK(h.size() == 4);
  const auto line = convex_hull({3.0, -1.0, 2.0}, true);
  REQUIRE(line.size() == 2);
  CHECK(line[0] == Scalar(-1.0));
  CHECK(line[1] == Scalar(3.0));
}

TEST_CASE("radius invariants on random instances") {
  std::mt19937_64 rng(77);
  RangeConfig cfg = quick();
  for (double p : {1.0, 2.0, kInf})
    for (int t = 0; t < 3; ++t) {
      const Space s(Field::real, p, 2);
      const auto q = random_unit_poly(2, s, s, rng, cfg.optim);
      const auto poly = random_poly(2, s, s, rng);
      const auto est = numerical_radius(poly, q, cfg);
      CHECK(est.value >= 0.0);
      CHECK(est.value <= poly_norm(poly, cfg.optim).value + 1e-6);
      CHECK(numerical_radius(q, q, cfg).value == doctest::Approx(1.0).epsilon(1e-9));
      const double c = -2.5;
      CHECK(numerical_radius(poly.scaled(c), q, cfg).value ==
            doctest::Approx(std::abs(c) * est.value).epsilon(1e-9));
      REQUIRE(est.witness);
      const auto &w = *est.witness;
      CHECK(norm(s, w.x) == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(dual_norm(s, w.y_star) == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(w.residual >= -1e-10);
      CHECK(std::abs(w.value) == doctest::Approx(est.value).epsilon(1e-9));
    }
}

TEST_CASE("composition with an operator does not exceed its radius") {
  std::mt19937_64 rng(91);
  RangeConfig cfg = quick();
  for (double p : {1.0, 2.0, kInf}) {
    const Space s(Field::real, p, 2);
    for (int t = 0; t < 3; ++t) {
      const auto q = random_unit_poly(2, s, s, rng, cfg.optim);
      const LinOp op(s, random_vector(4, Field::real, rng));
      CHECK(numerical_radius(compose_linear(op, q), q, cfg).value <=
            op_numerical_radius(op, cfg) + 1e-6);
    }
  }
}

TEST_CASE("require_norm_one") {
  OptimConfig cfg;
  CHECK(require_norm_one(l1_square_pair().q, cfg) == doctest::Approx(1.0));
  CHECK_THROWS_AS(require_norm_one(l1_square_pair().q.scaled(0.5), cfg),
                  PreconditionError);
}

} // TEST_SUITE
