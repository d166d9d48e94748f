#include <doctest.h>

#include <cmath>
#include <random>

#include "polyrad/error.hpp"
#include "polyrad/spaces.hpp"
#include "support.hpp"

using namespace polyrad;
using polyrad::testing::random_vector;

TEST_SUITE("spaces") {

TEST_CASE("norm on the unit spheres of small examples") {
  CHECK(norm(Space(Field::real, 1.0, 2), Vector{0.5, 0.5}) == 1.0);
  CHECK(norm(Space(Field::real, kInf, 2), Vector{1.0, 1.0 / std::sqrt(3.0)}) ==
        1.0);
  const Space c2(Field::complex, 2.0, 2);
  CHECK(norm(c2, Vector{{0.0, 0.6}, {0.8, 0.0}}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(norm(c2, Vector{0.0, 0.0}) == 0.0);
}

TEST_CASE("norm rejects bad vectors") {
  const Space s(Field::real, 2.0, 2);
  CHECK_THROWS_AS(norm(s, Vector{1.0}), InputError);
  CHECK_THROWS_AS(norm(s, Vector{1.0, std::nan("")}), InputError);
  CHECK_THROWS_AS(check_vector(s, Vector{{1.0, 1.0}, 0.0}), InputError);
  CHECK_THROWS_AS(Space(Field::real, 0.5, 2), InputError);
  CHECK_THROWS_AS(Space(Field::real, 2.0, 0), InputError);
}

TEST_CASE("pair is the bilinear coordinate action") {
  const Vector y{{0.3, -0.2}, {1.5, 0.7}};
  CHECK(pair(DualVector{{1.0, 0.0}}, y) == y[0]);
  CHECK(pair(DualVector{{1.0, 1.0}}, Vector{0.5, 0.5}) == Scalar(1.0));
  // b = (1/x1^2, t) against Q(x) = (x1^2, 0) with |x1| = 1.
  const double x1 = -1.0;
  CHECK(pair(DualVector{{1.0 / (x1 * x1), 0.37}}, Vector{x1 * x1, 0.0}) ==
        Scalar(1.0));
  // No conjugation on complex entries.
  CHECK(pair(DualVector{{Scalar(0.0, 1.0)}}, Vector{Scalar(0.0, 1.0)}) ==
        Scalar(-1.0));
}

TEST_CASE("dual of the dual is the space") {
  for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
    const Space s(Field::complex, p, 3);
    CHECK(s.dual().dual() == s);
  }
  CHECK(Space(Field::real, 1.0, 2).dual().p() == kInf);
  CHECK(conjugate_exponent(3.0) == doctest::Approx(1.5));
}

TEST_CASE("norming functionals of worked vectors") {
  SUBCASE("Euclidean is self-dual") {
    const auto fs =
        norming_functionals(Space(Field::real, 2.0, 2), Vector{0.6, 0.8});
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].coeffs[0].real() == doctest::Approx(0.6));
    CHECK(fs[0].coeffs[1].real() == doctest::Approx(0.8));
  }
  SUBCASE("l1 at a vertex: both sign patterns on the zero coordinate") {
    const auto fs =
        norming_functionals(Space(Field::real, 1.0, 2), Vector{1.0, 0.0});
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].coeffs == Vector{1.0, 1.0});
    CHECK(fs[1].coeffs == Vector{1.0, -1.0});
  }
  SUBCASE("l_inf with one maximal coordinate") {
    const auto fs = norming_functionals(Space(Field::real, kInf, 2),
                                        Vector{1.0, 1.0 / std::sqrt(3.0)});
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].coeffs == Vector{1.0, 0.0});
  }
  SUBCASE("zero vector has none") {
    CHECK_THROWS_AS(
        norming_functionals(Space(Field::real, 2.0, 2), Vector{0.0, 0.0}),
        InputError);
  }
}

TEST_CASE("l1 norming set at a vertex matches a dual-sphere grid") {
  // Every point b of the l_inf sphere with pair(b, y) = ||y|| lies on the
  // segment between the returned extreme points.
  const Space s(Field::real, 1.0, 2);
  const Vector y{1.0, 0.0};
  const auto fs = norming_functionals(s, y);
  double lo = kInf, hi = -kInf;
  polyrad::testing::for_each_linf_point(4000, [&](const Vector &b) {
    if (std::abs(pair(DualVector{b}, y).real() - 1.0) < 1e-12) {
      lo = std::min(lo, b[1].real());
      hi = std::max(hi, b[1].real());
    }
  });
  CHECK(lo == -1.0);
  CHECK(hi == 1.0);
  CHECK(fs.front().coeffs[1].real() == hi);
  CHECK(fs.back().coeffs[1].real() == lo);
}

TEST_CASE("Hoelder and norming properties on random vectors") {
  std::mt19937_64 rng(7);
  for (Field f : {Field::real, Field::complex})
    for (double p : {1.0, 1.5, 2.0, 3.0, kInf})
      for (int dim : {1, 2, 3}) {
        const Space s(f, p, dim);
        for (int t = 0; t < 20; ++t) {
          auto y = random_vector(dim, f, rng);
          if (t % 4 == 0)
            y[0] = 0.0;
          if (norm(s, y) == 0.0)
            continue;
          for (const auto &b : norming_functionals(s, y)) {
            CHECK(dual_norm(s, b) == doctest::Approx(1.0).epsilon(1e-12));
            const Scalar v = pair(b, y);
            CHECK(std::abs(v - norm(s, y)) <= 1e-12 * (1.0 + norm(s, y)));
          }
          const DualVector b{random_vector(dim, f, rng)};
          CHECK(std::abs(pair(b, y)) <= dual_norm(s, b) * norm(s, y) + 1e-12);
        }
      }
}

TEST_CASE("sphere samples are unit, deterministic and hit the vertices") {
  const Space s(Field::real, kInf, 2);
  const auto a = sample_sphere(s, 32, 11);
  const auto b = sample_sphere(s, 32, 11);
  CHECK(a == b);
  bool corner = false;
  for (const auto &v : a) {
    CHECK(norm(s, v) == doctest::Approx(1.0).epsilon(1e-12));
    corner = corner || (std::abs(v[0]) == 1.0 && std::abs(v[1]) == 1.0);
  }
  CHECK(corner);
  CHECK(sample_sphere(Space(Field::real, 2.0, 3), 1, 5).size() == 1);
  for (const auto &v : sample_sphere(Space(Field::complex, 1.5, 3), 50, 2))
    CHECK(norm(Space(Field::complex, 1.5, 3), v) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

} // TEST_SUITE
