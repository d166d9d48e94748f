#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "polyrad/index.hpp"
#include "polyrad/poly.hpp"
#include "polyrad/range.hpp"

namespace polyrad {

/// num / (den * sqrt(root)); root = 1 gives a rational.
struct Radical {
  double num = 0.0;
  double den = 1.0;
  double root = 1.0;

  double value() const { return num / (den * std::sqrt(root)); }
};

enum class Relation { equal, at_most };

/// How an expected value is known: a closed form, a brute-force oracle, or
/// directly from the definitions.
enum class Basis { closed_form, oracle, definition };

const char *to_string(Relation r);
const char *to_string(Basis b);

struct Expectation {
  std::string quantity;
  Radical expected;
  double tolerance = 0.0;
  Relation relation = Relation::equal;
  Basis basis = Basis::closed_form;
};

struct CheckResult {
  Expectation expect;
  double computed = 0.0;
  bool pass = false;
};

struct CaseReport {
  std::string name;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool pass = false;
};

struct CaseSpec {
  std::string name;
  std::string summary;
  std::vector<Expectation> expected;
  /// Computes every quantity named in `expected`.
  std::function<std::map<std::string, double>()> compute;
};

/// P and Q sharing domain and codomain.
struct PolyPair {
  HomPoly p;
  HomPoly q;
};

/// Q = (x1^2, x2^2), P = (x1^2/2 + 2 x1 x2, -x2^2/2 - x1 x2) on real l1^2.
PolyPair l1_square_pair(Field field = Field::real);

/// Q = (x1^k, x2^k), P = (x2^k, x1^k) on real lp^2.
PolyPair lp_swap_pair(double p, int k);

/// Q = (x1^3, x2^3), P = (x1^2 x2 - x2^3, 0) on real l_inf^2.
PolyPair linf_cubic_pair();

/// c * a^k on the scalar field.
HomPoly scalar_monomial(Field field, int k, Scalar c);

/// Gaussian polynomial divided by its norm estimate.
HomPoly random_unit_poly(int k, const Space &domain, const Space &codomain,
                         std::mt19937_64 &rng, const OptimConfig &cfg);

/// Every catalogued worked example, in a fixed order.
const std::vector<CaseSpec> &case_catalog();

/// Throws InputError for an unknown name.
CaseReport run_case(const std::string &name);

/// Compares computed values against the case expectations.
CaseReport evaluate_case(const CaseSpec &spec,
                         const std::map<std::string, double> &computed,
                         double seconds);

} // namespace polyrad
