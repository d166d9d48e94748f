#pragma once

#include <random>
#include <span>
#include <vector>

#include "polyrad/spaces.hpp"

namespace polyrad {

/// One monomial c * x^alpha contributing to output coordinate `out`.
struct Term {
  int out = 0;
  std::vector<int> alpha;
  Scalar coeff{0.0, 0.0};

  friend bool operator==(const Term &, const Term &) = default;
};

/// k-homogeneous polynomial between l_p spaces in sparse monomial form.
///
/// Terms are kept in canonical order (out ascending, then alpha
/// lexicographic) with exact zeros removed, so two polynomials with the same
/// coefficients compare equal term by term.
class HomPoly {
public:
  /// Validates degree, dimensions and field, then canonicalizes. Duplicate
  /// (out, alpha) keys are rejected.
  HomPoly(int degree, Space domain, Space codomain, std::vector<Term> terms);

  static HomPoly zero(int degree, Space domain, Space codomain);

  int degree() const noexcept { return degree_; }
  const Space &domain() const noexcept { return domain_; }
  const Space &codomain() const noexcept { return codomain_; }
  Field field() const noexcept { return domain_.field(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Sum of |c_alpha| over all terms.
  double coefficient_l1() const;

  /// Writes P(x) into `out` (size codomain.dim). No validation; hot path.
  void evaluate_into(std::span<const Scalar> x, std::span<Scalar> out) const;

  HomPoly scaled(Scalar factor) const;

  friend HomPoly operator+(const HomPoly &a, const HomPoly &b);
  friend bool operator==(const HomPoly &, const HomPoly &) = default;

private:
  int degree_;
  Space domain_;
  Space codomain_;
  std::vector<Term> terms_;
};

Vector evaluate(const HomPoly &p, std::span<const Scalar> x);

/// y* o P as a scalar-valued polynomial (codomain dim 1, same field).
HomPoly adjoint_apply(const HomPoly &p, const DualVector &y_star);

/// Square matrix acting on a single space (row-major).
class LinOp {
public:
  LinOp(Space space, std::vector<Scalar> matrix);

  static LinOp identity(const Space &space);
  static LinOp zero(const Space &space);
  static LinOp diagonal(const Space &space, std::span<const Scalar> diag);
  /// Rotation by `angle` on coordinates (i, j): e_i -> cos e_i + sin e_j.
  static LinOp rotation(const Space &space, double angle, int i = 0,
                        int j = 1);

  const Space &space() const noexcept { return space_; }
  int dim() const noexcept { return space_.dim(); }
  Scalar at(int row, int col) const { return matrix_[row * dim() + col]; }
  std::span<const Scalar> matrix() const noexcept { return matrix_; }

  Vector apply(std::span<const Scalar> x) const;

private:
  Space space_;
  std::vector<Scalar> matrix_;
};

/// T o P; requires T.space == P.codomain.
HomPoly compose_linear(const LinOp &t, const HomPoly &p);

/// T viewed as a 1-homogeneous polynomial on its space.
HomPoly linear_as_poly(const LinOp &t);

enum class SumKind { ell_inf, ell_1, ell_p };

struct SumRecipe {
  SumKind kind = SumKind::ell_inf;
  double p = 2.0; // used only for SumKind::ell_p
  std::vector<HomPoly> summands;
};

/// Blockwise polynomial (x_1 | ... | x_m) -> (Q_1(x_1) | ... | Q_m(x_m)) on
/// the E-sum of the summand spaces. Each summand space must be
/// one-dimensional or already carry the E-exponent, so that the sum is
/// again an l_p space.
HomPoly direct_sum(const SumRecipe &recipe);

/// Places R on one block of a larger polynomial: (x | w) -> (R(x) | 0).
HomPoly embed_block(const HomPoly &r, const Space &domain,
                    const Space &codomain, int domain_offset,
                    int codomain_offset);

/// All multi-indices of total degree k in n variables, lexicographic.
std::vector<std::vector<int>> monomials(int n, int k);

/// Polynomial with an independent standard Gaussian (real) or complex
/// Gaussian coefficient on every monomial of every output coordinate.
HomPoly random_poly(int degree, const Space &domain, const Space &codomain,
                    std::mt19937_64 &rng);

} // namespace polyrad
