#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace polyrad {

using Scalar = std::complex<double>;
using Vector = std::vector<Scalar>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Field { real, complex };

/// Finite-dimensional l_p^n over R or C. p may be kInf.
class Space {
public:
  Space(Field field, double p, int dim);

  Field field() const noexcept { return field_; }
  double p() const noexcept { return p_; }
  int dim() const noexcept { return dim_; }

  bool is_complex() const noexcept { return field_ == Field::complex; }
  bool is_sup() const noexcept { return p_ == kInf; }
  bool is_sum() const noexcept { return p_ == 1.0; }
  /// Dimension of the ambient space as a real vector space.
  int real_dim() const noexcept { return is_complex() ? 2 * dim_ : dim_; }

  /// l_q^n with 1/p + 1/q = 1.
  Space dual() const;

  friend bool operator==(const Space &, const Space &) = default;

private:
  Field field_;
  double p_;
  int dim_;
};

double conjugate_exponent(double p);

/// Coefficient representation b of a functional, acting by sum b_i y_i
/// (bilinear, no conjugation).
struct DualVector {
  Vector coeffs;
};

/// Throws InputError on dimension mismatch, non-finite entries, or a
/// non-zero imaginary part in a real space.
void check_vector(const Space &space, std::span<const Scalar> v);

double norm(const Space &space, std::span<const Scalar> v);
/// Norm of b in the dual space of `space`.
double dual_norm(const Space &space, const DualVector &b);
Scalar pair(const DualVector &b, std::span<const Scalar> y);

/// v / ||v||. Throws InputError for v = 0.
Vector normalized(const Space &space, Vector v);

/// Extreme points of the face {b : ||b||_q = 1, b(y) = ||y||}.
///
/// For 1 < p < inf the face is a single point. For p = 1 one functional is
/// produced per sign pattern on the zero coordinates of y; for p = inf one
/// per coordinate attaining max |y_i|. Coordinates with |y_i| <= zero_tol *
/// ||y|| count as zero (p = 1) or, within the same slack of the maximum, as
/// maximal (p = inf). `cap` = 0 means 2^dim; caps above 2^20 are rejected.
std::vector<DualVector> norming_functionals(const Space &space,
                                            std::span<const Scalar> y,
                                            std::size_t cap = 0,
                                            double zero_tol = 0.0);

/// Deterministic unit vectors. For p in {1, inf} the list starts with the
/// vertices +-e_i and (for p = inf) the sign vectors of the cube, then
/// continues with normalized Gaussian draws.
std::vector<Vector> sample_sphere(const Space &space, int count,
                                  std::uint64_t seed);

} // namespace polyrad
