#include "polyrad/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "polyrad/error.hpp"

namespace polyrad {

namespace {

constexpr std::size_t kMaxFaceVertices = std::size_t{1} << 20;

Scalar unit_phase(Scalar z) { return z / std::abs(z); }

} // namespace

Space::Space(Field field, double p, int dim) : field_(field), p_(p), dim_(dim) {
  if (!(p >= 1.0))
    throw InputError("space exponent must satisfy p >= 1, got " +
                     std::to_string(p));
  if (dim < 1)
    throw InputError("space dimension must be positive, got " +
                     std::to_string(dim));
}

Space Space::dual() const { return Space(field_, conjugate_exponent(p_), dim_); }

double conjugate_exponent(double p) {
  if (p == 1.0)
    return kInf;
  if (p == kInf)
    return 1.0;
  return p / (p - 1.0);
}

void check_vector(const Space &space, std::span<const Scalar> v) {
  if (static_cast<int>(v.size()) != space.dim())
    throw InputError("dimension mismatch: vector has " +
                     std::to_string(v.size()) + " entries, space has dim " +
                     std::to_string(space.dim()));
  for (const auto &z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InputError("non-finite vector entry");
    if (!space.is_complex() && z.imag() != 0.0)
      throw InputError("complex entry in a real space");
  }
}

double norm(const Space &space, std::span<const Scalar> v) {
  check_vector(space, v);
  double top = 0.0;
  for (const auto &z : v)
    top = std::max(top, std::abs(z));
  if (top == 0.0 || space.is_sup())
    return top;
  const double p = space.p();
  double acc = 0.0;
  if (p == 1.0) {
    for (const auto &z : v)
      acc += std::abs(z);
    return acc;
  }
  for (const auto &z : v) {
    const double r = std::abs(z) / top;
    acc += p == 2.0 ? r * r : std::pow(r, p);
  }
  return top * (p == 2.0 ? std::sqrt(acc) : std::pow(acc, 1.0 / p));
}

double dual_norm(const Space &space, const DualVector &b) {
  return norm(space.dual(), b.coeffs);
}

Scalar pair(const DualVector &b, std::span<const Scalar> y) {
  if (b.coeffs.size() != y.size())
    throw InputError("dimension mismatch in pairing: " +
                     std::to_string(b.coeffs.size()) + " vs " +
                     std::to_string(y.size()));
  Scalar acc{0.0, 0.0};
  for (std::size_t i = 0; i < y.size(); ++i)
    acc += b.coeffs[i] * y[i];
  return acc;
}

Vector normalized(const Space &space, Vector v) {
  const double n = norm(space, v);
  if (n == 0.0)
    throw InputError("cannot normalize the zero vector");
  for (auto &z : v)
    z /= n;
  return v;
}

std::vector<DualVector> norming_functionals(const Space &space,
                                            std::span<const Scalar> y,
                                            std::size_t cap, double zero_tol) {
  const double ny = norm(space, y);
  if (ny == 0.0)
    throw InputError("norming functional of the zero vector is undefined");
  const int n = space.dim();
  if (cap == 0)
    cap = n >= 20 ? kMaxFaceVertices : (std::size_t{1} << n);
  if (cap > kMaxFaceVertices)
    throw InputError("norming functional cap exceeds 2^20");

  std::vector<DualVector> out;
  if (space.is_sum()) {
    DualVector base{Vector(n)};
    std::vector<int> free;
    for (int i = 0; i < n; ++i) {
      if (std::abs(y[i]) <= zero_tol * ny)
        free.push_back(i);
      else
        base.coeffs[i] = std::conj(unit_phase(y[i]));
    }
    const std::size_t patterns =
        free.size() >= 20 ? kMaxFaceVertices : (std::size_t{1} << free.size());
    for (std::size_t mask = 0; mask < patterns && out.size() < cap; ++mask) {
      DualVector b = base;
      for (std::size_t j = 0; j < free.size(); ++j)
        b.coeffs[free[j]] = (mask >> j) & 1U ? -1.0 : 1.0;
      out.push_back(std::move(b));
    }
    return out;
  }
  if (space.is_sup()) {
    for (int i = 0; i < n && out.size() < cap; ++i) {
      if (std::abs(y[i]) >= ny - zero_tol * ny) {
        DualVector b{Vector(n)};
        b.coeffs[i] = std::conj(unit_phase(y[i]));
        out.push_back(std::move(b));
      }
    }
    return out;
  }
  // Unique norming functional: b_i = conj-phase(y_i) |y_i|^{p-1} / ||y||^{p-1}.
  const double p = space.p();
  DualVector b{Vector(n)};
  for (int i = 0; i < n; ++i) {
    const double r = std::abs(y[i]);
    if (r == 0.0)
      continue;
    b.coeffs[i] = std::conj(unit_phase(y[i])) * std::pow(r / ny, p - 1.0);
  }
  out.push_back(std::move(b));
  return out;
}

std::vector<Vector> sample_sphere(const Space &space, int count,
                                  std::uint64_t seed) {
  std::vector<Vector> out;
  if (count < 1)
    return out;
  const int n = space.dim();
  out.reserve(count);
  if (space.is_sum() || space.is_sup()) {
    for (int i = 0; i < n && static_cast<int>(out.size()) < count; ++i) {
      for (double s : {1.0, -1.0}) {
        if (static_cast<int>(out.size()) >= count)
          break;
        Vector e(n);
        e[i] = s;
        out.push_back(std::move(e));
      }
    }
    const std::size_t patterns = std::size_t{1} << std::min(n, 6);
    for (std::size_t mask = 0;
         mask < patterns && static_cast<int>(out.size()) < count; ++mask) {
      Vector v(n, 1.0);
      for (int i = 0; i < std::min(n, 6); ++i)
        if ((mask >> i) & 1U)
          v[i] = -1.0;
      out.push_back(normalized(space, std::move(v)));
    }
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (static_cast<int>(out.size()) < count) {
    Vector v(n);
    for (auto &z : v) {
      const double re = gauss(rng);
      z = Scalar(re, space.is_complex() ? gauss(rng) : 0.0);
    }
    if (norm(space, v) == 0.0)
      continue;
    out.push_back(normalized(space, std::move(v)));
  }
  return out;
}

} // namespace polyrad
