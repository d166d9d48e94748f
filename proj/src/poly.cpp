#include "polyrad/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "polyrad/error.hpp"

namespace polyrad {

namespace {

bool term_less(const Term &a, const Term &b) {
  if (a.out != b.out)
    return a.out < b.out;
  return a.alpha < b.alpha;
}

bool same_key(const Term &a, const Term &b) {
  return a.out == b.out && a.alpha == b.alpha;
}

// Sorts, sums coefficients of equal keys and drops exact zeros.
std::vector<Term> merge_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Term> merged;
  for (auto &t : terms) {
    if (!merged.empty() && same_key(merged.back(), t))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term &t) { return t.coeff == Scalar{}; });
  return merged;
}

double sum_exponent(const SumRecipe &r) {
  switch (r.kind) {
  case SumKind::ell_inf:
    return kInf;
  case SumKind::ell_1:
    return 1.0;
  case SumKind::ell_p:
    return r.p;
  }
  return r.p;
}

void enumerate_monomials(int n, int k, int pos, std::vector<int> &cur,
                         std::vector<std::vector<int>> &out) {
  if (pos == n - 1) {
    cur[pos] = k;
    out.push_back(cur);
    return;
  }
  for (int a = 0; a <= k; ++a) {
    cur[pos] = a;
    enumerate_monomials(n, k - a, pos + 1, cur, out);
  }
}

} // namespace

HomPoly::HomPoly(int degree, Space domain, Space codomain,
                 std::vector<Term> terms)
    : degree_(degree), domain_(domain), codomain_(codomain) {
  if (degree < 1)
    throw InputError("polynomial degree must be positive");
  if (domain.field() != codomain.field())
    throw InputError("domain and codomain must share the scalar field");
  for (const auto &t : terms) {
    if (t.out < 0 || t.out >= codomain.dim())
      throw InputError("term output index " + std::to_string(t.out) +
                       " out of range");
    if (static_cast<int>(t.alpha.size()) != domain.dim())
      throw InputError("multi-index length does not match domain dimension");
    int total = 0;
    for (int a : t.alpha) {
      if (a < 0)
        throw InputError("negative exponent in multi-index");
      total += a;
    }
    if (total != degree)
      throw InputError("multi-index does not sum to the degree");
    if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag()))
      throw InputError("non-finite coefficient");
    if (!domain.is_complex() && t.coeff.imag() != 0.0)
      throw InputError("complex coefficient in a real polynomial");
  }
  std::sort(terms.begin(), terms.end(), term_less);
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (same_key(terms[i - 1], terms[i]))
      throw InputError("duplicate (out, alpha) term");
  std::erase_if(terms, [](const Term &t) { return t.coeff == Scalar{}; });
  terms_ = std::move(terms);
}

HomPoly HomPoly::zero(int degree, Space domain, Space codomain) {
  return HomPoly(degree, domain, codomain, {});
}

double HomPoly::coefficient_l1() const {
  double acc = 0.0;
  for (const auto &t : terms_)
    acc += std::abs(t.coeff);
  return acc;
}

void HomPoly::evaluate_into(std::span<const Scalar> x,
                            std::span<Scalar> out) const {
  std::fill(out.begin(), out.end(), Scalar{});
  for (const auto &t : terms_) {
    Scalar m = t.coeff;
    for (std::size_t i = 0; i < t.alpha.size(); ++i)
      for (int a = 0; a < t.alpha[i]; ++a)
        m *= x[i];
    out[t.out] += m;
  }
}

HomPoly HomPoly::scaled(Scalar factor) const {
  if (!domain_.is_complex() && factor.imag() != 0.0)
    throw InputError("complex scale factor for a real polynomial");
  std::vector<Term> terms = terms_;
  for (auto &t : terms)
    t.coeff *= factor;
  return HomPoly(degree_, domain_, codomain_, merge_terms(std::move(terms)));
}

HomPoly operator+(const HomPoly &a, const HomPoly &b) {
  if (a.degree_ != b.degree_ || !(a.domain_ == b.domain_) ||
      !(a.codomain_ == b.codomain_))
    throw InputError("adding polynomials with different degree or spaces");
  std::vector<Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return HomPoly(a.degree_, a.domain_, a.codomain_,
                 merge_terms(std::move(terms)));
}

Vector evaluate(const HomPoly &p, std::span<const Scalar> x) {
  check_vector(p.domain(), x);
  Vector out(p.codomain().dim());
  p.evaluate_into(x, out);
  return out;
}

HomPoly adjoint_apply(const HomPoly &p, const DualVector &y_star) {
  if (static_cast<int>(y_star.coeffs.size()) != p.codomain().dim())
    throw InputError("functional dimension does not match codomain");
  check_vector(p.codomain().dual(), y_star.coeffs);
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const auto &t : p.terms())
    terms.push_back({0, t.alpha, y_star.coeffs[t.out] * t.coeff});
  const Space scalar(p.field(), p.codomain().p(), 1);
  return HomPoly(p.degree(), p.domain(), scalar, merge_terms(std::move(terms)));
}

LinOp::LinOp(Space space, std::vector<Scalar> matrix)
    : space_(space), matrix_(std::move(matrix)) {
  const auto n = static_cast<std::size_t>(space.dim());
  if (matrix_.size() != n * n)
    throw InputError("operator matrix must be dim x dim");
  for (const auto &z : matrix_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InputError("non-finite operator entry");
    if (!space.is_complex() && z.imag() != 0.0)
      throw InputError("complex entry in a real operator");
  }
}

LinOp LinOp::identity(const Space &space) {
  const int n = space.dim();
  std::vector<Scalar> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    m[i * n + i] = 1.0;
  return LinOp(space, std::move(m));
}

LinOp LinOp::zero(const Space &space) {
  const auto n = static_cast<std::size_t>(space.dim());
  return LinOp(space, std::vector<Scalar>(n * n));
}

LinOp LinOp::diagonal(const Space &space, std::span<const Scalar> diag) {
  const int n = space.dim();
  if (static_cast<int>(diag.size()) != n)
    throw InputError("diagonal length does not match dimension");
  std::vector<Scalar> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    m[i * n + i] = diag[i];
  return LinOp(space, std::move(m));
}

LinOp LinOp::rotation(const Space &space, double angle, int i, int j) {
  const int n = space.dim();
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw InputError("rotation plane indices out of range");
  LinOp r = identity(space);
  // Exact values at multiples of pi/2 keep signed permutations exact.
  double c = std::cos(angle), s = std::sin(angle);
  const double quarter = angle / (std::numbers::pi / 2.0);
  if (std::abs(quarter - std::round(quarter)) < 1e-15) {
    const long q = ((std::lround(quarter) % 4) + 4) % 4;
    c = q == 0 ? 1.0 : (q == 2 ? -1.0 : 0.0);
    s = q == 1 ? 1.0 : (q == 3 ? -1.0 : 0.0);
  }
  r.matrix_[i * n + i] = c;
  r.matrix_[j * n + j] = c;
  r.matrix_[j * n + i] = s;
  r.matrix_[i * n + j] = -s;
  return r;
}

Vector LinOp::apply(std::span<const Scalar> x) const {
  check_vector(space_, x);
  const int n = dim();
  Vector y(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      y[r] += matrix_[r * n + c] * x[c];
  return y;
}

HomPoly compose_linear(const LinOp &t, const HomPoly &p) {
  if (!(t.space() == p.codomain()))
    throw InputError("operator space does not match polynomial codomain");
  const int n = t.dim();
  std::vector<Term> terms;
  for (const auto &term : p.terms())
    for (int row = 0; row < n; ++row) {
      const Scalar a = t.at(row, term.out);
      if (a != Scalar{})
        terms.push_back({row, term.alpha, a * term.coeff});
    }
  return HomPoly(p.degree(), p.domain(), p.codomain(),
                 merge_terms(std::move(terms)));
}

HomPoly linear_as_poly(const LinOp &t) {
  const int n = t.dim();
  std::vector<Term> terms;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (t.at(r, c) == Scalar{})
        continue;
      std::vector<int> alpha(n, 0);
      alpha[c] = 1;
      terms.push_back({r, std::move(alpha), t.at(r, c)});
    }
  return HomPoly(1, t.space(), t.space(), std::move(terms));
}

HomPoly direct_sum(const SumRecipe &recipe) {
  if (recipe.summands.size() < 2)
    throw InputError("a direct sum needs at least two summands");
  const double pe = sum_exponent(recipe);
  const auto &first = recipe.summands.front();
  int dom_dim = 0, cod_dim = 0;
  for (const auto &q : recipe.summands) {
    if (q.degree() != first.degree())
      throw InputError("direct sum summands have mixed degrees");
    if (q.field() != first.field())
      throw InputError("direct sum summands have mixed fields");
    for (const Space *s : {&q.domain(), &q.codomain()})
      if (s->dim() > 1 && s->p() != pe)
        throw InputError("summand space exponent differs from the sum "
                         "exponent; the sum would not be an l_p space");
    dom_dim += q.domain().dim();
    cod_dim += q.codomain().dim();
  }
  const Space domain(first.field(), pe, dom_dim);
  const Space codomain(first.field(), pe, cod_dim);
  std::vector<Term> terms;
  int dom_off = 0, cod_off = 0;
  for (const auto &q : recipe.summands) {
    for (const auto &t : q.terms()) {
      std::vector<int> alpha(dom_dim, 0);
      std::copy(t.alpha.begin(), t.alpha.end(), alpha.begin() + dom_off);
      terms.push_back({t.out + cod_off, std::move(alpha), t.coeff});
    }
    dom_off += q.domain().dim();
    cod_off += q.codomain().dim();
  }
  return HomPoly(first.degree(), domain, codomain, std::move(terms));
}

HomPoly embed_block(const HomPoly &r, const Space &domain,
                    const Space &codomain, int domain_offset,
                    int codomain_offset) {
  if (domain_offset < 0 || codomain_offset < 0 ||
      domain_offset + r.domain().dim() > domain.dim() ||
      codomain_offset + r.codomain().dim() > codomain.dim())
    throw InputError("block does not fit into the target spaces");
  std::vector<Term> terms;
  for (const auto &t : r.terms()) {
    std::vector<int> alpha(domain.dim(), 0);
    std::copy(t.alpha.begin(), t.alpha.end(), alpha.begin() + domain_offset);
    terms.push_back({t.out + codomain_offset, std::move(alpha), t.coeff});
  }
  return HomPoly(r.degree(), domain, codomain, std::move(terms));
}

std::vector<std::vector<int>> monomials(int n, int k) {
  std::vector<std::vector<int>> out;
  if (n < 1 || k < 0)
    return out;
  std::vector<int> cur(n, 0);
  enumerate_monomials(n, k, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

HomPoly random_poly(int degree, const Space &domain, const Space &codomain,
                    std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto monos = monomials(domain.dim(), degree);
  std::vector<Term> terms;
  for (int j = 0; j < codomain.dim(); ++j)
    for (const auto &alpha : monos) {
      const double re = gauss(rng);
      const double im = domain.is_complex() ? gauss(rng) : 0.0;
      const Scalar c = domain.is_complex()
                           ? Scalar(re, im) / std::sqrt(2.0)
                           : Scalar(re, 0.0);
      terms.push_back({j, alpha, c});
    }
  return HomPoly(degree, domain, codomain, std::move(terms));
}

} // namespace polyrad
