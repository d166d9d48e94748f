#include "polyrad/range.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "polyrad/error.hpp"
#include "polyrad/parallel.hpp"

namespace polyrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGolden = 0.6180339887498949;
constexpr int kSliceThetaGrid = 16;

Scalar phase(Scalar z) {
  const double a = std::abs(z);
  return a == 0.0 ? Scalar{1.0, 0.0} : z / a;
}

struct Images {
  Vector u;
  Vector w;
};

Images images(const HomPoly &p, const HomPoly &q, std::span<const Scalar> x) {
  Images im{Vector(q.codomain().dim()), Vector(p.codomain().dim())};
  q.evaluate_into(x, im.u);
  p.evaluate_into(x, im.w);
  return im;
}

void check_pair(const HomPoly &p, const HomPoly &q) {
  if (!(p.domain() == q.domain()) || !(p.codomain() == q.codomain()))
    throw InputError("P and Q must share domain and codomain");
  if (p.degree() != q.degree())
    throw InputError("P and Q must have the same degree");
}

// min over mu >= 0 of ||theta w + mu u|| - mu c, by golden section on a
// bracket that provably contains the minimizer.
double dual_min(const Space &cod, std::span<const Scalar> u,
                std::span<const Scalar> w, Scalar theta, double c,
                double nu, double nw, double *mu_out) {
  Vector z(u.size());
  auto phi = [&](double mu) {
    for (std::size_t i = 0; i < u.size(); ++i)
      z[i] = theta * w[i] + mu * u[i];
    return norm(cod, z) - mu * c;
  };
  double best_mu = 0.0;
  double best = nw;
  if (nw > 0.0) {
    double a = 0.0, b = 2.0 * nw / (nu - c) + 1.0;
    const double stop = 1e-13 * b;
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = phi(x1), f2 = phi(x2);
    for (int it = 0; it < 200 && b - a > stop; ++it) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kGolden * (b - a);
        f1 = phi(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kGolden * (b - a);
        f2 = phi(x2);
      }
    }
    const double mid = 0.5 * (a + b);
    const double fm = phi(mid);
    if (fm < best) {
      best = fm;
      best_mu = mid;
    }
  }
  if (mu_out)
    *mu_out = best_mu;
  return best;
}

// max Re(b alpha) over |b| <= 1 (b real for real fields) with
// Re(b beta) >= r. Falls back to the most feasible b if the set is empty.
Scalar disk_halfplane(Scalar alpha, Scalar beta, double r, bool real) {
  if (real) {
    const double a = alpha.real(), bt = beta.real();
    double lo = -1.0, hi = 1.0;
    if (bt > 0.0)
      lo = std::max(lo, r / bt);
    else if (bt < 0.0)
      hi = std::min(hi, r / bt);
    else if (r > 0.0)
      return 1.0;
    if (lo > hi)
      return bt >= 0.0 ? 1.0 : -1.0;
    return a >= 0.0 ? hi : lo;
  }
  const Scalar pb = std::conj(phase(beta));
  const Scalar b0 = std::abs(alpha) > 0.0 ? std::conj(phase(alpha)) : pb;
  if ((b0 * beta).real() >= r)
    return b0;
  const double nb = std::abs(beta);
  if (nb <= r)
    return pb;
  const double psi = std::acos(std::clamp(r / nb, -1.0, 1.0));
  const Scalar c1 = pb * std::polar(1.0, psi), c2 = pb * std::polar(1.0, -psi);
  return (c1 * alpha).real() >= (c2 * alpha).real() ? c1 : c2;
}

// Best point of the face of z (in the dual ball) for Re(theta b(w)) subject
// to Re b(u) >= c.
DualVector face_optimum(const Space &cod, std::span<const Scalar> z,
                        std::span<const Scalar> u, std::span<const Scalar> w,
                        Scalar theta, double c, double tol) {
  const int n = cod.dim();
  const double nz = norm(cod, z);
  DualVector b{Vector(n)};
  if (cod.is_sum()) {
    std::vector<int> free;
    Scalar obj{0.0, 0.0};
    double con = 0.0;
    for (int i = 0; i < n; ++i) {
      if (std::abs(z[i]) <= tol * nz) {
        free.push_back(i);
        continue;
      }
      b.coeffs[i] = std::conj(phase(z[i]));
      obj += b.coeffs[i] * theta * w[i];
      con += (b.coeffs[i] * u[i]).real();
    }
    if (free.size() == 1) {
      const int i = free.front();
      b.coeffs[i] =
          disk_halfplane(theta * w[i], u[i], c - con, !cod.is_complex());
    } else if (!free.empty()) {
      double extra = 0.0;
      for (int i : free) {
        b.coeffs[i] = std::conj(phase(theta * w[i]));
        extra += (b.coeffs[i] * u[i]).real();
      }
      if (con + extra < c)
        for (int i : free)
          b.coeffs[i] = std::conj(phase(u[i]));
    }
    return b;
  }
  if (cod.is_sup()) {
    struct Vertex {
      int i;
      Scalar coeff;
      double obj, con;
    };
    std::vector<Vertex> vs;
    for (int i = 0; i < n; ++i) {
      if (std::abs(z[i]) < nz - tol * nz)
        continue;
      const Scalar v = std::conj(phase(z[i]));
      vs.push_back({i, v, (theta * v * w[i]).real(), (v * u[i]).real()});
    }
    double best = -kInf;
    for (const auto &v : vs)
      if (v.con >= c && v.obj > best) {
        best = v.obj;
        std::fill(b.coeffs.begin(), b.coeffs.end(), Scalar{});
        b.coeffs[v.i] = v.coeff;
      }
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t e = 0; e < vs.size(); ++e) {
        const auto &hi = vs[a], &lo = vs[e];
        if (!(hi.con >= c && lo.con < c))
          continue;
        const double t = (c - lo.con) / (hi.con - lo.con);
        const double obj = t * hi.obj + (1.0 - t) * lo.obj;
        if (obj > best) {
          best = obj;
          std::fill(b.coeffs.begin(), b.coeffs.end(), Scalar{});
          b.coeffs[hi.i] = t * hi.coeff;
          b.coeffs[lo.i] = (1.0 - t) * lo.coeff;
        }
      }
    if (best == -kInf && !vs.empty()) {
      const auto top = std::max_element(
          vs.begin(), vs.end(),
          [](const Vertex &x, const Vertex &y) { return x.con < y.con; });
      b.coeffs[top->i] = top->coeff;
    }
    return b;
  }
  return norming_functionals(cod, z).front();
}

// Moves b towards the norming functional of u until Re b(u) >= c, then
// rescales to the dual sphere.
DualVector make_feasible(const Space &cod, DualVector b,
                         std::span<const Scalar> u, double c) {
  const double rb = pair(b, u).real();
  if (rb < c) {
    const DualVector bu = norming_functionals(cod, u, 1).front();
    const double nu = norm(cod, u);
    const double s = std::clamp((c - rb) / (nu - rb), 0.0, 1.0);
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
      b.coeffs[i] = (1.0 - s) * b.coeffs[i] + s * bu.coeffs[i];
  }
  const double nb = dual_norm(cod, b);
  if (nb > 0.0 && nb < 1.0) {
    const double r = pair(b, u).real();
    if (r >= 0.0 || r / nb >= c)
      for (auto &z : b.coeffs)
        z /= nb;
  }
  return b;
}

WitnessPair make_witness(std::span<const Scalar> x, DualVector b,
                         const Images &im) {
  WitnessPair wp;
  wp.x.assign(x.begin(), x.end());
  wp.residual = 1.0 - pair(b, im.u).real();
  wp.value = pair(b, im.w);
  wp.y_star = std::move(b);
  return wp;
}

struct SliceSearch {
  SphereSweep sweep;
  std::optional<WitnessPair> witness;
  double value = -kInf;
};

WitnessPair slice_witness(const HomPoly &p, const HomPoly &q,
                          std::span<const Scalar> x, double delta,
                          double face_tol) {
  const auto im = images(p, q, x);
  const auto dual = slice_sup(q.codomain(), im.u, im.w, delta);
  auto b =
      slice_functional(q.codomain(), im.u, im.w, delta, dual, face_tol);
  return make_witness(x, std::move(b), im);
}

SliceSearch search_slice(const HomPoly &p, const HomPoly &q, double delta,
                         const RangeConfig &cfg,
                         std::span<const Vector> extra) {
  if (!(delta > 0.0))
    throw InputError("delta must be positive");
  const Space &cod = q.codomain();
  const Objective f = [&](std::span<const Scalar> x) {
    const auto im = images(p, q, x);
    return slice_sup(cod, im.u, im.w, delta).value;
  };
  SliceSearch out;
  out.sweep = sweep_sphere(q.domain(), f, cfg.optim, {kInf, true});
  std::vector<Vector> cands;
  if (out.sweep.best_value > -kInf)
    cands.push_back(out.sweep.best_point);
  for (std::size_t r = 0; r < out.sweep.refined.size(); ++r)
    if (out.sweep.refined_values[r] > -kInf)
      cands.push_back(out.sweep.refined[r]);
  for (const auto &x : extra)
    if (f(x) > -kInf)
      cands.push_back(x);
  if (cands.empty()) {
    std::ostringstream os;
    os << "empty δ-slice: no unit x with ||Q(x)|| > 1 - " << delta;
    throw ComputationError(os.str());
  }
  for (const auto &x : cands) {
    auto wp = slice_witness(p, q, x, delta, cfg.face_tol);
    const double v = std::abs(wp.value);
    if (v > out.value) {
      out.value = v;
      out.witness = std::move(wp);
    }
  }
  return out;
}

} // namespace

void RangeConfig::validate() const {
  optim.validate();
  if (!(attain_eta > 0.0))
    throw InputError("attain_eta must be positive");
  if (!(face_tol >= 0.0))
    throw InputError("face_tol must be non-negative");
  for (std::size_t i = 0; i < delta_ladder.size(); ++i) {
    if (!(delta_ladder[i] > 0.0))
      throw InputError("delta ladder entries must be positive");
    if (i > 0 && !(delta_ladder[i] < delta_ladder[i - 1]))
      throw InputError("delta ladder must be strictly decreasing");
  }
  if (!(cross_tol > 0.0))
    throw InputError("cross_tol must be positive");
  if (theta_points < 4)
    throw InputError("theta_points must be >= 4");
  if (!(alpha_start > 0.0) || alpha_levels < 1 || !(alpha_stop > 0.0))
    throw InputError("alpha ladder settings must be positive");
}

const char *to_string(RadiusMethod m) {
  switch (m) {
  case RadiusMethod::delta_ladder:
    return "delta_ladder";
  case RadiusMethod::attainment:
    return "attainment";
  case RadiusMethod::limit_formula:
    return "limit_formula";
  }
  return "unknown";
}

FaceSup face_sup(const Space &cod, std::span<const Scalar> u,
                 std::span<const Scalar> w, double face_tol) {
  const int n = cod.dim();
  const double nu = norm(cod, u);
  if (nu == 0.0)
    throw ComputationError("norming functional of Q(x) = 0 is undefined");
  FaceSup r;
  r.y_star.coeffs.assign(n, Scalar{});
  auto &b = r.y_star.coeffs;
  if (n == 1) {
    b[0] = std::conj(phase(u[0]));
    r.value = std::abs(w[0]);
    return r;
  }
  if (cod.is_sum()) {
    Scalar fixed{0.0, 0.0};
    std::vector<int> free;
    for (int i = 0; i < n; ++i) {
      if (std::abs(u[i]) <= face_tol * nu) {
        free.push_back(i);
        continue;
      }
      b[i] = std::conj(phase(u[i]));
      fixed += b[i] * w[i];
    }
    const Scalar ph = phase(fixed);
    r.value = std::abs(fixed);
    for (int i : free) {
      b[i] = ph * std::conj(phase(w[i]));
      r.value += std::abs(w[i]);
    }
    return r;
  }
  if (cod.is_sup()) {
    int best = -1;
    for (int i = 0; i < n; ++i)
      if (std::abs(u[i]) >= nu - face_tol * nu &&
          (best < 0 || std::abs(w[i]) > std::abs(w[best])))
        best = i;
    b[best] = std::conj(phase(u[best]));
    r.value = std::abs(w[best]);
    return r;
  }
  r.y_star = norming_functionals(cod, u).front();
  r.value = std::abs(pair(r.y_star, w));
  return r;
}

SliceSup slice_sup(const Space &cod, std::span<const Scalar> u,
                   std::span<const Scalar> w, double delta) {
  const double c = 1.0 - delta;
  const double nu = norm(cod, u);
  SliceSup r;
  if (!(nu > c)) {
    r.value = -kInf;
    return r;
  }
  const double nw = norm(cod, w);
  if (cod.dim() == 1) {
    r.value = nw;
    return r;
  }
  if (!cod.is_complex()) {
    double mu_p = 0.0, mu_m = 0.0;
    const double vp = dual_min(cod, u, w, 1.0, c, nu, nw, &mu_p);
    const double vm = dual_min(cod, u, w, -1.0, c, nu, nw, &mu_m);
    if (vp >= vm)
      r = {vp, 1.0, mu_p};
    else
      r = {vm, -1.0, mu_m};
    return r;
  }
  auto g = [&](double angle, double *mu) {
    return dual_min(cod, u, w, std::polar(1.0, angle), c, nu, nw, mu);
  };
  double best_angle = 0.0, best_mu = 0.0, best = -kInf;
  for (int j = 0; j < kSliceThetaGrid; ++j) {
    const double a = kTwoPi * j / kSliceThetaGrid;
    double mu = 0.0;
    const double v = g(a, &mu);
    if (v > best) {
      best = v;
      best_angle = a;
      best_mu = mu;
    }
  }
  const double h = kTwoPi / kSliceThetaGrid;
  double a = best_angle - h, b = best_angle + h;
  double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
  double m1 = 0.0, m2 = 0.0;
  double f1 = g(x1, &m1), f2 = g(x2, &m2);
  for (int it = 0; it < 40; ++it) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      m2 = m1;
      x1 = b - kGolden * (b - a);
      f1 = g(x1, &m1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      m1 = m2;
      x2 = a + kGolden * (b - a);
      f2 = g(x2, &m2);
    }
  }
  if (f1 > best) {
    best = f1;
    best_angle = x1;
    best_mu = m1;
  }
  if (f2 > best) {
    best = f2;
    best_angle = x2;
    best_mu = m2;
  }
  r.value = best;
  r.theta = std::polar(1.0, best_angle);
  r.mu = best_mu;
  return r;
}

DualVector slice_functional(const Space &cod, std::span<const Scalar> u,
                            std::span<const Scalar> w, double delta,
                            const SliceSup &dual, double face_tol) {
  const double c = 1.0 - delta;
  const int n = cod.dim();
  const DualVector bu = norming_functionals(cod, u, 1).front();
  if (n == 1)
    return bu;
  Vector z(n);
  for (int i = 0; i < n; ++i)
    z[i] = dual.theta * w[i] + dual.mu * u[i];
  DualVector best = bu;
  double best_val = std::abs(pair(bu, w));
  if (norm(cod, z) > 0.0) {
    auto b = make_feasible(
        cod, face_optimum(cod, z, u, w, dual.theta, c, face_tol), u, c);
    const double v = std::abs(pair(b, w));
    if (pair(b, u).real() >= c - 1e-14 && v > best_val)
      best = std::move(b);
  }
  return best;
}

double require_norm_one(const HomPoly &q, const OptimConfig &cfg, double tol) {
  const double nq = poly_norm(q, cfg).value;
  if (std::abs(nq - 1.0) > tol) {
    std::ostringstream os;
    os << "Q not norm-one: estimated ||Q|| = " << nq;
    throw PreconditionError(os.str());
  }
  return nq;
}

RadiusEstimate v_delta(const HomPoly &p, const HomPoly &q, double delta,
                       const RangeConfig &cfg) {
  check_pair(p, q);
  cfg.validate();
  auto s = search_slice(p, q, delta, cfg, {});
  RadiusEstimate est;
  est.method = RadiusMethod::delta_ladder;
  est.value = s.value;
  est.witness = std::move(s.witness);
  est.ladder.push_back({delta, s.value});
  return est;
}

RadiusEstimate attainment_radius(const HomPoly &p, const HomPoly &q,
                                 const RangeConfig &cfg) {
  check_pair(p, q);
  cfg.validate();
  const Space &dom = q.domain();
  const Space &cod = q.codomain();
  const Objective qnorm = [&](std::span<const Scalar> x) {
    Vector y(cod.dim());
    q.evaluate_into(x, y);
    return norm(cod, y);
  };
  const SearchOptions opts{norm_lipschitz(q), true};
  const auto s = sweep_sphere(dom, qnorm, cfg.optim, opts);
  // Over a sup-norm codomain the attainment set is the union of the sets
  // where one coordinate attains. Sweeping each coordinate on its own keeps
  // components that a flat plateau of another coordinate would crowd out of
  // the refinement seeds (blocks of a direct sum).
  std::vector<SphereSweep> coords;
  if (cod.is_sup() && cod.dim() > 1)
    coords = parallel_map(static_cast<std::size_t>(cod.dim()), [&](std::size_t j) {
      const Objective qj = [&](std::span<const Scalar> x) {
        Vector y(cod.dim());
        q.evaluate_into(x, y);
        return std::abs(y[j]);
      };
      return sweep_sphere(dom, qj, cfg.optim, opts);
    });
  double nq = s.best_value;
  for (const auto &c : coords)
    nq = std::max(nq, c.best_value);
  if (std::abs(nq - 1.0) > 1e-4) {
    std::ostringstream os;
    os << "Q not norm-one: estimated ||Q|| = " << nq;
    throw PreconditionError(os.str());
  }
  const double threshold = nq - cfg.attain_eta;
  auto points = points_above(s, threshold, 10.0 * cfg.attain_eta);
  for (const auto &c : coords) {
    const auto more = points_above(c, threshold, 10.0 * cfg.attain_eta);
    points.insert(points.end(), more.begin(), more.end());
  }

  const Objective h = [&](std::span<const Scalar> x) {
    const auto im = images(p, q, x);
    if (norm(cod, im.u) < threshold)
      return -kInf;
    return face_sup(cod, im.u, im.w, cfg.face_tol).value;
  };
  const auto values =
      parallel_map(points.size(), [&](std::size_t i) { return h(points[i]); });

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return values[a] > values[b]; });
  const bool chart = s.spacing > 0.0;
  const double sep = chart ? 4.0 * s.spacing : 0.1;
  std::vector<std::size_t> seeds;
  for (auto i : order) {
    if (static_cast<int>(seeds.size()) >= cfg.optim.restarts)
      break;
    const bool far = std::none_of(seeds.begin(), seeds.end(), [&](auto j) {
      return sup_distance(points[i], points[j]) < sep;
    });
    if (far)
      seeds.push_back(i);
  }
  const double step = chart ? s.spacing : cfg.optim.step_init;
  const auto refined = parallel_map(seeds.size(), [&](std::size_t r) {
    return refine_locally(dom, h, points[seeds[r]], values[seeds[r]], step,
                          cfg.optim);
  });

  Vector best_x = points[order.front()];
  double best = values[order.front()];
  for (const auto &r : refined)
    if (r.value > best) {
      best = r.value;
      best_x = r.point;
    }
  const auto im = images(p, q, best_x);
  auto fs = face_sup(cod, im.u, im.w, cfg.face_tol);
  RadiusEstimate est;
  est.method = RadiusMethod::attainment;
  est.q_norm = nq;
  est.witness = make_witness(best_x, std::move(fs.y_star), im);
  est.value = std::abs(est.witness->value);
  return est;
}

RadiusEstimate numerical_radius(const HomPoly &p, const HomPoly &q,
                                const RangeConfig &cfg) {
  auto est = attainment_radius(p, q, cfg);
  if (!cfg.run_ladder || cfg.delta_ladder.empty())
    return est;
  const std::vector<Vector> extra{est.witness->x};
  std::vector<double> values(cfg.delta_ladder.size());
  double running = 0.0;
  for (std::size_t k = cfg.delta_ladder.size(); k-- > 0;) {
    const auto s = search_slice(p, q, cfg.delta_ladder[k], cfg, extra);
    running = std::max(running, s.value);
    values[k] = running;
  }
  for (std::size_t k = 0; k < values.size(); ++k)
    est.ladder.push_back({cfg.delta_ladder[k], values[k]});
  const double gap = std::abs(est.value - values.back());
  est.agreement = gap;
  est.consistent = gap <= cfg.cross_tol;
  if (gap > 10.0 * cfg.cross_tol) {
    std::ostringstream os;
    os << "estimators disagree: attainment " << est.value << " vs delta "
       << cfg.delta_ladder.back() << " ladder " << values.back();
    throw ComputationError(os.str());
  }
  return est;
}

RadiusEstimate radius_via_limit(const HomPoly &p, const HomPoly &q,
                                const RangeConfig &cfg) {
  check_pair(p, q);
  cfg.validate();
  const double nq = require_norm_one(q, cfg.optim);
  const bool cplx = q.field() == Field::complex;
  std::vector<Scalar> thetas;
  if (cplx)
    for (int j = 0; j < cfg.theta_points; ++j)
      thetas.push_back(std::polar(1.0, kTwoPi * j / cfg.theta_points));
  else
    thetas = {Scalar{1.0, 0.0}, Scalar{-1.0, 0.0}};

  auto quotient = [&](Scalar theta, double alpha) {
    const auto sum = q + p.scaled(alpha * theta);
    return (poly_norm(sum, cfg.optim).value - nq) / alpha;
  };
  const double a0 = cfg.alpha_start;
  const auto first = parallel_map(
      thetas.size(), [&](std::size_t j) { return quotient(thetas[j], a0); });

  // Over C only the most promising phases get the full ladder.
  std::vector<std::size_t> chosen(thetas.size());
  std::iota(chosen.begin(), chosen.end(), std::size_t{0});
  if (cplx) {
    std::stable_sort(chosen.begin(), chosen.end(),
                     [&](auto a, auto b) { return first[a] > first[b]; });
    chosen.resize(std::min<std::size_t>(4, chosen.size()));
  }

  struct Run {
    double value = 0.0;
    bool converged = false;
    std::vector<LadderPoint> trace;
  };
  const auto runs = parallel_map(chosen.size(), [&](std::size_t r) {
    const Scalar theta = thetas[chosen[r]];
    Run run;
    double prev_d = first[chosen[r]];
    double prev_r = prev_d;
    double alpha = a0;
    run.trace.push_back({alpha, prev_d});
    run.value = prev_d;
    for (int level = 1; level <= cfg.alpha_levels; ++level) {
      alpha *= 0.5;
      const double d = quotient(theta, alpha);
      const double rich = 2.0 * d - prev_d;
      run.trace.push_back({alpha, rich});
      run.value = rich;
      if (level >= 2 && std::abs(rich - prev_r) <= cfg.alpha_stop) {
        run.converged = true;
        break;
      }
      prev_d = d;
      prev_r = rich;
    }
    return run;
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r)
    if (runs[r].value > runs[best].value)
      best = r;
  RadiusEstimate est;
  est.method = RadiusMethod::limit_formula;
  est.q_norm = nq;
  est.value = std::max(0.0, runs[best].value);
  est.ladder = runs[best].trace;
  est.converged = runs[best].converged;
  if (cplx)
    est.theta_error =
        est.value * (1.0 - std::cos(std::numbers::pi / cfg.theta_points));
  return est;
}

std::vector<Scalar> convex_hull(std::vector<Scalar> pts, bool real_line) {
  if (pts.empty())
    return {};
  if (real_line) {
    const auto [lo, hi] = std::minmax_element(
        pts.begin(), pts.end(),
        [](Scalar a, Scalar b) { return a.real() < b.real(); });
    if (lo->real() == hi->real())
      return {Scalar{lo->real(), 0.0}};
    return {Scalar{lo->real(), 0.0}, Scalar{hi->real(), 0.0}};
  }
  std::sort(pts.begin(), pts.end(), [](Scalar a, Scalar b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3)
    return pts;
  auto cross = [](Scalar o, Scalar a, Scalar b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
  };
  std::vector<Scalar> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto &p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0)
      --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0)
      --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

RangeCloud range_cloud(const HomPoly &p, const HomPoly &q, double delta,
                       int count, std::uint64_t seed, const RangeConfig &cfg) {
  check_pair(p, q);
  if (count < 1)
    throw InputError("count must be >= 1");
  RangeConfig local = cfg;
  local.optim.seed = seed;
  local.validate();
  const auto s = search_slice(p, q, delta, local, {});
  const Space &cod = q.codomain();
  const bool real = q.field() == Field::real;

  std::vector<Vector> xs;
  for (std::size_t i = 0; i < s.sweep.points.size(); ++i)
    if (s.sweep.values[i] > -kInf)
      xs.push_back(s.sweep.points[i]);
  for (std::size_t r = 0; r < s.sweep.refined.size(); ++r)
    if (s.sweep.refined_values[r] > -kInf)
      xs.push_back(s.sweep.refined[r]);
  std::vector<Scalar> dirs;
  if (real)
    dirs = {Scalar{1.0, 0.0}, Scalar{-1.0, 0.0}};
  else
    for (int j = 0; j < 8; ++j)
      dirs.push_back(std::polar(1.0, kTwoPi * j / 8));

  const double c = 1.0 - delta;
  const auto per_x = parallel_map(xs.size(), [&](std::size_t i) {
    const auto im = images(p, q, xs[i]);
    const double nu = norm(cod, im.u), nw = norm(cod, im.w);
    std::vector<Scalar> vals;
    for (const auto &theta : dirs) {
      SliceSup dual;
      dual.theta = theta;
      if (cod.dim() > 1)
        dual.value = dual_min(cod, im.u, im.w, theta, c, nu, nw, &dual.mu);
      auto b = slice_functional(cod, im.u, im.w, delta, dual, local.face_tol);
      if (cod.dim() == 1)
        b.coeffs[0] = disk_halfplane(theta * im.w[0], im.u[0], c, real);
      vals.push_back(pair(b, im.w));
    }
    return vals;
  });
  std::vector<Scalar> all;
  for (const auto &v : per_x)
    all.insert(all.end(), v.begin(), v.end());
  if (s.witness)
    all.push_back(s.witness->value);

  RangeCloud cloud;
  cloud.delta = delta;
  const auto full_hull = convex_hull(all, real);
  if (static_cast<int>(all.size()) <= count) {
    cloud.points = all;
  } else {
    for (const auto &h : full_hull)
      if (static_cast<int>(cloud.points.size()) < count)
        cloud.points.push_back(h);
    const std::size_t room = count - cloud.points.size();
    for (std::size_t j = 0; j < room; ++j)
      cloud.points.push_back(all[j * all.size() / room]);
  }
  cloud.hull = convex_hull(cloud.points, real);
  cloud.radius = s.value;
  for (const auto &z : cloud.points)
    cloud.radius = std::max(cloud.radius, std::abs(z));
  return cloud;
}

} // namespace polyrad
