#include "polyrad/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "polyrad/error.hpp"
#include "polyrad/parallel.hpp"

namespace polyrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int round_up_even(int m) { return std::max(2, m + (m % 2)); }

std::string describe(std::span<const Scalar> x) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i)
      os << ", ";
    os << x[i];
  }
  os << ')';
  return os.str();
}

// -inf is a legitimate "rejected" value for internal objectives.
double call(const Objective &f, std::span<const Scalar> x) {
  const double v = f(x);
  if (std::isnan(v) || v == kInf)
    throw ComputationError("objective returned a non-finite value at x = " +
                           describe(x));
  return v;
}

// e^{2 pi i j / count} with exact values on the axes.
Scalar root_of_unity(int j, int count) {
  if (count % 4 == 0 && j % (count / 4) == 0) {
    switch ((j / (count / 4)) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
    }
  }
  return std::polar(1.0, kTwoPi * j / count);
}

// Points of the cube surface [-1,1]^n with m+1 samples per free axis; edge
// points belong to the lowest face index only.
std::vector<Vector> cube_surface(const Space &space, int m) {
  const int n = space.dim();
  std::vector<Vector> out;
  std::vector<int> idx(n - 1, 0);
  for (int axis = 0; axis < n; ++axis) {
    for (double s : {1.0, -1.0}) {
      std::fill(idx.begin(), idx.end(), 0);
      while (true) {
        Vector v(n);
        v[axis] = s;
        bool owned = true;
        for (int k = 0, o = 0; o < n; ++o) {
          if (o == axis)
            continue;
          const double c = static_cast<double>(2 * idx[k] - m) / m;
          v[o] = c;
          if (o < axis && std::abs(c) == 1.0)
            owned = false;
          ++k;
        }
        if (owned)
          out.push_back(normalized(space, std::move(v)));
        int k = 0;
        while (k < n - 1 && ++idx[k] > m)
          idx[k++] = 0;
        if (k == n - 1)
          break;
      }
    }
  }
  return out;
}

// Gradient ascent with central differences and radial retraction.
LocalResult ascend(const Space &space, const Objective &f, Vector x, double fx,
                   const OptimConfig &cfg) {
  const int n = space.dim();
  const int parts = space.is_complex() ? 2 : 1;
  double step = cfg.step_init;
  for (int it = 0; it < cfg.max_iters; ++it) {
    std::vector<double> grad(static_cast<std::size_t>(n) * parts);
    bool usable = true;
    for (int j = 0; j < n && usable; ++j)
      for (int part = 0; part < parts; ++part) {
        const double base = part == 0 ? x[j].real() : x[j].imag();
        const double h = 1e-6 * std::max(1.0, std::abs(base));
        const Scalar d = part == 0 ? Scalar(h, 0.0) : Scalar(0.0, h);
        Vector up = x, down = x;
        up[j] += d;
        down[j] -= d;
        const double fu = call(f, up), fd = call(f, down);
        if (!std::isfinite(fu) || !std::isfinite(fd)) {
          usable = false;
          break;
        }
        grad[j * parts + part] = (fu - fd) / (2.0 * h);
      }
    if (!usable)
      break;
    double gn = 0.0;
    for (double g : grad)
      gn += g * g;
    gn = std::sqrt(gn);
    if (gn == 0.0)
      break;
    bool accepted = false;
    for (double s = step; s > 1e-12; s *= 0.5) {
      Vector y = x;
      for (int j = 0; j < n; ++j) {
        const double re = grad[j * parts] / gn;
        const double im = parts == 2 ? grad[j * parts + 1] / gn : 0.0;
        y[j] += s * Scalar(re, im);
      }
      const double ny = norm(space, y);
      if (ny == 0.0)
        continue;
      for (auto &z : y)
        z /= ny;
      const double fy = call(f, y);
      if (fy > fx) {
        x = std::move(y);
        fx = fy;
        step = std::min(1.0, 2.0 * s);
        accepted = true;
        break;
      }
    }
    if (!accepted)
      break;
  }
  return {std::move(x), fx};
}

} // namespace

void OptimConfig::validate() const {
  if (restarts < 1)
    throw InputError("optim.restarts must be >= 1");
  if (!(tol > 0.0))
    throw InputError("optim.tol must be positive");
  if (max_iters < 1)
    throw InputError("optim.max_iters must be >= 1");
  if (!(step_init > 0.0))
    throw InputError("optim.step_init must be positive");
  if (grid_resolution < 2 || grid_resolution_multi < 2)
    throw InputError("grid resolutions must be >= 2");
}

double sup_distance(std::span<const Scalar> a, std::span<const Scalar> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool has_grid_chart(const Space &space) {
  return space.is_complex() ? space.dim() <= 2 : space.dim() <= 3;
}

std::vector<Vector> sphere_grid(const Space &space, const OptimConfig &cfg,
                                bool phase_invariant, double *spacing) {
  double h = 0.0;
  std::vector<Vector> out;
  const int n = space.dim();
  if (!space.is_complex()) {
    if (n == 1) {
      out = {Vector{1.0}, Vector{-1.0}};
    } else if (n <= 3) {
      const int m = round_up_even(n == 2 ? cfg.grid_resolution
                                         : cfg.grid_resolution_multi);
      out = cube_surface(space, m);
      h = 2.0 / m;
    }
  } else if (n == 1) {
    if (phase_invariant) {
      out = {Vector{1.0}};
    } else {
      const int count = 4 * cfg.grid_resolution;
      for (int j = 0; j < count; ++j)
        out.push_back(Vector{root_of_unity(j, count)});
      h = kTwoPi / count;
    }
  } else if (n == 2) {
    const int m = round_up_even(cfg.grid_resolution_multi);
    const Space real_plane(Field::real, space.p(), 2);
    std::vector<std::pair<double, double>> moduli;
    for (int j = 0; j <= m; ++j) {
      const double t = static_cast<double>(j) / m;
      moduli.emplace_back(1.0, t);
      if (j < m)
        moduli.emplace_back(t, 1.0);
    }
    const int pm = 4 * ((m + 3) / 4);
    const int phases1 = phase_invariant ? 1 : pm;
    const int phases2 = phase_invariant ? 4 * m : pm;
    for (const auto &[a, b] : moduli) {
      const Vector ab = normalized(real_plane, Vector{a, b});
      for (int j1 = 0; j1 < phases1; ++j1)
        for (int j2 = 0; j2 < phases2; ++j2)
          out.push_back(Vector{ab[0] * root_of_unity(j1, phases1),
                               ab[1] * root_of_unity(j2, phases2)});
    }
    h = std::max(1.0 / m, kTwoPi / phases2);
  }
  if (spacing)
    *spacing = h;
  return out;
}

LocalResult refine_locally(const Space &space, const Objective &f, Vector x,
                           double fx, double step, const OptimConfig &cfg) {
  const int n = space.dim();
  const int parts = space.is_complex() ? 2 : 1;
  const long max_evals = static_cast<long>(cfg.max_iters) * 100;
  long evals = 0;
  double h = step > 0.0 ? step : cfg.step_init;
  Vector y(n);
  auto try_point = [&](Vector &cand) {
    const double ny = norm(space, cand);
    if (ny == 0.0)
      return false;
    for (auto &z : cand)
      z /= ny;
    const double fy = call(f, cand);
    ++evals;
    if (fy > fx) {
      x = cand;
      fx = fy;
      return true;
    }
    return false;
  };
  while (h > cfg.tol && evals < max_evals) {
    bool improved = false;
    // Snap moves reach axis and vertex points, where sphere kinks make
    // compass steps converge only geometrically.
    if (n > 1) {
      double top = 0.0;
      for (const auto &z : x)
        top = std::max(top, std::abs(z));
      for (int j = 0; j < n; ++j) {
        if (x[j] != Scalar{}) {
          y = x;
          y[j] = 0.0;
          improved |= try_point(y);
        }
        const double a = std::abs(x[j]);
        if (a > 0.0 && a < top) {
          y = x;
          y[j] *= top / a;
          improved |= try_point(y);
        }
      }
    }
    for (int j = 0; j < n; ++j)
      for (int part = 0; part < parts; ++part)
        for (double dir : {1.0, -1.0}) {
          y = x;
          y[j] += part == 0 ? Scalar(dir * h, 0.0) : Scalar(0.0, dir * h);
          improved |= try_point(y);
        }
    if (!improved)
      h *= 0.5;
  }
  return {std::move(x), fx};
}

SphereSweep sweep_sphere(const Space &space, const Objective &f,
                         const OptimConfig &cfg, const SearchOptions &opts) {
  cfg.validate();
  SphereSweep s;
  s.points = sphere_grid(space, cfg, opts.phase_invariant, &s.spacing);
  const bool chart = !s.points.empty();
  if (!chart)
    s.points = sample_sphere(space, std::max(256, cfg.restarts * 32), cfg.seed);

  constexpr std::size_t kChunk = 2048;
  const std::size_t total = s.points.size();
  const auto chunks = parallel_map((total + kChunk - 1) / kChunk,
                                   [&](std::size_t c) {
                                     std::vector<double> vals;
                                     const std::size_t end =
                                         std::min(total, (c + 1) * kChunk);
                                     for (std::size_t i = c * kChunk; i < end;
                                          ++i)
                                       vals.push_back(call(f, s.points[i]));
                                     return vals;
                                   });
  s.values.reserve(total);
  for (const auto &c : chunks)
    s.values.insert(s.values.end(), c.begin(), c.end());

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return s.values[a] > s.values[b];
  });
  const double sep = chart ? 4.0 * s.spacing : 0.1;
  std::vector<std::size_t> seeds;
  for (auto i : order) {
    if (static_cast<int>(seeds.size()) >= cfg.restarts)
      break;
    if (s.values[i] == -kInf)
      break;
    bool far = true;
    for (auto j : seeds)
      if (sup_distance(s.points[i], s.points[j]) < sep) {
        far = false;
        break;
      }
    if (far)
      seeds.push_back(i);
  }

  const auto refined = parallel_map(seeds.size(), [&](std::size_t r) {
    const auto i = seeds[r];
    if (chart)
      return refine_locally(space, f, s.points[i], s.values[i], s.spacing,
                            cfg);
    auto up = ascend(space, f, s.points[i], s.values[i], cfg);
    return refine_locally(space, f, std::move(up.point), up.value,
                          cfg.step_init, cfg);
  });

  if (total > 0) {
    s.best_point = s.points[order.front()];
    s.best_value = s.values[order.front()];
  }
  for (std::size_t r = 0; r < refined.size(); ++r) {
    s.refined.push_back(refined[r].point);
    s.refined_values.push_back(refined[r].value);
    if (refined[r].value > s.best_value) {
      s.best_value = refined[r].value;
      s.best_point = refined[r].point;
    }
    s.trace.push_back({static_cast<int>(r), s.best_value});
  }
  if (chart && std::isfinite(opts.lipschitz)) {
    s.status = Certification::grid_certified;
    s.gap = opts.lipschitz * s.spacing;
  }
  return s;
}

SphereMax maximize_on_sphere(const Space &space, const Objective &f,
                             const OptimConfig &cfg,
                             const SearchOptions &opts) {
  const Objective strict = [&f](std::span<const Scalar> x) {
    const double v = f(x);
    if (!std::isfinite(v))
      throw ComputationError("objective returned a non-finite value at x = " +
                             describe(x));
    return v;
  };
  auto s = sweep_sphere(space, strict, cfg, opts);
  return {std::move(s.best_point), s.best_value, s.status, s.gap,
          std::move(s.trace)};
}

double norm_lipschitz(const HomPoly &p) {
  return p.degree() * p.coefficient_l1() *
         std::pow(static_cast<double>(p.domain().dim()), p.degree());
}

NormEstimate poly_norm(const HomPoly &p, const OptimConfig &cfg) {
  NormEstimate est;
  est.lipschitz = norm_lipschitz(p);
  const Space &cod = p.codomain();
  const Objective f = [&p, &cod](std::span<const Scalar> x) {
    Vector y(cod.dim());
    p.evaluate_into(x, y);
    return norm(cod, y);
  };
  auto s = sweep_sphere(p.domain(), f, cfg, {est.lipschitz, true});
  est.value = s.best_value;
  est.maximizer = std::move(s.best_point);
  est.status = s.status;
  est.gap = s.gap;
  est.trace = std::move(s.trace);
  return est;
}

HomPoly normalize_poly(const HomPoly &p, const OptimConfig &cfg, double floor,
                       NormEstimate *estimate) {
  auto est = poly_norm(p, cfg);
  if (!(est.value > floor)) {
    std::ostringstream os;
    os << "cannot normalize: estimated norm " << est.value;
    throw ComputationError(os.str());
  }
  auto out = p.scaled(1.0 / est.value);
  if (estimate)
    *estimate = std::move(est);
  return out;
}

std::vector<Vector> points_above(const SphereSweep &sweep, double threshold,
                                 double dedup) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < sweep.points.size(); ++i)
    if (sweep.values[i] >= threshold)
      out.push_back(sweep.points[i]);
  for (std::size_t r = 0; r < sweep.refined.size(); ++r) {
    if (sweep.refined_values[r] < threshold)
      continue;
    const auto &x = sweep.refined[r];
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Vector &y) {
      return sup_distance(x, y) <= dedup;
    });
    if (!dup)
      out.push_back(x);
  }
  return out;
}

std::vector<Vector> near_maximizer_set(const HomPoly &q, double eta,
                                       const OptimConfig &cfg,
                                       bool modulo_phase) {
  if (!(eta > 0.0))
    throw InputError("eta must be positive");
  const Space &cod = q.codomain();
  const Objective f = [&q, &cod](std::span<const Scalar> x) {
    Vector y(cod.dim());
    q.evaluate_into(x, y);
    return norm(cod, y);
  };
  const auto s =
      sweep_sphere(q.domain(), f, cfg, {norm_lipschitz(q), modulo_phase});
  if (s.best_value < 1.0 - eta) {
    std::ostringstream os;
    os << "no attainment: estimated norm " << s.best_value << " < 1 - " << eta;
    throw ComputationError(os.str());
  }
  return points_above(s, std::min(1.0, s.best_value) - eta, 10.0 * eta);
}

} // namespace polyrad
