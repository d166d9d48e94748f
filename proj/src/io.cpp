#include "polyrad/io.hpp"

#include <fstream>
#include <sstream>

#include "polyrad/error.hpp"

namespace polyrad {

namespace {

const char *field_name(Field f) { return f == Field::real ? "real" : "complex"; }

Field field_from_json(const Json &j) {
  if (!j.is_string())
    throw InputError("\"field\" must be \"real\" or \"complex\"");
  const auto s = j.get<std::string>();
  if (s == "real")
    return Field::real;
  if (s == "complex")
    return Field::complex;
  throw InputError("unknown field \"" + s + "\"");
}

const Json &require(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

double number(const Json &j, const char *what) {
  if (!j.is_number())
    throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const Json &j, const char *what) {
  if (!j.is_number_integer())
    throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Json exponent_json(double p) {
  if (p == kInf)
    return "inf";
  return p;
}

const char *status_name(Certification c) {
  return c == Certification::grid_certified ? "grid_certified" : "heuristic";
}

Json finite_or_null(double v) {
  if (std::isfinite(v))
    return v;
  return nullptr;
}

} // namespace

Json to_json(const Space &s) {
  return Json{{"field", field_name(s.field())},
              {"p", exponent_json(s.p())},
              {"dim", s.dim()}};
}

Space space_from_json(const Json &j) {
  const Field f = field_from_json(require(j, "field"));
  const auto &pj = require(j, "p");
  double p = 0.0;
  if (pj.is_string()) {
    if (pj.get<std::string>() != "inf")
      throw InputError("\"p\" must be a number or \"inf\"");
    p = kInf;
  } else {
    p = number(pj, "\"p\"");
  }
  return Space(f, p, integer(require(j, "dim"), "\"dim\""));
}

Json scalar_to_json(Field field, Scalar z) {
  if (field == Field::real)
    return z.real();
  return Json::array({z.real(), z.imag()});
}

Json vector_to_json(Field field, std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto &z : v)
    out.push_back(scalar_to_json(field, z));
  return out;
}

Vector vector_from_json(Field field, const Json &j) {
  if (!j.is_array())
    throw InputError("vector must be a JSON array");
  Vector v;
  for (const auto &e : j) {
    if (field == Field::real) {
      v.emplace_back(number(e, "vector entry"), 0.0);
    } else {
      if (!e.is_array() || e.size() != 2)
        throw InputError("complex entries must be [re, im] pairs");
      v.emplace_back(number(e[0], "re"), number(e[1], "im"));
    }
  }
  return v;
}

Json to_json(const HomPoly &p) {
  Json terms = Json::array();
  for (const auto &t : p.terms())
    terms.push_back(Json{{"out", t.out},
                         {"alpha", t.alpha},
                         {"re", t.coeff.real()},
                         {"im", t.coeff.imag()}});
  return Json{{"field", field_name(p.field())},
              {"degree", p.degree()},
              {"domain", to_json(p.domain())},
              {"codomain", to_json(p.codomain())},
              {"terms", std::move(terms)}};
}

HomPoly poly_from_json(const Json &j) {
  const Field f = field_from_json(require(j, "field"));
  const int degree = integer(require(j, "degree"), "\"degree\"");
  const Space dom = space_from_json(require(j, "domain"));
  const Space cod = space_from_json(require(j, "codomain"));
  if (dom.field() != f || cod.field() != f)
    throw InputError("space fields must match the polynomial field");
  const auto &tj = require(j, "terms");
  if (!tj.is_array())
    throw InputError("\"terms\" must be an array");
  std::vector<Term> terms;
  for (const auto &e : tj) {
    Term t;
    t.out = integer(require(e, "out"), "\"out\"");
    const auto &aj = require(e, "alpha");
    if (!aj.is_array())
      throw InputError("\"alpha\" must be an array");
    for (const auto &a : aj)
      t.alpha.push_back(integer(a, "exponent"));
    const double re = number(require(e, "re"), "\"re\"");
    const double im = e.contains("im") ? number(e.at("im"), "\"im\"") : 0.0;
    t.coeff = {re, im};
    terms.push_back(std::move(t));
  }
  return HomPoly(degree, dom, cod, std::move(terms));
}

HomPoly read_poly_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception &e) {
    throw InputError(path + ": " + e.what());
  }
  try {
    return poly_from_json(j);
  } catch (const Json::exception &e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_poly_file(const std::string &path, const HomPoly &p) {
  std::ofstream out(path);
  if (!out)
    throw InputError("cannot write " + path);
  out << to_json(p).dump(2) << '\n';
}

Json to_json(const NormEstimate &e, Field field) {
  Json trace = Json::array();
  for (const auto &t : e.trace)
    trace.push_back({{"restart", t.restart}, {"best", t.best}});
  return Json{{"value", e.value},
              {"maximizer", vector_to_json(field, e.maximizer)},
              {"status", status_name(e.status)},
              {"gap", finite_or_null(e.gap)},
              {"lipschitz", e.lipschitz},
              {"trace", std::move(trace)}};
}

Json to_json(const RadiusEstimate &e, Field field) {
  Json j{{"value", e.value}, {"method", to_string(e.method)}};
  if (e.witness) {
    const auto &w = *e.witness;
    j["witness"] = Json{{"x", vector_to_json(field, w.x)},
                        {"y_star", vector_to_json(field, w.y_star.coeffs)},
                        {"residual", w.residual},
                        {"value", scalar_to_json(field, w.value)}};
  } else {
    j["witness"] = nullptr;
  }
  Json ladder = Json::array();
  const char *step = e.method == RadiusMethod::limit_formula ? "alpha" : "delta";
  for (const auto &l : e.ladder)
    ladder.push_back({{step, l.step}, {"value", l.value}});
  j["ladder"] = std::move(ladder);
  j["q_norm"] = e.q_norm;
  if (e.agreement)
    j["agreement"] = *e.agreement;
  j["consistent"] = e.consistent;
  if (e.method == RadiusMethod::limit_formula) {
    j["converged"] = e.converged;
    j["theta_error"] = e.theta_error;
  }
  return j;
}

Json to_json(const RangeCloud &c, Field field) {
  return Json{{"points", vector_to_json(Field::complex, c.points)},
              {"hull", vector_to_json(Field::complex, c.hull)},
              {"delta", c.delta},
              {"radius", c.radius},
              {"field", field_name(field)}};
}

Json to_json(const IndexEstimate &e) {
  Json per = Json::array();
  for (const auto &s : e.per_sample)
    per.push_back({{"id", s.id}, {"radius", s.radius}, {"norm", s.norm}});
  Json j{{"upper_bound", e.upper_bound},
         {"argmin_id", e.argmin_id},
         {"samples", e.samples},
         {"norm_gap", e.norm_gap},
         {"per_sample", std::move(per)}};
  j["argmin_poly"] = e.argmin_poly ? to_json(*e.argmin_poly) : Json(nullptr);
  return j;
}

Json to_json(const CaseReport &r) {
  Json checks = Json::array();
  for (const auto &c : r.checks)
    checks.push_back({{"quantity", c.expect.quantity},
                      {"computed", finite_or_null(c.computed)},
                      {"expected", c.expect.expected.value()},
                      {"tolerance", c.expect.tolerance},
                      {"relation", to_string(c.expect.relation)},
                      {"basis", to_string(c.expect.basis)},
                      {"pass", c.pass}});
  return Json{{"name", r.name},
              {"pass", r.pass},
              {"seconds", r.seconds},
              {"checks", std::move(checks)}};
}

std::string cloud_csv(const RangeCloud &c) {
  std::ostringstream os;
  os.precision(17);
  os << "re,im\n";
  for (const auto &z : c.points)
    os << z.real() << ',' << z.imag() << '\n';
  return os.str();
}

RangeConfig config_from_json(const Json &j) {
  RangeConfig cfg;
  if (j.is_null())
    return cfg;
  if (!j.is_object())
    throw InputError("config must be a JSON object");
  try {
    if (j.contains("optim")) {
      const auto &o = j.at("optim");
      auto &c = cfg.optim;
      c.restarts = o.value("restarts", c.restarts);
      c.max_iters = o.value("max_iters", c.max_iters);
      c.step_init = o.value("step_init", c.step_init);
      c.tol = o.value("tol", c.tol);
      c.seed = o.value("seed", c.seed);
      c.grid_resolution = o.value("grid_resolution", c.grid_resolution);
      c.grid_resolution_multi =
          o.value("grid_resolution_multi", c.grid_resolution_multi);
    }
    if (j.contains("delta_ladder"))
      cfg.delta_ladder = j.at("delta_ladder").get<std::vector<double>>();
    cfg.theta_points = j.value("theta_points", cfg.theta_points);
    cfg.cross_tol = j.value("cross_tol", cfg.cross_tol);
    cfg.attain_eta = j.value("attain_eta", cfg.attain_eta);
    cfg.face_tol = j.value("face_tol", cfg.face_tol);
  } catch (const Json::exception &e) {
    throw InputError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

} // namespace polyrad
