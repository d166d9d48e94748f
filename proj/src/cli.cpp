#include "polyrad/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyrad/error.hpp"
#include "polyrad/io.hpp"

namespace polyrad {

namespace {

struct Options {
  std::string config_path;
  std::string output_path;

  std::string poly_path;
  std::string p_path;
  std::string q_path;
  std::string method = "attain";
  double delta = 1e-6;
  int count = 200;
  std::uint64_t seed = 1;
  std::string format = "json";
  int samples = 20;
  std::string case_name;
  bool all_cases = false;
  bool timings = false;
};

RangeConfig load_config(const Options &o) {
  if (o.config_path.empty())
    return RangeConfig{};
  std::ifstream in(o.config_path);
  if (!in)
    throw InputError("cannot open " + o.config_path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception &e) {
    throw InputError(o.config_path + ": " + e.what());
  }
  return config_from_json(j);
}

void emit(const Options &o, const std::string &text, std::ostream &out) {
  if (o.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output_path);
  if (!f)
    throw InputError("cannot write " + o.output_path);
  f << text;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

int cmd_norm(const Options &o, std::ostream &out) {
  const auto cfg = load_config(o);
  const auto p = read_poly_file(o.poly_path);
  emit(o, dump(to_json(poly_norm(p, cfg.optim), p.field())), out);
  return kExitOk;
}

int cmd_radius(const Options &o, std::ostream &out) {
  auto cfg = load_config(o);
  const auto p = read_poly_file(o.p_path);
  const auto q = read_poly_file(o.q_path);
  if (!(p.domain() == q.domain()) || !(p.codomain() == q.codomain()) ||
      p.degree() != q.degree())
    throw InputError("P and Q must share degree, domain and codomain");
  require_norm_one(q, cfg.optim);
  const Field f = q.field();
  Json j;
  if (o.method == "attain") {
    cfg.run_ladder = false;
    j = to_json(numerical_radius(p, q, cfg), f);
  } else if (o.method == "ladder") {
    auto est = numerical_radius(p, q, cfg);
    est.method = RadiusMethod::delta_ladder;
    est.value = est.ladder.empty() ? est.value : est.ladder.back().value;
    j = to_json(est, f);
  } else if (o.method == "limit") {
    j = to_json(radius_via_limit(p, q, cfg), f);
  } else {
    const auto att = numerical_radius(p, q, cfg);
    const auto lim = radius_via_limit(p, q, cfg);
    const double ladder_gap = att.agreement.value_or(0.0);
    j = Json{{"value", att.value},
             {"attainment", to_json(att, f)},
             {"limit_formula", to_json(lim, f)},
             {"agreement",
              std::max(std::abs(att.value - lim.value), ladder_gap)}};
  }
  emit(o, dump(j), out);
  return kExitOk;
}

int cmd_range(const Options &o, std::ostream &out) {
  const auto cfg = load_config(o);
  const auto p = read_poly_file(o.p_path);
  const auto q = read_poly_file(o.q_path);
  const auto cloud = range_cloud(p, q, o.delta, o.count, o.seed, cfg);
  if (o.format == "csv")
    emit(o, cloud_csv(cloud), out);
  else
    emit(o, dump(to_json(cloud, q.field())), out);
  return kExitOk;
}

int cmd_index(const Options &o, std::ostream &out) {
  const auto cfg = load_config(o);
  const auto q = read_poly_file(o.q_path);
  require_norm_one(q, cfg.optim);
  emit(o, dump(to_json(index_upper_bound(q, o.samples, o.seed, cfg))), out);
  return kExitOk;
}

int cmd_case(const Options &o, std::ostream &out) {
  if (o.all_cases == !o.case_name.empty())
    throw InputError("give either a case name or --all");
  std::vector<CaseReport> reports;
  if (o.all_cases)
    for (const auto &c : case_catalog())
      reports.push_back(run_case(c.name));
  else
    reports.push_back(run_case(o.case_name));
  bool pass = true;
  Json arr = Json::array();
  for (const auto &r : reports) {
    pass = pass && r.pass;
    auto j = to_json(r);
    if (!o.timings)
      j.erase("seconds");
    arr.push_back(std::move(j));
  }
  emit(o, dump(o.all_cases ? arr : arr.front()), out);
  return pass ? kExitOk : kExitCaseFailed;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Norms, numerical radii and index bounds of homogeneous "
               "polynomials between l_p spaces",
               "polyrad"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config_path, "JSON config file")
      ->check(CLI::ExistingFile);
  app.add_option("--output", o.output_path, "write the report to this file");

  auto *norm = app.add_subcommand("norm", "estimate ||P||");
  norm->add_option("poly", o.poly_path, "polynomial JSON file")->required();

  auto *radius = app.add_subcommand("radius", "numerical radius of P w.r.t. Q");
  radius->add_option("P", o.p_path)->required();
  radius->add_option("Q", o.q_path)->required();
  radius->add_option("--method", o.method)
      ->check(CLI::IsMember({"attain", "ladder", "limit", "all"}));

  auto *range = app.add_subcommand("range", "sample the delta-range cloud");
  range->add_option("P", o.p_path)->required();
  range->add_option("Q", o.q_path)->required();
  range->add_option("--delta", o.delta)->check(CLI::PositiveNumber);
  range->add_option("--count", o.count)->check(CLI::PositiveNumber);
  range->add_option("--seed", o.seed);
  range->add_option("--format", o.format)
      ->check(CLI::IsMember({"csv", "json"}));

  auto *index = app.add_subcommand("index", "upper bound on the index of Q");
  index->add_option("Q", o.q_path)->required();
  index->add_option("--samples", o.samples)->check(CLI::NonNegativeNumber);
  index->add_option("--seed", o.seed);

  auto *cases = app.add_subcommand("case", "run catalogued worked examples");
  cases->add_option("name", o.case_name);
  cases->add_flag("--all", o.all_cases);
  cases->add_flag("--timings", o.timings, "include wall times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*norm)
      return cmd_norm(o, out);
    if (*radius)
      return cmd_radius(o, out);
    if (*range)
      return cmd_range(o, out);
    if (*index)
      return cmd_index(o, out);
    return cmd_case(o, out);
  } catch (const InputError &e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError &e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ComputationError &e) {
    err << "computation error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const Json::exception &e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  }
}

} // namespace polyrad
