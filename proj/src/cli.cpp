#include "tautsys/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "tautsys/json_io.hpp"
#include "tautsys/parallel.hpp"
#include "tautsys/periods.hpp"
#include "tautsys/systems.hpp"
#include "tautsys/topology.hpp"
#include "tautsys/verify.hpp"
#include "tautsys/volform.hpp"

namespace tautsys {

namespace {

// Thrown for inputs that parse but are semantically invalid.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string variety;
  std::vector<int> ci;
  long order = 4;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::optional<unsigned> threads;
  std::string method = "auto";
  std::string reading = "summation-index";
  long box_cap = 2;
  std::string system_path;
  std::string series_path;
};

VarietyDesc variety_of(const RunConfig& cfg) {
  if (cfg.variety.empty()) throw UsageError("--variety is required");
  return parse_variety(cfg.variety);
}

std::vector<std::vector<int>> multidegrees_of(const VarietyDesc& x, const RunConfig& cfg) {
  if (cfg.ci.empty()) return {anticanonical_degrees(x)};
  if (x.steps.size() != 1) throw UsageError("--ci needs a Grassmannian or projective space");
  std::vector<std::vector<int>> mds;
  for (int k : cfg.ci) mds.push_back({k});
  return mds;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return Json::parse(in);
}

void emit(const Json& j, const RunConfig& cfg, std::ostream& out) {
  const std::string text = canonical_dump(j);
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.out);
  file << text;
}

Json int_json(const Int& v) { return v.get_str(); }

Json int_list_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

TautSystem build_system(const VarietyDesc& x, const RunConfig& cfg) {
  if (x.is_toric()) return build_gkz(x.toric_a, std::nullopt, cfg.box_cap);
  const auto mds = multidegrees_of(x, cfg);
  return build_ci_system(x, mds, std::vector<Rat>(mds.size(), Rat(1)), cfg.seed);
}

SparseSeries period_series(const VarietyDesc& x, const RunConfig& cfg, unsigned threads) {
  std::string method = cfg.method;
  if (method == "auto") method = x.is_toric() ? "lattice" : "chart";
  if (method == "lattice") {
    if (x.is_toric()) return toric_period_series(x.toric_a, cfg.order);
    if (x.kind == VarietyKind::Grassmannian && x.steps[0] == 1 && cfg.ci.empty())
      return toric_period_series(projective_toric_matrix(x.n), cfg.order);
    throw UsageError("the lattice method needs a toric variety or projective space");
  }
  if (method == "chart") {
    if (x.is_toric() && !cfg.ci.empty()) throw UsageError("--ci is not supported for toric varieties");
    return ci_period_series(x, multidegrees_of(x, cfg), cfg.order, threads);
  }
  if (method == "closed-form-g24") {
    if (x.label() != "G(2,4)" || !cfg.ci.empty()) throw UsageError("closed-form-g24 needs --variety g:2,4");
    const auto reading = parse_reading(cfg.reading);
    if (!reading) throw UsageError("unknown reading " + cfg.reading);
    return closed_form_g24_series(cfg.order, *reading);
  }
  throw UsageError("unknown method " + cfg.method);
}

Json verification_json(const TautSystem& sys, const SparseSeries& series, unsigned threads, std::ostream& log,
                       bool& pass) {
  const auto report = annihilation_report(sys, series, threads);
  const auto closure = lie_closure_report(sys);
  log << report_summary(report);
  log << "lie closure: " << (closure.pass() ? "pass" : "FAIL") << " (" << closure.pairs << " pairs)\n";
  pass = report.pass() && closure.pass();
  return {{"annihilation", report_to_json(report)}, {"lie_closure", lie_closure_to_json(closure)}, {"pass", pass}};
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  emit(system_to_json(build_system(variety_of(cfg), cfg)), cfg, out);
  return kExitOk;
}

int cmd_period(const RunConfig& cfg, std::ostream& out) {
  if (cfg.order < 0) throw UsageError("--order must be nonnegative");
  emit(series_to_json(period_series(variety_of(cfg), cfg, resolve_threads(cfg.threads))), cfg, out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.system_path.empty() || cfg.series_path.empty()) throw UsageError("--system and --series are required");
  const TautSystem sys = system_from_json(read_json(cfg.system_path));
  const SparseSeries series = series_from_json(read_json(cfg.series_path));
  if (sys.nvars != series.nvars())
    throw UsageError("system has " + std::to_string(sys.nvars) + " variables, series has " +
                     std::to_string(series.nvars()));
  bool pass = false;
  emit(verification_json(sys, series, resolve_threads(cfg.threads), err, pass), cfg, out);
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_volform(const RunConfig& cfg, std::ostream& out) {
  const VarietyDesc x = variety_of(cfg);
  if (x.kind != VarietyKind::Grassmannian) throw UsageError("volform check needs a Grassmannian");
  const auto check = check_volume_form(x.steps[0], x.n);
  emit(volform_to_json(check), cfg, out);
  return check.pass() ? kExitOk : kExitCheckFailed;
}

std::vector<int> topology_degrees(const VarietyDesc& x, const RunConfig& cfg) {
  if (x.kind != VarietyKind::Grassmannian) throw UsageError("euler and chiy need a Grassmannian or projective space");
  return cfg.ci.empty() ? std::vector<int>{x.n} : cfg.ci;
}

int cmd_euler(const RunConfig& cfg, std::ostream& out) {
  const VarietyDesc x = variety_of(cfg);
  const auto degrees = topology_degrees(x, cfg);
  Json j = {{"variety", x.label()}, {"degrees", degrees}, {"euler", int_json(euler_char_cy(x, degrees))}};
  if (x.steps[0] == 1) j["oracle"] = int_json(euler_char_pn_oracle(x.n - 1, degrees));
  emit(j, cfg, out);
  return kExitOk;
}

int cmd_chiy(const RunConfig& cfg, std::ostream& out) {
  const VarietyDesc x = variety_of(cfg);
  const auto degrees = topology_degrees(x, cfg);
  const auto chi_y = chi_y_genus_cy(x, degrees);
  const Int at_minus_one = evaluate_polynomial(chi_y, -1);
  const Int euler = euler_char_cy(x, degrees);
  Json j = {{"variety", x.label()},
            {"degrees", degrees},
            {"chi_y", int_list_json(chi_y)},
            {"chi_y_at_minus_one", int_json(at_minus_one)},
            {"euler", int_json(euler)},
            {"palindromic", chi_y_palindromic(chi_y)}};
  if (x.steps[0] == 1) j["oracle"] = int_list_json(chi_y_pn_oracle(x.n - 1, degrees));
  emit(j, cfg, out);
  return at_minus_one == euler && chi_y_palindromic(chi_y) ? kExitOk : kExitCheckFailed;
}

int cmd_poincare(const RunConfig& cfg, std::ostream& out) {
  const VarietyDesc x = variety_of(cfg);
  if (x.is_toric()) throw UsageError("poincare needs a flag variety");
  const auto p = poincare_polynomial(x.steps, x.n);
  Int total = 0;
  for (const auto& c : p) total += c;
  const Int cosets = coset_count(x.steps, x.n);
  emit({{"variety", x.label()}, {"coefficients", int_list_json(p)}, {"at_one", int_json(total)},
        {"coset_count", int_json(cosets)}},
       cfg, out);
  return total == cosets ? kExitOk : kExitCheckFailed;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const unsigned threads = resolve_threads(cfg.threads);
  Json checks = Json::object();
  bool all = true;
  auto record = [&](const std::string& name, bool pass) {
    err << (pass ? "PASS " : "FAIL ") << name << "\n";
    checks[name] = pass;
    all = all && pass;
  };

  const TautSystem p2 = build_extended_gkz(3, 3);
  const SparseSeries p2_series = toric_period_series(projective_toric_matrix(3), 6);
  bool pass = false;
  verification_json(p2, p2_series, threads, err, pass);
  record("p2-extended-gkz-annihilation", pass);
  record("p2-method-agreement", chart_period_series(VarietyDesc::projective_space(2), 6, threads) == p2_series);

  const VarietyDesc g24 = VarietyDesc::grassmannian(2, 4);
  const TautSystem g24_sys = build_flag_system(g24, anticanonical_degrees(g24), 1, cfg.seed);
  verification_json(g24_sys, chart_period_series(g24, 3, threads), threads, err, pass);
  record("g24-annihilation", pass);

  std::size_t matching = 0;
  for (const auto& c : check_g24_readings(3, threads)) matching += c.matches ? 1 : 0;
  record("g24-closed-form-unique-reading", matching == 1);

  record("volform-g24", check_volume_form(2, 4).pass());
  record("quintic-euler", euler_char_cy(VarietyDesc::projective_space(4)) == -200);

  emit({{"checks", checks}, {"pass", all}}, cfg, out);
  return all ? kExitOk : kExitCheckFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--out", cfg.out, "Output path (default stdout)");
  sub->add_option("--threads", cfg.threads, "Worker threads (default TAUTSYS_THREADS or 1)");
  sub->add_option("--seed", cfg.seed, "Seed for sampled evaluation points");
}

void add_variety(CLI::App* sub, RunConfig& cfg, bool ci) {
  sub->add_option("--variety", cfg.variety, "p:<k> | g:<d>,<n> | f:<d1>,<d2>,..;<n> | toric:@<file>")->required();
  if (ci) sub->add_option("--ci", cfg.ci, "Complete intersection degrees d1,d2,...")->delimiter(',');
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tautological systems, period series and their verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* build = app.add_subcommand("build", "Build a differential system as JSON");
  add_variety(build, cfg, true);
  build->add_option("--box-cap", cfg.box_cap, "Largest box-operator degree for toric systems");
  add_common(build, cfg);

  auto* period = app.add_subcommand("period", "Compute a truncated period series as JSON");
  add_variety(period, cfg, true);
  period->add_option("--order", cfg.order, "Truncation order T");
  period->add_option("--method", cfg.method, "auto | lattice | chart | closed-form-g24");
  period->add_option("--reading", cfg.reading, "Closed-form reading of n (closed-form-g24 only)");
  add_common(period, cfg);

  auto* verify = app.add_subcommand("verify", "Check that a system annihilates a series");
  verify->add_option("--system", cfg.system_path, "System JSON")->required();
  verify->add_option("--series", cfg.series_path, "Series JSON")->required();
  add_common(verify, cfg);

  auto* volform = app.add_subcommand("volform", "Volume form checks");
  volform->require_subcommand(1);
  auto* volcheck = volform->add_subcommand("check", "Compare the contracted and closed-form volume forms");
  add_variety(volcheck, cfg, false);
  add_common(volcheck, cfg);

  auto* topology = app.add_subcommand("topology", "Topological invariants");
  topology->require_subcommand(1);
  auto* euler = topology->add_subcommand("euler", "Euler characteristic of a Calabi-Yau complete intersection");
  auto* chiy = topology->add_subcommand("chiy", "chi_y genus of a Calabi-Yau complete intersection");
  auto* poincare = topology->add_subcommand("poincare", "Poincare polynomial of a flag variety");
  for (auto* sub : {euler, chiy}) {
    add_variety(sub, cfg, true);
    add_common(sub, cfg);
  }
  add_variety(poincare, cfg, false);
  add_common(poincare, cfg);

  auto* selftest = app.add_subcommand("selftest", "Run the P^2 and G(2,4) pipelines end to end");
  add_common(selftest, cfg);

  std::vector<const char*> argv{"tautsys"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return cmd_build(cfg, out);
    if (*period) return cmd_period(cfg, out);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*volcheck) return cmd_volform(cfg, out);
    if (*euler) return cmd_euler(cfg, out);
    if (*chiy) return cmd_chiy(cfg, out);
    if (*poincare) return cmd_poincare(cfg, out);
    if (*selftest) return cmd_selftest(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace tautsys
