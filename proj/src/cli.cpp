#include "logderiv/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "logderiv/bounds.hpp"
#include "logderiv/certificate.hpp"
#include "logderiv/errors.hpp"
#include "logderiv/explorer.hpp"
#include "logderiv/extremal.hpp"
#include "logderiv/json_io.hpp"
#include "logderiv/levelset.hpp"
#include "logderiv/polynorm.hpp"
#include "logderiv/quadrature.hpp"

namespace logderiv::cli {

namespace {

struct RunConfig {
  std::string poles_path;
  std::string out_path;
  std::string format = "json";
  std::string objective = "area";
  double delta = 0.25;
  double p = 1.0;
  double tol = 1e-8;
  std::size_t m = 3;
  std::size_t n = 4;
  std::size_t seeds = 8;
  std::size_t budget = 400;
  std::size_t samples = 1000;
  std::size_t count = 200;
  std::uint64_t seed = 0;
  bool timing = false;
};

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Stream for the report: the --out file, or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.emplace(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw IoFailure("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? static_cast<std::ostream&>(*file_) : fallback_; }

 private:
  std::ostream& fallback_;
  std::optional<std::ofstream> file_;
};

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void write_json(const RunConfig& cfg, std::ostream& fallback, const Json& doc) {
  Sink sink(cfg.out_path, fallback);
  sink.stream() << doc.dump(2) << "\n";
}

void csv_quadrature_row(std::ostream& os, const std::string& hash, std::size_t n, double p, bool weighted,
                        const QuadratureResult& r) {
  os << hash << "," << n << "," << fmt(p) << "," << (weighted ? 1 : 0) << "," << fmt(r.value) << ","
     << (r.divergent ? std::string("nan") : fmt(r.error_estimate)) << "," << (r.divergent ? 1 : 0) << ","
     << r.panels << "\n";
}

PoleSet load_poles(const RunConfig& cfg) {
  if (cfg.poles_path.empty()) throw IoFailure("--poles FILE is required");
  return pole_set_from_json(parse_json(read_file(cfg.poles_path)));
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PoleSet poles = load_poles(cfg);
  const std::size_t n = poles.size();
  const Theorem1Report t1 = theorem1_check(poles, cfg.p, cfg.tol);

  const IntervalUnion level = level_set(poles, LevelQuery(cfg.delta, n));
  const IntervalUnion window = delta_window(n, cfg.delta);
  const double concentrated = intersect(level, window).measure();
  const double k_bound = theorem2_constant(cfg.delta) / static_cast<double>(n);
  const bool t2_ok = concentrated >= k_bound;
  const bool pass = t1.all_true() && t2_ok;

  if (cfg.format == "csv") {
    Sink sink(cfg.out_path, out);
    sink.stream() << "poles_hash,n,p,weighted,value,error,divergent,panels\n";
    csv_quadrature_row(sink.stream(), poles_hash(poles), n, cfg.p, false, t1.unweighted);
    csv_quadrature_row(sink.stream(), poles_hash(poles), n, cfg.p, true, t1.weighted);
  } else {
    Json doc{{"poles_hash", poles_hash(poles)},
             {"n", n},
             {"theorem1", to_json(t1)},
             {"theorem2",
              {{"delta", cfg.delta},
               {"level_set", to_json(level)},
               {"window", to_json(window)},
               {"concentrated_measure", concentrated},
               {"bound", k_bound},
               {"holds", t2_ok}}},
             {"divergence_flagged", t1.unweighted.divergent || t1.weighted.divergent},
             {"all_pass", pass}};
    write_json(cfg, out, doc);
  }
  if (t1.unweighted.divergent || t1.weighted.divergent) err << "note: divergent integral counted as satisfying the bound\n";
  if (!pass) err << "*** BOUND VIOLATION: a proven inequality failed numerically ***\n";
  return pass ? kPass : kViolation;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PoleSet poles = load_poles(cfg);
  const Certificate cert = theorem2_witness(poles, cfg.delta, cfg.m);
  const CertificateCheck check = verify_certificate(poles, cert, cfg.samples);
  Json doc = to_json(cert);
  doc["verification"] = {{"passed", check.passed}, {"degenerate", check.degenerate}, {"diagnostic", check.diagnostic}};
  write_json(cfg, out, doc);
  if (!check.passed) err << "*** CERTIFICATE FAILED: " << check.diagnostic << " ***\n";
  return check.passed ? kPass : kViolation;
}

int cmd_measure(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const PoleSet poles = load_poles(cfg);
  const std::size_t n = poles.size();
  const IntervalUnion level = level_set(poles, LevelQuery(cfg.delta, n));
  if (cfg.format == "csv") {
    Sink sink(cfg.out_path, out);
    sink.stream() << "a,b\n";
    for (const Interval& i : level.intervals()) sink.stream() << fmt(i.lo) << "," << fmt(i.hi) << "\n";
    return kPass;
  }
  Json doc{{"delta", cfg.delta}, {"n", n}, {"level_set", to_json(level)}};
  if (cfg.delta < 0.5) {
    const IntervalUnion window = delta_window(n, cfg.delta);
    doc["window"] = to_json(window);
    doc["concentrated_measure"] = intersect(level, window).measure();
    doc["bound"] = theorem2_constant(cfg.delta) / static_cast<double>(n);
  }
  write_json(cfg, out, doc);
  return kPass;
}

int cmd_sharpness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rows = sharpness_table(cfg.n, cfg.p, cfg.seed);
  bool pass = true;
  for (const SharpnessRow& r : rows)
    pass = pass && r.lower < r.gtilde && r.gtilde <= r.upper * (1.0 + 1e-9) && r.random_min >= r.lower;
  Sink sink(cfg.out_path, out);
  if (cfg.format == "csv") {
    sink.stream() << "n,lower,gtilde,upper,random_min\n";
    for (const SharpnessRow& r : rows)
      sink.stream() << r.n << "," << fmt(r.lower) << "," << fmt(r.gtilde) << "," << fmt(r.upper) << ","
                    << fmt(r.random_min) << "\n";
  } else {
    Json table = Json::array();
    for (const SharpnessRow& r : rows)
      table.push_back(
          {{"n", r.n}, {"lower", r.lower}, {"gtilde", r.gtilde}, {"upper", r.upper}, {"random_min", r.random_min}});
    sink.stream() << Json{{"p", cfg.p}, {"rows", table}, {"bracketed", pass}}.dump(2) << "\n";
  }
  if (!pass) err << "*** BOUND VIOLATION in the sharpness table ***\n";
  return pass ? kPass : kViolation;
}

std::vector<DiskPolynomial> load_or_sample_polynomials(const RunConfig& cfg) {
  std::vector<DiskPolynomial> polys;
  if (!cfg.poles_path.empty()) {
    const Json doc = parse_json(read_file(cfg.poles_path));
    if (doc.is_object() && doc.contains("zeros")) {
      polys.push_back(disk_polynomial_from_json(doc));
    } else {
      const PoleSet poles = pole_set_from_json(doc);
      std::vector<Complex> zeros;
      for (std::size_t k = 0; k < poles.size(); ++k) zeros.push_back(poles.point(k));
      polys.emplace_back(std::move(zeros));
    }
    return polys;
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    std::vector<Complex> zeros(cfg.n);
    for (Complex& z : zeros) z = std::polar(std::sqrt(unit(rng)), kTwoPi * unit(rng));
    polys.emplace_back(std::move(zeros));
  }
  return polys;
}

int cmd_norms(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto polys = load_or_sample_polynomials(cfg);
  bool pass = true;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "index,n,norm,derivative_norm,cor1,cor2_factor,cor2,ratio_plus,ratio_minus,g_neg,g_pos\n";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const DiskPolynomial& p = polys[i];
    const Cor2Report c2 = verify_cor2(p);
    const bool cor1 = verify_cor1(p).holds;
    const double half_n = static_cast<double>(p.degree()) / 2.0;
    double ratios[2] = {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
    bool endpoint_ok = true;
    for (int s = 0; s < 2; ++s) {
      try {
        ratios[s] = endpoint_ratio(p, s == 0 ? 1.0 : -1.0);
        endpoint_ok = endpoint_ok && ratios[s] >= half_n - 1e-9;
      } catch (const ZeroAtEndpoint&) {
      }
    }
    const GDeltaReport g = g_delta_positivity(p, std::min(cfg.delta, 0.49));
    const bool ok = cor1 && c2.norms.holds && endpoint_ok && g.both_positive();
    pass = pass && ok;
    rows.push_back({{"index", i},
                    {"n", p.degree()},
                    {"norm", c2.norms.norm},
                    {"derivative_norm", c2.norms.derivative_norm},
                    {"cor1", cor1},
                    {"cor2_factor", c2.norms.factor},
                    {"cor2", c2.norms.holds},
                    {"endpoint_ratio_plus", std::isnan(ratios[0]) ? Json(nullptr) : Json(ratios[0])},
                    {"endpoint_ratio_minus", std::isnan(ratios[1]) ? Json(nullptr) : Json(ratios[1])},
                    {"g_delta_negative", g.measure_negative},
                    {"g_delta_positive", g.measure_positive}});
    csv << i << "," << p.degree() << "," << fmt(c2.norms.norm) << "," << fmt(c2.norms.derivative_norm) << ","
        << cor1 << "," << fmt(c2.norms.factor) << "," << c2.norms.holds << "," << fmt(ratios[0]) << ","
        << fmt(ratios[1]) << "," << fmt(g.measure_negative) << "," << fmt(g.measure_positive) << "\n";
  }
  Sink sink(cfg.out_path, out);
  if (cfg.format == "csv") sink.stream() << csv.str();
  else sink.stream() << Json{{"delta", std::min(cfg.delta, 0.49)}, {"rows", rows}, {"all_pass", pass}}.dump(2) << "\n";
  if (!pass) err << "*** BOUND VIOLATION in the norm corpus ***\n";
  return pass ? kPass : kViolation;
}

int cmd_explore(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Objective obj;
  if (cfg.objective == "area") obj.kind = ObjectiveKind::AreaIntegral;
  else if (cfg.objective == "lp") obj.kind = ObjectiveKind::LpMeanUnweighted;
  else if (cfg.objective == "lpw") obj.kind = ObjectiveKind::LpMeanWeighted;
  else throw std::invalid_argument("unknown objective " + cfg.objective);
  obj.p = cfg.p;
  obj.tolerance = std::max(cfg.tol, 1e-6);
  OptimizeOptions opts;
  opts.seeds = cfg.seeds;
  opts.budget = cfg.budget;
  opts.seed = cfg.seed;

  StudyRecord rec;
  bool exhausted = false;
  try {
    rec = optimize(cfg.n, obj, opts);
  } catch (const BudgetExhausted& e) {
    rec = e.record();
    exhausted = true;
  }
  const std::string seconds = cfg.timing ? fmt(rec.wall_seconds) : "";
  Sink sink(cfg.out_path, out);
  if (cfg.format == "csv") {
    sink.stream() << "n,objective,best_value,reference_value,gap,seeds,evals,seconds\n"
                  << rec.n << "," << obj.label() << "," << fmt(rec.best_value) << "," << fmt(rec.reference_value)
                  << "," << fmt(rec.gap) << "," << rec.seeds << "," << rec.evaluations << "," << seconds << "\n";
    if (!cfg.out_path.empty()) {
      std::ofstream side(cfg.out_path + ".angles.json", std::ios::binary | std::ios::trunc);
      if (!side) throw IoFailure("cannot write angle sidecar");
      side << Json{{"n", rec.n}, {"angles", rec.best_angles}}.dump(2) << "\n";
    }
  } else {
    Json doc = to_json(rec);
    doc["budget_exhausted"] = exhausted;
    if (cfg.timing) doc["seconds"] = rec.wall_seconds;
    sink.stream() << doc.dump(2) << "\n";
  }
  if (exhausted) err << "note: no seed converged within the budget; best-so-far reported\n";
  if (!std::isfinite(rec.reference_value))
    err << "conjecture evidence: none, the equally spaced objective diverges (pole at +-1)\n";
  else
    err << "conjecture evidence: "
        << (rec.gap >= -1e-4 ? "no configuration below equally spaced found within budget"
                             : "configuration below equally spaced found")
        << "\n";
  if (rec.bound_violations > 0) {
    err << "*** BOUND VIOLATION during exploration ***\n";
    return kViolation;
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic derivatives of unimodular-zero polynomials: bounds, level sets, certificates"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_io = [&cfg](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Output file (default: stdout)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto* verify = app.add_subcommand("verify", "Check the L_p and level-set bounds for a pole set");
  verify->add_option("--poles", cfg.poles_path, "Pole-set JSON file")->required();
  verify->add_option("--p", cfg.p, "Exponent p > 0")->check(CLI::PositiveNumber);
  verify->add_option("--delta", cfg.delta, "Level delta in (0, 1/2)")->check(CLI::Range(1e-12, 0.5 - 1e-12));
  verify->add_option("--tol", cfg.tol, "Quadrature relative tolerance")->check(CLI::Range(1e-14, 1e-2));
  add_io(verify);

  auto* witness = app.add_subcommand("witness", "Build and audit a constructive level-set certificate");
  witness->add_option("--poles", cfg.poles_path, "Pole-set JSON file")->required();
  witness->add_option("--delta", cfg.delta, "Level delta in (0, 1/2)")->check(CLI::Range(1e-12, 0.5 - 1e-12));
  witness->add_option("--m", cfg.m, "Number of threshold levels")->check(CLI::PositiveNumber);
  witness->add_option("--samples", cfg.samples, "Audit samples per witness piece")->check(CLI::Range(100, 10000000));
  add_io(witness);

  auto* measure_cmd = app.add_subcommand("measure", "Exact level set of |Re(x g_n(x))|");
  measure_cmd->add_option("--poles", cfg.poles_path, "Pole-set JSON file")->required();
  measure_cmd->add_option("--delta", cfg.delta, "Level delta > 0")->check(CLI::PositiveNumber);
  add_io(measure_cmd);

  auto* sharp = app.add_subcommand("sharpness", "Order-sharpness table for the extremal family");
  sharp->add_option("--n", cfg.n, "Largest n (<= 16)")->check(CLI::Range(1, 16));
  sharp->add_option("--p", cfg.p, "Exponent p > 0")->check(CLI::PositiveNumber);
  sharp->add_option("--seed", cfg.seed, "Random seed");
  add_io(sharp);

  auto* norms = app.add_subcommand("norms", "Chebyshev-norm inequalities for polynomials with zeros in the disk");
  norms->add_option("--poles", cfg.poles_path, "DiskPolynomial or pole-set JSON (default: random corpus)");
  norms->add_option("--n", cfg.n, "Degree of the random corpus")->check(CLI::Range(1, 64));
  norms->add_option("--count", cfg.count, "Size of the random corpus")->check(CLI::Range(1, 100000));
  norms->add_option("--delta", cfg.delta, "Level for the G_delta check")->check(CLI::Range(1e-12, 0.5 - 1e-12));
  norms->add_option("--seed", cfg.seed, "Random seed");
  add_io(norms);

  auto* explore = app.add_subcommand("explore", "Search for minimizing pole configurations");
  explore->add_option("--n", cfg.n, "Number of poles")->check(CLI::Range(1, 32));
  explore->add_option("--objective", cfg.objective, "area, lp or lpw")->check(CLI::IsMember({"area", "lp", "lpw"}));
  explore->add_option("--p", cfg.p, "Exponent for lp/lpw")->check(CLI::PositiveNumber);
  explore->add_option("--seeds", cfg.seeds, "Number of multistart seeds")->check(CLI::Range(1, 256));
  explore->add_option("--budget", cfg.budget, "Evaluations per seed")->check(CLI::Range(100, 100000000));
  explore->add_option("--seed", cfg.seed, "Random seed");
  explore->add_option("--tol", cfg.tol, "Search quadrature tolerance (at least 1e-6)")->check(CLI::Range(1e-14, 1e-2));
  explore->add_flag("--timing", cfg.timing, "Report wall-clock seconds");
  add_io(explore);

  try {
    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kIoError;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(cfg, out, err);
    if (app.got_subcommand(witness)) return cmd_witness(cfg, out, err);
    if (app.got_subcommand(measure_cmd)) return cmd_measure(cfg, out, err);
    if (app.got_subcommand(sharp)) return cmd_sharpness(cfg, out, err);
    if (app.got_subcommand(norms)) return cmd_norms(cfg, out, err);
    if (app.got_subcommand(explore)) return cmd_explore(cfg, out, err);
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ToleranceNotMet& e) {
    err << "numerics: " << e.what() << "\n";
    return kNumericsError;
  } catch (const RootIsolationFailure& e) {
    err << "numerics: " << e.what() << "\n";
    return kNumericsError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericsError;
  }
  return kIoError;
}

}  // namespace logderiv::cli
