#include "qcircle/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcircle/bessel.hpp"
#include "qcircle/errors.hpp"
#include "qcircle/examples.hpp"
#include "qcircle/json_io.hpp"
#include "qcircle/mwp.hpp"
#include "qcircle/observables.hpp"
#include "qcircle/uncertainty.hpp"

namespace qcircle::cli {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Locale-independent shortest-exact decimal with 17 significant digits.
std::string csv_num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<double> sample_points(double from, double to, double step) {
  if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step)) {
    throw UsageError("range and step must be finite");
  }
  if (!(step > 0.0)) throw UsageError("step must be positive");
  if (to < from) throw UsageError("--to must not be below --from");
  const double span = (to - from) / step;
  if (span > 1e7) throw UsageError("range/step yields too many rows");
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i) xs[i] = from + static_cast<double>(i) * step;
  return xs;
}

CircleState load_state(const std::string& path, const Config& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open state file '" + path + "'");
  return read_state(in, cfg);
}

struct Globals {
  Config cfg;
  bool json_only = false;
};

int cmd_examples(const Globals& g, const std::optional<std::string>& selector,
                 std::ostream& out, std::ostream& err) {
  std::vector<ExampleCase> cases;
  try {
    cases = selector ? parse_example_selector(*selector) : default_examples();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json results = json::array();
  bool all = true;
  for (const auto& c : cases) {
    const auto r = run_example(c, g.cfg);
    all = all && r.passed;
    results.push_back(to_json(r));
    if (!g.json_only) {
      for (const auto& q : r.checks) {
        err << (q.passed ? "PASS " : "FAIL ") << std::left << std::setw(20) << c.label() << ' '
            << std::setw(18) << q.name << " computed=" << std::setprecision(12) << q.computed
            << " expected=" << q.expression << " (" << q.expected << ")\n";
      }
    }
  }
  out << json{{"hbar", g.cfg.hbar}, {"tolerance", g.cfg.cmp_tol}, {"passed", all},
              {"cases", results}}.dump(2)
      << '\n';
  return all ? kExitOk : kExitCheckFailed;
}

struct CurveArgs {
  std::string name;
  std::optional<double> from, to, step;
  int n = 1;
  int m = 0;
  std::optional<double> alpha;
};

int cmd_curve(const Globals& g, const CurveArgs& a, std::ostream& out) {
  if (a.name == "mwp_abs") {
    if (a.n < 1) throw UsageError("--n must be >= 1");
    // Default concentration corresponds to a*hbar = 1, i.e. alpha_n = 2/n.
    const double alpha = a.alpha.value_or(2.0 / a.n);
    const auto xs = sample_points(a.from.value_or(0.0), a.to.value_or(kTwoPi),
                                  a.step.value_or(kTwoPi / 360.0));
    const auto state = mwp_x(a.n, a.m, alpha, g.cfg).second;
    out << "phi,abs_psi\n";
    for (double x : xs) out << csv_num(x) << ',' << csv_num(std::abs(state.evaluate(x))) << '\n';
    return kExitOk;
  }
  double (*fn)(double, const bessel::BesselConfig&) = nullptr;
  if (a.name == "ratio") fn = &bessel::ratio;
  else if (a.name == "f") fn = &bessel::f_alpha;
  else if (a.name == "h") fn = &bessel::h_alpha;
  else throw UsageError("unknown curve '" + a.name + "' (ratio, f, h, mwp_abs)");
  const auto xs = sample_points(a.from.value_or(0.0), a.to.value_or(10.0), a.step.value_or(0.1));
  out << "x,value\n";
  for (double x : xs) out << csv_num(x) << ',' << csv_num(fn(x, {})) << '\n';
  return kExitOk;
}

void print_ur_table(const std::vector<URReport>& urs, std::ostream& err) {
  err << std::left << std::setw(10) << "kind" << std::setw(4) << "n" << std::right
      << std::setw(16) << "lhs" << std::setw(16) << "rhs" << std::setw(16) << "slack"
      << "  holds\n";
  for (const auto& r : urs) {
    err << std::left << std::setw(10) << to_string(r.kind) << std::setw(4) << r.n << std::right
        << std::setprecision(8) << std::setw(16) << r.lhs << std::setw(16) << r.rhs
        << std::setw(16) << r.slack << "  " << (r.holds ? "yes" : "NO") << '\n';
  }
}

int cmd_report(const Globals& g, const std::string& file, int nmax, double r_threshold,
               std::ostream& out, std::ostream& err) {
  if (nmax < 1) throw UsageError("--nmax must be >= 1");
  if (!(r_threshold > 0.0 && r_threshold < 1.0)) throw UsageError("--r-threshold must lie in (0, 1)");
  const auto state = load_state(file, g.cfg);

  json observables = json::array();
  std::vector<URReport> urs;
  for (int n = 1; n <= nmax; ++n) {
    observables.push_back(to_json(observe(state, n, g.cfg)));
    urs.push_back(check_ur_x(state, n, g.cfg));
    urs.push_back(check_ur_y(state, n, g.cfg));
    urs.push_back(check_total_ur(state, n, g.cfg));
  }
  if (state.periodic()) urs.push_back(check_fujikawa(state, g.cfg));

  bool all = true;
  json ur_json = json::array();
  for (const auto& r : urs) {
    all = all && r.holds;
    ur_json.push_back(to_json(r));
  }
  const auto sym = detect_fold_symmetry(state, g.cfg.cmp_tol, g.cfg);
  const auto rec = recommend_n(state, r_threshold);

  json j{
      {"state", state_summary(state)},
      {"expect_lz", json_number(expect_lz(state))},
      {"observables", observables},
      {"uncertainty", ur_json},
      {"symmetry", to_json(sym)},
      {"recommend_n", rec ? json(*rec) : json(nullptr)},
      {"r_threshold", r_threshold},
      {"all_hold", all},
  };
  out << j.dump(2) << '\n';
  if (!g.json_only) print_ur_table(urs, err);
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_scan_beta(const Globals& g, const std::string& file, double from, double to,
                  double step, std::ostream& out) {
  const auto xs = sample_points(from, to, step);
  const auto state = load_state(file, g.cfg);
  if (!state.periodic()) {
    throw UnsupportedStateError("scan-beta needs a strictly periodic state (theta = 0)");
  }
  out << "beta,mean_phi_beta,sigma_phi_beta\n";
  for (double b : xs) {
    const auto mom = angle_moments_beta(state, b);
    out << csv_num(b) << ',' << csv_num(mom.mean) << ',' << csv_num(mom.sigma) << '\n';
  }
  return kExitOk;
}

struct MwpArgs {
  std::string axis = "X";
  int n = 1;
  int m = 0;
  double kappa = 0.0;
  bool emit_state = false;
  bool emit_curve = false;
  double step = kTwoPi / 360.0;
};

int cmd_mwp(const Globals& g, const MwpArgs& a, std::ostream& out, std::ostream& err) {
  Axis axis;
  if (a.axis == "X" || a.axis == "x") axis = Axis::X;
  else if (a.axis == "Y" || a.axis == "y") axis = Axis::Y;
  else throw UsageError("--axis must be X or Y");
  if (a.n < 1) throw UsageError("--n must be >= 1");
  if (!std::isfinite(a.kappa)) throw UsageError("--kappa must be finite");

  const auto [packet, state] = build_packet(axis, a.n, a.m, a.kappa, g.cfg);
  if (a.emit_state) {
    write_state(out, state);
    return kExitOk;
  }
  if (a.emit_curve) {
    const auto xs = sample_points(0.0, kTwoPi, a.step);
    out << "phi,abs_psi\n";
    for (double x : xs) out << csv_num(x) << ',' << csv_num(std::abs(state.evaluate(x))) << '\n';
    return kExitOk;
  }
  const auto v = verify_packet(packet, state, g.cfg.cmp_tol);
  json j{
      {"packet", to_json(packet)},
      {"state", state_summary(state)},
      {"verification", to_json(v)},
      {"saturation_gap",
       {{"X", saturation_gap(state, a.n, Axis::X)}, {"Y", saturation_gap(state, a.n, Axis::Y)}}},
  };
  out << j.dump(2) << '\n';
  if (!g.json_only) {
    err << "packet " << to_string(axis) << " n=" << a.n << " m=" << a.m << " kappa=" << a.kappa
        << ": " << (v.passed ? "verified" : "MISMATCH") << '\n';
  }
  return v.passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uncertainty relations and von Mises wave packets on a circle", "qcircle"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--hbar", g.cfg.hbar, "Reduced Planck constant")->capture_default_str();
  app.add_option("--tol", g.cfg.cmp_tol, "Comparison tolerance")->capture_default_str();
  app.add_option("--grid", g.cfg.grid_size, "Initial sampling grid (power of two)")
      ->capture_default_str();
  app.add_option("--trunc-tol", g.cfg.trunc_tol, "Coefficient truncation tolerance")
      ->capture_default_str();
  app.add_option("--max-mode", g.cfg.max_mode, "Largest |m| a state may carry")
      ->capture_default_str();
  app.add_flag("--json", g.json_only, "Machine output only (suppress diagnostics on stderr)");

  std::optional<std::string> selector;
  auto* ex = app.add_subcommand("examples", "Reproduce the worked examples");
  ex->add_option("id", selector,
                 "superposition[:k,m] | sin-power[:n] | von-mises[:alpha] | cos-phi | cos-2phi");

  CurveArgs curve;
  auto* cv = app.add_subcommand("curve", "Emit a function curve as CSV");
  cv->add_option("name", curve.name, "ratio | f | h | mwp_abs")->required();
  cv->add_option("--from", curve.from);
  cv->add_option("--to", curve.to);
  cv->add_option("--step", curve.step);
  cv->add_option("--n", curve.n, "Harmonic (mwp_abs)");
  cv->add_option("--m", curve.m, "Angular momentum quantum number (mwp_abs)");
  cv->add_option("--alpha", curve.alpha, "Concentration (mwp_abs, default 2/n)");

  std::string report_file;
  int nmax = 4;
  double r_threshold = 0.1;
  auto* rp = app.add_subcommand("report", "Analyse a state file");
  rp->add_option("file", report_file)->required();
  rp->add_option("--nmax", nmax)->capture_default_str();
  rp->add_option("--r-threshold", r_threshold)->capture_default_str();

  std::string scan_file;
  double b_from = 0.0, b_to = kTwoPi, b_step = 0.1;
  auto* sb = app.add_subcommand("scan-beta", "Angle moments against the window start");
  sb->add_option("file", scan_file)->required();
  sb->add_option("--from", b_from)->capture_default_str();
  sb->add_option("--to", b_to)->capture_default_str();
  sb->add_option("--step", b_step)->capture_default_str();

  MwpArgs mw;
  auto* mp = app.add_subcommand("mwp", "Build and verify a minimum wave packet");
  mp->add_option("--axis", mw.axis)->capture_default_str();
  mp->add_option("--n", mw.n)->capture_default_str();
  mp->add_option("--m", mw.m)->capture_default_str();
  mp->add_option("--kappa", mw.kappa)->required();
  auto* es = mp->add_flag("--emit-state", mw.emit_state, "Write the state record");
  auto* ec = mp->add_flag("--emit-curve", mw.emit_curve, "Write |psi| as CSV");
  es->excludes(ec);
  mp->add_option("--step", mw.step, "Curve step")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    g.cfg.validate();
    if (ex->parsed()) return cmd_examples(g, selector, out, err);
    if (cv->parsed()) return cmd_curve(g, curve, out);
    if (rp->parsed()) return cmd_report(g, report_file, nmax, r_threshold, out, err);
    if (sb->parsed()) return cmd_scan_beta(g, scan_file, b_from, b_to, b_step, out);
    if (mp->parsed()) return cmd_mwp(g, mw, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: state file " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateStateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadState;
  } catch (const UnsupportedStateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadState;
  } catch (const ResolutionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadState;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qcircle::cli
