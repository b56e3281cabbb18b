#include "qcircle/examples.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qcircle/bessel.hpp"
#include "qcircle/mwp.hpp"
#include "qcircle/observables.hpp"
#include "qcircle/uncertainty.hpp"

namespace qcircle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double binomial(int n, int k) {
  double b = 1.0;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

bool same(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= tol;
}

class CheckList {
 public:
  explicit CheckList(double tol) : tol_(tol) {}

  void add(std::string name, std::string expression, double expected, double computed) {
    QuantityCheck c;
    c.name = std::move(name);
    c.expression = std::move(expression);
    c.expected = expected;
    c.computed = computed;
    c.error = (std::isinf(expected) && expected == computed) ? 0.0 : std::abs(computed - expected);
    c.passed = same(expected, computed, tol_);
    checks_.push_back(std::move(c));
  }

  std::vector<QuantityCheck> take() { return std::move(checks_); }

 private:
  double tol_;
  std::vector<QuantityCheck> checks_;
};

template <typename T>
bool parse_number(std::string_view s, T& out) {
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

std::string fmt_num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

CircleState superposition_state(int k, int m, const Config& cfg) {
  if (k == m) throw std::invalid_argument("superposition needs two distinct modes");
  return CircleState::from_fourier({{k, 1.0}, {m, 1.0}}, 0.0, cfg);
}

CircleState sin_power_state(int n, const Config& cfg) {
  if (n < 1) throw std::invalid_argument("sin power must be >= 1");
  // sin^n(phi/2) = (2i)^{-n} sum_j C(n,j) (-1)^{n-j} e^{i (j - n/2) phi}
  const cplx prefactor = std::pow(cplx(0.0, 2.0), -n);
  const int offset = (n + 1) / 2;
  std::map<int, cplx> coeffs;
  for (int j = 0; j <= n; ++j) {
    const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
    coeffs[j - offset] = prefactor * (sign * binomial(n, j));
  }
  const double theta = (n % 2 == 1) ? std::numbers::pi : 0.0;
  return CircleState::from_fourier(coeffs, theta, cfg);
}

CircleState cos_state(int harmonic, const Config& cfg) {
  if (harmonic < 1) throw std::invalid_argument("cos harmonic must be >= 1");
  return CircleState::from_fourier({{harmonic, 0.5}, {-harmonic, 0.5}}, 0.0, cfg);
}

std::string ExampleCase::label() const {
  switch (id) {
    case ExampleId::SUPERPOSITION:
      return "superposition:" + std::to_string(k) + "," + std::to_string(m);
    case ExampleId::SIN_POWER: return "sin-power:" + std::to_string(power);
    case ExampleId::VON_MISES: return "von-mises:" + fmt_num(alpha);
    case ExampleId::COS_PHI: return "cos-phi";
    case ExampleId::COS_2PHI: return "cos-2phi";
  }
  return "?";
}

std::vector<ExampleCase> default_examples() {
  auto out = parse_example_selector("superposition");
  for (auto family : {"sin-power", "von-mises", "cos-phi", "cos-2phi"}) {
    auto more = parse_example_selector(family);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::vector<ExampleCase> parse_example_selector(std::string_view sel) {
  const auto colon = sel.find(':');
  const auto family = sel.substr(0, colon);
  const bool has_args = colon != std::string_view::npos;
  const auto args = has_args ? sel.substr(colon + 1) : std::string_view{};
  auto bad = [&] { return std::invalid_argument("unknown example selector '" + std::string(sel) + "'"); };

  std::vector<ExampleCase> out;
  if (family == "superposition") {
    if (!has_args) {
      for (auto [k, m] : {std::pair{1, 0}, {3, 2}, {0, 2}, {5, 1}}) {
        out.push_back({ExampleId::SUPERPOSITION, k, m, 0, 0.0});
      }
      return out;
    }
    const auto comma = args.find(',');
    int k = 0, m = 0;
    if (comma == std::string_view::npos || !parse_number(args.substr(0, comma), k) ||
        !parse_number(args.substr(comma + 1), m) || k == m) {
      throw bad();
    }
    out.push_back({ExampleId::SUPERPOSITION, k, m, 0, 0.0});
  } else if (family == "sin-power") {
    if (!has_args) {
      for (int n = 1; n <= 10; ++n) out.push_back({ExampleId::SIN_POWER, 0, 0, n, 0.0});
      return out;
    }
    int n = 0;
    if (!parse_number(args, n) || n < 1 || n > 60) throw bad();
    out.push_back({ExampleId::SIN_POWER, 0, 0, n, 0.0});
  } else if (family == "von-mises") {
    if (!has_args) {
      for (double a : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
        out.push_back({ExampleId::VON_MISES, 0, 0, 0, a});
      }
      return out;
    }
    double a = 0.0;
    if (!parse_number(args, a) || !std::isfinite(a) || a == 0.0) throw bad();
    out.push_back({ExampleId::VON_MISES, 0, 0, 0, a});
  } else if (family == "cos-phi" && !has_args) {
    out.push_back({ExampleId::COS_PHI, 0, 0, 0, 0.0});
  } else if (family == "cos-2phi" && !has_args) {
    out.push_back({ExampleId::COS_2PHI, 0, 0, 0, 0.0});
  } else {
    throw bad();
  }
  return out;
}

ExampleResult run_example(const ExampleCase& ex, const Config& cfg) {
  const double hbar = cfg.hbar;
  CheckList checks(cfg.cmp_tol);

  auto product = [](const CircleState& s, int n) {
    const double sn = sigma_total(s, n);
    return std::isinf(sn) ? kInf : sn * sigma_lz(s);
  };

  switch (ex.id) {
    case ExampleId::SUPERPOSITION: {
      const auto s = superposition_state(ex.k, ex.m, cfg);
      const int d = std::abs(ex.k - ex.m);
      const auto [x, y] = expect_xy(s, 1);
      const bool adjacent = d == 1;
      checks.add("<X>", adjacent ? "1/2" : "0", adjacent ? 0.5 : 0.0, x);
      checks.add("<Y>", "0", 0.0, y);
      checks.add("R", adjacent ? "1/2" : "0", adjacent ? 0.5 : 0.0, mean_resultant(s, 1));
      checks.add("sigma_R", adjacent ? "sqrt(3)" : "inf", adjacent ? std::sqrt(3.0) : kInf,
                 sigma_total(s, 1));
      checks.add("sigma_Lz", "hbar/2*" + std::to_string(d), 0.5 * hbar * d, sigma_lz(s));
      checks.add("sigma_R*sigma_Lz", adjacent ? "sqrt(3)/2*hbar" : "inf",
                 adjacent ? 0.5 * std::sqrt(3.0) * hbar : kInf, product(s, 1));
      break;
    }
    case ExampleId::SIN_POWER: {
      const auto s = sin_power_state(ex.power, cfg);
      const double n = ex.power;
      const std::string ns = std::to_string(ex.power);
      const auto [x, y] = expect_xy(s, 1);
      checks.add("<X>", "-" + ns + "/(" + ns + "+1)", -n / (n + 1.0), x);
      checks.add("<Y>", "0", 0.0, y);
      checks.add("sigma_R", "sqrt(2*" + ns + "+1)/" + ns, std::sqrt(2.0 * n + 1.0) / n,
                 sigma_total(s, 1));
      checks.add("sigma_Lz", "hbar/2*" + ns + "/sqrt(2*" + ns + "-1)",
                 0.5 * hbar * n / std::sqrt(2.0 * n - 1.0), sigma_lz(s));
      checks.add("sigma_R*sigma_Lz", "hbar/2*sqrt((2*" + ns + "+1)/(2*" + ns + "-1))",
                 0.5 * hbar * std::sqrt((2.0 * n + 1.0) / (2.0 * n - 1.0)), product(s, 1));
      break;
    }
    case ExampleId::VON_MISES: {
      const auto s = mwp_x(1, 0, ex.alpha, cfg).second;
      const double a = ex.alpha;
      const double r = bessel::ratio(a);
      const auto [x, y] = expect_xy(s, 1);
      checks.add("<X>", "0", 0.0, x);
      checks.add("<Y>", "I1(a)/I0(a)", r, y);
      checks.add("R", "|I1(a)/I0(a)|", std::abs(r), mean_resultant(s, 1));
      checks.add("sigma_Lz", "hbar/2*sqrt(a*I1(a)/I0(a))", 0.5 * hbar * std::sqrt(a * r),
                 sigma_lz(s));
      checks.add("sigma_R", "sqrt((I0(a)/I1(a))^2-1)", std::sqrt(1.0 / (r * r) - 1.0),
                 sigma_total(s, 1));
      checks.add("sigma_R*sigma_Lz", "hbar/2*f(a)", 0.5 * hbar * bessel::f_alpha(a),
                 product(s, 1));
      break;
    }
    case ExampleId::COS_PHI: {
      const auto s = cos_state(1, cfg);
      const auto [x2, y2] = expect_xy(s, 2);
      checks.add("R_1", "0", 0.0, mean_resultant(s, 1));
      checks.add("sigma_1", "inf", kInf, sigma_total(s, 1));
      checks.add("sigma_Lz", "hbar", hbar, sigma_lz(s));
      checks.add("<X_2>", "1/2", 0.5, x2);
      checks.add("<Y_2>", "0", 0.0, y2);
      checks.add("sigma_2", "sqrt(3)/2", 0.5 * std::sqrt(3.0), sigma_total(s, 2));
      checks.add("sigma_2*sigma_Lz", "sqrt(3)/2*hbar", 0.5 * std::sqrt(3.0) * hbar, product(s, 2));
      break;
    }
    case ExampleId::COS_2PHI: {
      const auto s = cos_state(2, cfg);
      const auto [x4, y4] = expect_xy(s, 4);
      checks.add("R_1", "0", 0.0, mean_resultant(s, 1));
      checks.add("<X_4>", "1/2", 0.5, x4);
      checks.add("<Y_4>", "0", 0.0, y4);
      checks.add("R_4", "1/2", 0.5, mean_resultant(s, 4));
      checks.add("sigma_4", "sqrt(3)/4", 0.25 * std::sqrt(3.0), sigma_total(s, 4));
      checks.add("sigma_Lz", "2*hbar", 2.0 * hbar, sigma_lz(s));
      checks.add("sigma_4*sigma_Lz", "sqrt(3)/2*hbar", 0.5 * std::sqrt(3.0) * hbar, product(s, 4));
      break;
    }
  }

  ExampleResult result;
  result.example = ex;
  result.checks = checks.take();
  result.passed = true;
  for (const auto& c : result.checks) result.passed = result.passed && c.passed;
  return result;
}

}  // namespace qcircle
