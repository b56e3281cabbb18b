#include "qcircle/circle_state.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "qcircle/errors.hpp"
#include "qcircle/kernels.hpp"

namespace qcircle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_theta(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("boundary phase must be finite");
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

bool parse_double(const std::string& tok, double& out) {
  const char* first = tok.data();
  const char* last = first + tok.size();
  if (first != last && *first == '+') ++first;
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

bool parse_int(const std::string& tok, int& out) {
  const char* first = tok.data();
  const char* last = first + tok.size();
  if (first != last && *first == '+') ++first;
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

}  // namespace

void Config::validate() const {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw std::invalid_argument("hbar must be positive");
  if (!is_power_of_two(grid_size) || grid_size < 4) {
    throw std::invalid_argument("grid size must be a power of two >= 4");
  }
  if (!(trunc_tol >= 0.0 && trunc_tol < 1.0)) throw std::invalid_argument("trunc_tol must lie in [0, 1)");
  if (!(cmp_tol > 0.0)) throw std::invalid_argument("cmp_tol must be positive");
  if (max_mode < 0) throw std::invalid_argument("max_mode must be non-negative");
}

CircleState CircleState::from_dense(int first_mode, std::vector<cplx> coeffs,
                                    double theta, const Config& cfg) {
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("coefficients must be finite");
    }
  }
  auto lo = std::find_if(coeffs.begin(), coeffs.end(), [](cplx c) { return c != 0.0; });
  if (lo == coeffs.end()) throw DegenerateStateError("state has no nonzero coefficient");
  auto hi = std::find_if(coeffs.rbegin(), coeffs.rend(), [](cplx c) { return c != 0.0; }).base();
  first_mode += static_cast<int>(lo - coeffs.begin());
  std::vector<cplx> c(lo, hi);

  const int last_mode = first_mode + static_cast<int>(c.size()) - 1;
  if (std::max(std::abs(first_mode), std::abs(last_mode)) > cfg.max_mode) {
    throw ResolutionError("state needs |m| up to " +
                          std::to_string(std::max(std::abs(first_mode), std::abs(last_mode))) +
                          ", above the mode cap " + std::to_string(cfg.max_mode));
  }

  double norm2 = 0.0;
  for (const auto& v : c) norm2 += std::norm(v);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw DegenerateStateError("state cannot be normalized");
  }
  // Leave already-normalized input bit-exact so serialized states round-trip.
  if (std::abs(norm2 - 1.0) > 1e-15) {
    const double s = 1.0 / std::sqrt(norm2);
    for (auto& v : c) v *= s;
  }
  return CircleState(first_mode, std::move(c), reduce_theta(theta), cfg.hbar);
}

CircleState CircleState::from_fourier(const std::map<int, cplx>& coeffs,
                                      double theta, const Config& cfg) {
  if (coeffs.empty()) throw DegenerateStateError("state has no coefficients");
  const int lo = coeffs.begin()->first;
  const int hi = coeffs.rbegin()->first;
  if (std::max(std::abs(lo), std::abs(hi)) > cfg.max_mode) {
    throw ResolutionError("mode index exceeds the mode cap " + std::to_string(cfg.max_mode));
  }
  std::vector<cplx> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [m, c] : coeffs) dense[static_cast<std::size_t>(m - lo)] = c;
  return from_dense(lo, std::move(dense), theta, cfg);
}

CircleState CircleState::from_samples(std::span<const cplx> samples, double theta,
                                      const Config& cfg) {
  const std::size_t n = samples.size();
  if (n < 4 || !is_power_of_two(n)) {
    throw std::invalid_argument("sample count must be a power of two >= 4");
  }
  const auto spectrum = kernels::forward_dft(samples);
  const int half = static_cast<int>(n / 2);
  const double scale = std::sqrt(kTwoPi) / static_cast<double>(n);

  // Modes -N/2 .. N/2-1.
  std::vector<cplx> c(n);
  double total = 0.0;
  double outer = 0.0;
  const double outer_edge = 0.45 * static_cast<double>(n);
  for (int m = -half; m < half; ++m) {
    const auto k = static_cast<std::size_t>(m < 0 ? m + static_cast<int>(n) : m);
    const cplx v = spectrum[k] * scale;
    c[static_cast<std::size_t>(m + half)] = v;
    total += std::norm(v);
    if (std::abs(m) > outer_edge) outer += std::norm(v);
  }
  if (!(total > 0.0)) throw DegenerateStateError("samples are identically zero");
  if (outer > cfg.trunc_tol * total) {
    throw AliasingError("profile not resolved on " + std::to_string(n) +
                        " samples (outer-band weight " + format_double(outer / total) + ")");
  }
  const double floor = cfg.trunc_tol * std::sqrt(total);
  for (auto& v : c) {
    if (std::abs(v) <= floor) v = 0.0;
  }
  return from_dense(-half, std::move(c), theta, cfg);
}

CircleState CircleState::random(int max_mode, std::uint64_t seed, const Config& cfg) {
  if (max_mode < 0) throw std::invalid_argument("max_mode must be non-negative");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(2 * max_mode + 1));
  for (auto& v : c) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v = {re, im};
  }
  return from_dense(-max_mode, std::move(c), 0.0, cfg);
}

int CircleState::mode_bound() const noexcept {
  return std::max(std::abs(min_mode()), std::abs(max_mode()));
}

cplx CircleState::coeff(int m) const noexcept {
  if (m < min_mode() || m > max_mode()) return 0.0;
  return c_[static_cast<std::size_t>(m - first_)];
}

double CircleState::mu(int m) const noexcept {
  return static_cast<double>(m) + theta_ / kTwoPi;
}

cplx CircleState::evaluate(double phi) const noexcept {
  const cplx z = std::polar(1.0, phi);
  cplx p = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) p = p * z + *it;
  return p * std::polar(1.0, mu(first_) * phi) / std::sqrt(kTwoPi);
}

double CircleState::density(double phi) const noexcept {
  return std::norm(evaluate(phi));
}

CircleState CircleState::rotate(double delta) const {
  if (!std::isfinite(delta)) throw std::invalid_argument("rotation angle must be finite");
  std::vector<cplx> c(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const int m = first_ + static_cast<int>(k);
    c[k] = c_[k] * std::polar(1.0, -mu(m) * delta);
  }
  return CircleState(first_, std::move(c), theta_, hbar_);
}

std::map<int, cplx> CircleState::to_map() const {
  std::map<int, cplx> out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0.0) out.emplace(first_ + static_cast<int>(k), c_[k]);
  }
  return out;
}

double max_coeff_deviation_up_to_phase(const CircleState& a, const CircleState& b) {
  if (a.theta() != b.theta()) {
    throw std::invalid_argument("states have different boundary phases");
  }
  const int lo = std::min(a.min_mode(), b.min_mode());
  const int hi = std::max(a.max_mode(), b.max_mode());
  cplx overlap = 0.0;
  for (int m = lo; m <= hi; ++m) overlap += std::conj(b.coeff(m)) * a.coeff(m);
  const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx(1.0);
  double worst = 0.0;
  for (int m = lo; m <= hi; ++m) {
    worst = std::max(worst, std::abs(a.coeff(m) - phase * b.coeff(m)));
  }
  return worst;
}

void write_state(std::ostream& os, const CircleState& state) {
  os << "theta " << format_double(state.theta()) << '\n';
  for (const auto& [m, c] : state.to_map()) {
    os << m << ' ' << format_double(c.real()) << ' ' << format_double(c.imag()) << '\n';
  }
}

CircleState read_state(std::istream& is, const Config& cfg) {
  std::string line;
  std::size_t lineno = 0;
  bool have_theta = false;
  double theta = 0.0;
  std::map<int, cplx> coeffs;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (!have_theta) {
      if (tok.size() != 2 || tok[0] != "theta" || !parse_double(tok[1], theta)) {
        throw ParseError(lineno, "expected header `theta <value>`");
      }
      have_theta = true;
      continue;
    }
    int m = 0;
    double re = 0.0;
    double im = 0.0;
    if (tok.size() != 3 || !parse_int(tok[0], m) || !parse_double(tok[1], re) ||
        !parse_double(tok[2], im)) {
      throw ParseError(lineno, "expected `m re im`");
    }
    if (!coeffs.emplace(m, cplx(re, im)).second) {
      throw ParseError(lineno, "duplicate mode " + std::to_string(m));
    }
  }
  if (!have_theta) throw ParseError(lineno + 1, "missing `theta <value>` header");
  if (coeffs.empty()) throw DegenerateStateError("state file has no coefficients");
  return CircleState::from_fourier(coeffs, theta, cfg);
}

}  // namespace qcircle
