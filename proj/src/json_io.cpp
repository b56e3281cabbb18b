#include "qcircle/json_io.hpp"

#include <cmath>

namespace qcircle {

using nlohmann::json;

json json_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json to_json(const ObservableReport& r) {
  return {
      {"n", r.n},
      {"ex", json_number(r.ex)},
      {"ey", json_number(r.ey)},
      {"r_n", json_number(r.r_n)},
      {"mean_phi", r.mean_phi ? json_number(*r.mean_phi) : json(nullptr)},
      {"sigma_x", json_number(r.sigma_x)},
      {"sigma_y", json_number(r.sigma_y)},
      {"sigma_lz", json_number(r.sigma_lz)},
      {"sigma_tilde", json_number(r.sigma_tilde)},
      {"sigma_n", json_number(r.sigma_n)},
  };
}

json to_json(const URReport& r) {
  return {
      {"kind", std::string(to_string(r.kind))},
      {"n", r.n},
      {"lhs", json_number(r.lhs)},
      {"rhs", json_number(r.rhs)},
      {"slack", json_number(r.slack)},
      {"holds", r.holds},
      {"saturated", r.saturated},
  };
}

json to_json(const FoldSymmetry& s) {
  return {{"n", s.n}, {"fully_symmetric", s.fully_symmetric}};
}

json to_json(const VonMisesPacket& p) {
  const auto& pr = p.predicted;
  return {
      {"axis", std::string(to_string(p.axis))},
      {"n", p.n},
      {"m", p.m},
      {"kappa", json_number(p.kappa)},
      {"hbar", json_number(p.hbar)},
      {"predicted",
       {
           {"ex", json_number(pr.ex)},
           {"ey", json_number(pr.ey)},
           {"sigma_x2", json_number(pr.sigma_x2)},
           {"sigma_y2", json_number(pr.sigma_y2)},
           {"lz", json_number(pr.lz)},
           {"sigma_lz2", json_number(pr.sigma_lz2)},
           {"norm_const", json_number(pr.norm_const)},
       }},
  };
}

json to_json(const PacketVerification& v) {
  const auto& ms = v.measured;
  return {
      {"measured",
       {
           {"ex", json_number(ms.ex)},
           {"ey", json_number(ms.ey)},
           {"sigma_x2", json_number(ms.sigma_x2)},
           {"sigma_y2", json_number(ms.sigma_y2)},
           {"lz", json_number(ms.lz)},
           {"sigma_lz2", json_number(ms.sigma_lz2)},
           {"norm_const", json_number(ms.norm_const)},
       }},
      {"deltas",
       {
           {"ex", v.d_ex},
           {"ey", v.d_ey},
           {"sigma_x2", v.d_sigma_x2},
           {"sigma_y2", v.d_sigma_y2},
           {"sigma_lz2", v.d_sigma_lz2},
           {"lz", v.d_lz},
       }},
      {"kappa_measured", json_number(v.kappa_measured)},
      {"kappa_relative_delta", json_number(v.d_kappa)},
      {"tolerance", v.tolerance},
      {"passed", v.passed},
  };
}

json to_json(const ExampleResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({
        {"name", c.name},
        {"expression", c.expression},
        {"expected", json_number(c.expected)},
        {"computed", json_number(c.computed)},
        {"error", json_number(c.error)},
        {"passed", c.passed},
    });
  }
  return {{"case", r.example.label()}, {"passed", r.passed}, {"checks", checks}};
}

json state_summary(const CircleState& s) {
  return {
      {"theta", s.theta()},
      {"hbar", s.hbar()},
      {"min_mode", s.min_mode()},
      {"max_mode", s.max_mode()},
  };
}

}  // namespace qcircle
