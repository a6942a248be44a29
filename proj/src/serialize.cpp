#include "pgakit/serialize.hpp"

#include <cinttypes>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "pgakit/version.hpp"

namespace pga {

using nlohmann::json;

std::string multivector_to_json(const Multivector& mv) {
  json out = json::array();
  for (BladeMask b = 0; b < mv.size(); ++b) {
    if (mv[b] != 0.0) {
      out.push_back(json::array({mv.algebra()->blade_name(b), mv[b]}));
    }
  }
  return out.dump();
}

Multivector multivector_from_json(const std::string& text, const AlgebraPtr& alg) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("multivector_from_json: ") + e.what());
  }
  if (!in.is_array()) {
    throw std::invalid_argument("multivector_from_json: expected an array of pairs");
  }
  Multivector mv(alg);
  for (const auto& entry : in) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_number()) {
      throw std::invalid_argument(
          "multivector_from_json: entries must be [name, coefficient]");
    }
    const BladeMask b = alg->blade_from_name(entry[0].get<std::string>());
    mv.set(b, mv[b] + entry[1].get<double>());
  }
  return mv;
}

namespace {

void append_g17(std::string& out, double v) {
  if (v == 0.0) v = 0.0;  // fold -0 for readability
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

json sample_to_json(const TrajectorySample& s) {
  const auto g = even_coords(s.state.pose.mv());
  const Vec6 w = bivector_coords(s.state.body_velocity);
  const Vec6 m = bivector_coords(s.momentum);
  json out;
  out["t"] = s.t;
  out["g"] = g;
  out["omega"] = w;
  out["energy"] = s.energy;
  out["momentum"] = m;
  return out;
}

}  // namespace

std::string trajectory_to_csv(const Trajectory& traj) {
  std::string out =
      "t,g0,g1,g2,g3,g4,g5,g6,g7,w01,w02,w03,w23,w31,w12,energy,"
      "m01,m02,m03,m23,m31,m12\n";
  for (const auto& s : traj.samples) {
    append_g17(out, s.t);
    const auto g = even_coords(s.state.pose.mv());
    for (double v : g) {
      out += ',';
      append_g17(out, v);
    }
    for (double v : bivector_coords(s.state.body_velocity)) {
      out += ',';
      append_g17(out, v);
    }
    out += ',';
    append_g17(out, s.energy);
    for (double v : bivector_coords(s.momentum)) {
      out += ',';
      append_g17(out, v);
    }
    out += '\n';
  }
  return out;
}

std::string trajectory_to_json(const Trajectory& traj) {
  json out;
  out["format"] = "pgakit-trajectory";
  out["version"] = kVersion;
  out["samples"] = json::array();
  for (const auto& s : traj.samples) out["samples"].push_back(sample_to_json(s));
  return out.dump();
}

Trajectory trajectory_from_json(const std::string& text, const AlgebraPtr& alg) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("trajectory_from_json: ") + e.what());
  }
  if (!in.is_object() || in.value("format", "") != "pgakit-trajectory" ||
      !in.contains("samples") || !in["samples"].is_array()) {
    throw std::invalid_argument("trajectory_from_json: not a trajectory document");
  }
  Trajectory traj;
  for (const auto& js : in["samples"]) {
    const auto g = js.at("g").get<std::array<double, 8>>();
    const auto w = js.at("omega").get<Vec6>();
    const auto m = js.at("momentum").get<Vec6>();
    TrajectorySample s{js.at("t").get<double>(),
                       RigidBodyState(Motor3(even_from_coords(g, alg)),
                                      bivector_from_coords(w, alg)),
                       js.at("energy").get<double>(),
                       bivector_from_coords(m, alg)};
    traj.samples.push_back(std::move(s));
  }
  return traj;
}

}  // namespace pga
