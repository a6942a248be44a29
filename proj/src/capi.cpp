#include "pgakit/pgakit_c.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "pgakit/analytic.hpp"
#include "pgakit/dual.hpp"
#include "pgakit/expr.hpp"
#include "pgakit/pga2.hpp"
#include "pgakit/pga3.hpp"
#include "pgakit/rigid.hpp"
#include "pgakit/serialize.hpp"
#include "pgakit/verify.hpp"
#include "pgakit/version.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

struct pga_mv {
  pga::Multivector v;
};

namespace {

thread_local std::string g_error;

void set_error(const std::string& msg) { g_error = msg; }

template <typename F>
pga_status guarded(F&& f) {
  try {
    return f();
  } catch (const pga::ExprError& e) {
    set_error(e.what());
    return PGA_ERR_PARSE;
  } catch (const pga::DomainError& e) {
    set_error(e.what());
    return PGA_ERR_DOMAIN;
  } catch (const json::exception& e) {
    set_error(e.what());
    return PGA_ERR_PARSE;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return PGA_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return PGA_ERR_USAGE;
  } catch (const std::out_of_range& e) {
    set_error(e.what());
    return PGA_ERR_USAGE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return PGA_ERR_INTERNAL;
  }
}

const pga::AlgebraPtr& algebra_for_dim(int dim) {
  if (dim == 2) return pga::Algebra::pga2();
  if (dim == 3) return pga::Algebra::pga3();
  throw std::invalid_argument("dim must be 2 or 3");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pga_mv* wrap(pga::Multivector v) { return new pga_mv{std::move(v)}; }

const pga::Multivector& need(const pga_mv* mv, const char* what) {
  if (mv == nullptr) throw std::invalid_argument(std::string(what) + ": null handle");
  return mv->v;
}

template <typename T>
T* need_out(T** out, const char* what) {
  if (out == nullptr) throw std::invalid_argument(std::string(what) + ": null out");
  return nullptr;
}

pga::analytic::Vec3 parse_vec3(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument(std::string(what) + ": expected [x, y, z]");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

extern "C" {

const char* pga_version(void) { return pga::kVersion; }

const char* pga_last_error(void) { return g_error.c_str(); }

void pga_string_free(char* s) { std::free(s); }

// --- multivector values ------------------------------------------------------

pga_status pga_mv_zero(int dim, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_mv_zero");
    *out = wrap(pga::Multivector::zero(algebra_for_dim(dim)));
    return PGA_OK;
  });
}

pga_status pga_mv_scalar(int dim, double value, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_mv_scalar");
    *out = wrap(pga::Multivector::scalar(algebra_for_dim(dim), value));
    return PGA_OK;
  });
}

pga_status pga_mv_clone(const pga_mv* mv, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_mv_clone");
    *out = wrap(need(mv, "pga_mv_clone"));
    return PGA_OK;
  });
}

void pga_mv_free(pga_mv* mv) { delete mv; }

pga_status pga_mv_set(pga_mv* mv, const char* blade, double coeff) {
  return guarded([&] {
    if (mv == nullptr || blade == nullptr) {
      throw std::invalid_argument("pga_mv_set: null argument");
    }
    mv->v.set(mv->v.algebra()->blade_from_name(blade), coeff);
    return PGA_OK;
  });
}

pga_status pga_mv_get(const pga_mv* mv, const char* blade, double* out_coeff) {
  return guarded([&] {
    if (blade == nullptr || out_coeff == nullptr) {
      throw std::invalid_argument("pga_mv_get: null argument");
    }
    const pga::Multivector& v = need(mv, "pga_mv_get");
    *out_coeff = v[v.algebra()->blade_from_name(blade)];
    return PGA_OK;
  });
}

pga_status pga_mv_dim(const pga_mv* mv, int* out_dim) {
  return guarded([&] {
    if (out_dim == nullptr) throw std::invalid_argument("pga_mv_dim: null out");
    *out_dim = need(mv, "pga_mv_dim").algebra()->dim() - 1;
    return PGA_OK;
  });
}

pga_status pga_mv_from_json(int dim, const char* text, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_mv_from_json");
    if (text == nullptr) throw std::invalid_argument("pga_mv_from_json: null json");
    *out = wrap(pga::multivector_from_json(text, algebra_for_dim(dim)));
    return PGA_OK;
  });
}

pga_status pga_mv_to_json(const pga_mv* mv, char** out_json) {
  return guarded([&] {
    need_out(out_json, "pga_mv_to_json");
    *out_json = dup_string(pga::multivector_to_json(need(mv, "pga_mv_to_json")));
    return PGA_OK;
  });
}

// --- products ------------------------------------------------------------------

#define PGAKIT_BINARY_OP(cname, expr)                                      \
  pga_status cname(const pga_mv* a, const pga_mv* b, pga_mv** out) {       \
    return guarded([&] {                                                   \
      need_out(out, #cname);                                               \
      const pga::Multivector& va = need(a, #cname);                        \
      const pga::Multivector& vb = need(b, #cname);                        \
      *out = wrap(expr);                                                   \
      return PGA_OK;                                                       \
    });                                                                    \
  }

PGAKIT_BINARY_OP(pga_mv_add, va + vb)
PGAKIT_BINARY_OP(pga_mv_sub, va - vb)
PGAKIT_BINARY_OP(pga_mv_gp, geometric_product(va, vb))
PGAKIT_BINARY_OP(pga_mv_outer, outer_product(va, vb))
PGAKIT_BINARY_OP(pga_mv_inner, inner_product(va, vb))
PGAKIT_BINARY_OP(pga_mv_join, regressive_product(va, vb))
PGAKIT_BINARY_OP(pga_mv_commutator, commutator(va, vb))
PGAKIT_BINARY_OP(pga_mv_sandwich, sandwich(va, vb))

#undef PGAKIT_BINARY_OP

pga_status pga_mv_scale(const pga_mv* a, double s, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_mv_scale");
    *out = wrap(need(a, "pga_mv_scale") * s);
    return PGA_OK;
  });
}

pga_status pga_mv_reverse(const pga_mv* a, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_mv_reverse");
    *out = wrap(reverse(need(a, "pga_mv_reverse")));
    return PGA_OK;
  });
}

pga_status pga_mv_dual(const pga_mv* a, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_mv_dual");
    *out = wrap(poincare_dual(need(a, "pga_mv_dual")));
    return PGA_OK;
  });
}

pga_status pga_mv_undual(const pga_mv* a, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_mv_undual");
    *out = wrap(poincare_undual(need(a, "pga_mv_undual")));
    return PGA_OK;
  });
}

pga_status pga_mv_grade_part(const pga_mv* a, int grade, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_mv_grade_part");
    *out = wrap(grade_part(need(a, "pga_mv_grade_part"), grade));
    return PGA_OK;
  });
}

pga_status pga_mv_exp_series(const pga_mv* a, int terms, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_mv_exp_series");
    *out = wrap(exp_series(need(a, "pga_mv_exp_series"), terms));
    return PGA_OK;
  });
}

pga_status pga_mv_norm(const pga_mv* a, double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("pga_mv_norm: null out");
    *out = norm(need(a, "pga_mv_norm"));
    return PGA_OK;
  });
}

pga_status pga_mv_ideal_norm(const pga_mv* a, double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("pga_mv_ideal_norm: null out");
    *out = ideal_norm(need(a, "pga_mv_ideal_norm"));
    return PGA_OK;
  });
}

// --- typed constructors ----------------------------------------------------------

pga_status pga_point2(double x, double y, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_point2");
    *out = wrap(pga::point(x, y).mv());
    return PGA_OK;
  });
}

pga_status pga_line2(double a, double b, double c, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_line2");
    *out = wrap(pga::line(a, b, c).mv());
    return PGA_OK;
  });
}

pga_status pga_direction2(double x, double y, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_direction2");
    *out = wrap(pga::direction(x, y).mv());
    return PGA_OK;
  });
}

pga_status pga_point3(double x, double y, double z, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_point3");
    *out = wrap(pga::point3(x, y, z).mv());
    return PGA_OK;
  });
}

pga_status pga_plane3(double a, double b, double c, double d, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_plane3");
    *out = wrap(pga::plane(a, b, c, d).mv());
    return PGA_OK;
  });
}

pga_status pga_direction3(double x, double y, double z, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_direction3");
    *out = wrap(pga::direction3(x, y, z).mv());
    return PGA_OK;
  });
}

// --- motors -------------------------------------------------------------------------

pga_status pga_motor_exp(const pga_mv* bivector, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_motor_exp");
    *out = wrap(pga::exp_bivector(need(bivector, "pga_motor_exp")).mv());
    return PGA_OK;
  });
}

pga_status pga_motor_log(const pga_mv* motor, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_motor_log");
    *out = wrap(pga::log_motor(pga::Motor3(need(motor, "pga_motor_log"))));
    return PGA_OK;
  });
}

pga_status pga_motor_normalize(const pga_mv* motor, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_motor_normalize");
    *out = wrap(
        pga::Motor3(need(motor, "pga_motor_normalize")).normalized().mv());
    return PGA_OK;
  });
}

pga_status pga_motor_from_screw(const pga_mv* axis, double angle, double pitch,
                                pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_motor_from_screw");
    *out = wrap(pga::motor_from_screw(pga::Line3(need(axis, "pga_motor_from_screw")),
                                      angle, pitch)
                    .mv());
    return PGA_OK;
  });
}

pga_status pga_motor_apply(const pga_mv* motor, const pga_mv* x, pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_motor_apply");
    const pga::Multivector& m = need(motor, "pga_motor_apply");
    *out = wrap(sandwich(reverse(m), need(x, "pga_motor_apply")));
    return PGA_OK;
  });
}

pga_status pga_motor_to_dual_quaternion(const pga_mv* motor, double out_q[8]) {
  return guarded([&] {
    if (out_q == nullptr) {
      throw std::invalid_argument("pga_motor_to_dual_quaternion: null out");
    }
    const auto q = pga::to_dual_quaternion(
        pga::Motor3(need(motor, "pga_motor_to_dual_quaternion")));
    for (int i = 0; i < 8; ++i) out_q[i] = q[i];
    return PGA_OK;
  });
}

pga_status pga_motor_from_dual_quaternion(const double q[8], pga_mv** out) {
  return guarded([&] {
    need_out(out, "pga_motor_from_dual_quaternion");
    if (q == nullptr) {
      throw std::invalid_argument("pga_motor_from_dual_quaternion: null input");
    }
    std::array<double, 8> arr;
    for (int i = 0; i < 8; ++i) arr[i] = q[i];
    *out = wrap(pga::from_dual_quaternion(arr).mv());
    return PGA_OK;
  });
}

// --- commands ---------------------------------------------------------------------

pga_status pga_cayley_table(int dim, char** out_text) {
  return guarded([&] {
    need_out(out_text, "pga_cayley_table");
    const auto& alg = algebra_for_dim(dim);
    const std::size_t n = alg->blade_count();

    // Rows and columns in grade-major order, as the published tables read.
    std::vector<pga::BladeMask> order;
    for (int grade = 0; grade <= alg->dim(); ++grade) {
      for (pga::BladeMask b = 0; b < n; ++b) {
        if (pga::Algebra::grade(b) == grade) order.push_back(b);
      }
    }

    auto cell = [&](pga::BladeMask a, pga::BladeMask b) -> std::string {
      const int sign = alg->product_sign(a, b);
      if (sign == 0) return "0";
      return (sign < 0 ? "-" : "") + alg->blade_name(a ^ b);
    };

    std::size_t width = 1;
    for (pga::BladeMask a = 0; a < n; ++a) {
      width = std::max(width, alg->blade_name(a).size());
      for (pga::BladeMask b = 0; b < n; ++b) width = std::max(width, cell(a, b).size());
    }
    width += 2;

    auto pad = [&](const std::string& s) {
      return std::string(width - s.size(), ' ') + s;
    };

    std::string out = pad("");
    for (pga::BladeMask b : order) out += pad(alg->blade_name(b));
    out += '\n';
    for (pga::BladeMask a : order) {
      out += pad(alg->blade_name(a));
      for (pga::BladeMask b : order) out += pad(cell(a, b));
      out += '\n';
    }
    if (dim == 2) {
      out += "\nnamed basis: E0 = e12, E1 = e20 = -e02, E2 = e01, I = e012\n";
    }
    *out_text = dup_string(out);
    return PGA_OK;
  });
}

pga_status pga_check_formulas(int dim, int trials, uint64_t seed, char** out_json,
                              int* out_all_pass) {
  return guarded([&] {
    need_out(out_json, "pga_check_formulas");
    if (trials < 1) throw std::invalid_argument("check: trials must be >= 1");
    (void)algebra_for_dim(dim);
    const pga::verify::Report report =
        dim == 2 ? pga::verify::check_table2d(trials, seed)
                 : pga::verify::check_table3d(trials, seed);
    *out_json = dup_string(pga::verify::report_to_json(report));
    if (out_all_pass != nullptr) *out_all_pass = report.all_pass ? 1 : 0;
    if (!report.all_pass) {
      set_error("verification failures; see the JSON report");
      return PGA_ERR_VERIFY;
    }
    return PGA_OK;
  });
}

pga_status pga_orbit_run(int k, char** out_json, int* out_closed) {
  return guarded([&] {
    need_out(out_json, "pga_orbit_run");
    if (k < 2) throw std::invalid_argument("orbit: k must be >= 2");
    const double theta = 3.14159265358979323846 / k;
    const pga::Plane a = pga::plane(1, 0, 0, 0);
    const pga::Plane b = pga::plane(std::cos(theta), std::sin(theta), 0, 0);
    const auto orbit = pga::kaleidoscope_orbit(
        a, b, pga::point3(0.3, 0.1, 0.2).mv(),
        static_cast<std::size_t>(4 * k + 16));
    const double closure = pga::closure_error(a, b, k);
    const bool closed = closure < 1e-12;

    ordered_json out;
    out["tool"] = "pgakit";
    out["version"] = pga::kVersion;
    out["k"] = k;
    out["mirror_angle"] = theta;
    out["orbit_size"] = orbit.versors.size();
    out["expected_size"] = 2 * k;
    out["closure_error"] = closure;
    out["closed"] = closed;
    *out_json = dup_string(out.dump(2));
    if (out_closed != nullptr) *out_closed = closed ? 1 : 0;
    return PGA_OK;
  });
}

pga_status pga_screw_run(const char* axis_json, double angle, double pitch,
                         int samples, int format, char** out_text) {
  return guarded([&] {
    need_out(out_text, "pga_screw_run");
    if (axis_json == nullptr) throw std::invalid_argument("screw: null axis spec");
    if (samples < 1) throw std::invalid_argument("screw: samples must be >= 1");

    const json spec = json::parse(axis_json);
    const auto p0 = parse_vec3(spec.at("point"), "screw axis point");
    const auto dir = parse_vec3(spec.at("dir"), "screw axis dir");
    if (dir.norm() == 0.0) throw std::invalid_argument("screw: zero axis direction");
    const auto du = dir.unit();

    pga::analytic::Vec3 track;
    if (spec.contains("track")) {
      track = parse_vec3(spec["track"], "screw track point");
    } else {
      // Default tracked point: unit offset perpendicular to the axis.
      pga::analytic::Vec3 off = du.cross({1, 0, 0});
      if (off.norm() < 0.1) off = du.cross({0, 1, 0});
      track = p0 + off.unit();
    }

    const pga::Line3 axis =
        pga::line_through(pga::point3(p0.x, p0.y, p0.z),
                          pga::point3(p0.x + du.x, p0.y + du.y, p0.z + du.z))
            .normalized();

    ordered_json jsamples = ordered_json::array();
    std::string csv = "t,x,y,z\n";
    for (int kstep = 0; kstep <= samples; ++kstep) {
      const double t = angle * kstep / samples;
      const pga::Motor3 m = pga::motor_from_screw(axis, t, pitch);
      const pga::Point3 moved =
          pga::apply(m, pga::point3(track.x, track.y, track.z)).normalized();
      char buf[128];
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", t, moved.x(),
                    moved.y(), moved.z());
      csv += buf;
      jsamples.push_back(
          {{"t", t}, {"point", {moved.x(), moved.y(), moved.z()}}});
    }

    if (format == 0) {
      *out_text = dup_string(csv);
    } else {
      ordered_json out;
      out["tool"] = "pgakit";
      out["version"] = pga::kVersion;
      out["angle"] = angle;
      out["pitch"] = pitch;
      out["samples"] = samples;
      out["axis"] = {{"point", {p0.x, p0.y, p0.z}}, {"dir", {du.x, du.y, du.z}}};
      out["track"] = {track.x, track.y, track.z};
      out["path"] = jsamples;
      *out_text = dup_string(out.dump(2));
    }
    return PGA_OK;
  });
}

pga_status pga_top_run(const char* body_json, const char* omega_json, double dt,
                       long steps, int format, char** out_trajectory,
                       char** out_summary_json) {
  return guarded([&] {
    need_out(out_trajectory, "pga_top_run");
    if (body_json == nullptr || omega_json == nullptr) {
      throw std::invalid_argument("top: null body or omega spec");
    }
    if (!(dt > 0.0)) throw std::invalid_argument("top: dt must be positive");
    if (steps < 1) throw std::invalid_argument("top: steps must be >= 1");

    const json body = json::parse(body_json);
    if (!body.is_object() || !body.contains("particles") ||
        !body["particles"].is_array() || body["particles"].empty()) {
      throw std::invalid_argument("top: body spec needs a particles array");
    }
    std::vector<pga::PointMass> particles;
    for (const auto& jp : body["particles"]) {
      if (!jp.is_array() || jp.size() != 4) {
        throw std::invalid_argument("top: each particle is [m, x, y, z]");
      }
      particles.push_back({jp[0].get<double>(),
                           pga::point3(jp[1].get<double>(), jp[2].get<double>(),
                                       jp[3].get<double>())});
    }
    const pga::InertiaMap A = pga::InertiaMap::from_point_masses(particles);

    const json jw = json::parse(omega_json);
    if (!jw.is_array() || jw.size() != 6) {
      throw std::invalid_argument("top: omega is [w01,w02,w03,w23,w31,w12]");
    }
    pga::Vec6 w{};
    for (int i = 0; i < 6; ++i) w[static_cast<std::size_t>(i)] = jw[static_cast<std::size_t>(i)].get<double>();

    const pga::RigidBodyState s0(pga::Motor3::identity(),
                                 pga::bivector_from_coords(w));
    const pga::Trajectory traj = pga::simulate(s0, A, dt, steps);
    const pga::ConservationSummary cs = pga::conservation_summary(traj);

    *out_trajectory = dup_string(format == 0 ? pga::trajectory_to_csv(traj)
                                             : pga::trajectory_to_json(traj));
    if (out_summary_json != nullptr) {
      ordered_json summary;
      summary["tool"] = "pgakit";
      summary["version"] = pga::kVersion;
      summary["dt"] = dt;
      summary["steps"] = steps;
      summary["body_rank"] = A.rank();
      summary["energy_initial"] = traj.samples.front().energy;
      summary["max_energy_drift"] = cs.max_energy_drift;
      summary["max_momentum_drift"] = cs.max_momentum_drift;
      summary["max_rotor_error"] = cs.max_rotor_error;
      *out_summary_json = dup_string(summary.dump(2));
    }
    return PGA_OK;
  });
}

pga_status pga_diff_eval(const char* expression, const char* point_json,
                         char** out_json) {
  return guarded([&] {
    need_out(out_json, "pga_diff_eval");
    if (expression == nullptr) throw std::invalid_argument("diff: null expression");

    const pga::Expression expr = pga::Expression::parse(expression);
    std::map<std::string, double> point;
    if (point_json != nullptr && point_json[0] != '\0') {
      const json jp = json::parse(point_json);
      if (!jp.is_object()) {
        throw std::invalid_argument("diff: point must be a JSON object");
      }
      for (const auto& [key, value] : jp.items()) {
        point[key] = value.get<double>();
      }
    }
    const auto result = expr.differentiate(point);

    ordered_json out;
    out["tool"] = "pgakit";
    out["version"] = pga::kVersion;
    out["expression"] = expression;
    out["point"] = ordered_json::object();
    for (const auto& v : expr.variables()) out["point"][v] = point.at(v);
    out["value"] = result.value;
    if (result.partials.empty()) {
      out["derivative"] = 0.0;  // constant expression
    } else if (result.partials.size() == 1) {
      out["derivative"] = result.partials.front().second;
    } else {
      out["gradient"] = ordered_json::object();
      for (const auto& [name, d] : result.partials) out["gradient"][name] = d;
    }
    *out_json = dup_string(out.dump(2));
    return PGA_OK;
  });
}

}  // extern "C"
