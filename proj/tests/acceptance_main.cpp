// Acceptance suite: every release criterion with its pinned tolerance, one
// pass/fail line each. Exits nonzero if anything fails. Criteria can be
// selected by name on the command line; default runs all.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "pgakit/analytic.hpp"
#include "pgakit/dual.hpp"
#include "pgakit/pga2.hpp"
#include "pgakit/pga3.hpp"
#include "pgakit/rigid.hpp"
#include "pgakit/rng.hpp"
#include "pgakit/serialize.hpp"
#include "pgakit/verify.hpp"
#include "support/blade_oracle.hpp"
#include "support/classical_euler.hpp"
#include "support/dq_oracle.hpp"
#include "support/poly_oracle.hpp"
#include "support/random_mv.hpp"
#include "support/table1.hpp"

using namespace pga;
namespace an = pga::analytic;
namespace ts = testsupport;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool leq(double value, double bound, const char* label, std::string& detail,
         bool& ok) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s=%.3g(<%g) ", label, value, bound);
  detail += buf;
  if (!(value < bound)) ok = false;
  return ok;
}

// --- 1. Cayley table ---------------------------------------------------------

bool crit_cayley(std::string& detail) {
  const double dev = ts::table1_max_deviation();
  detail = "max cell deviation " + std::to_string(dev);
  return dev == 0.0;
}

// --- 2./3. construction-table suites ------------------------------------------

bool crit_table2d(std::string& detail) {
  const auto report = verify::check_table2d(1000, 20260808);
  double worst = 0.0;
  for (const auto& r : report.rows) worst = std::max(worst, r.max_err);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%zu rows x 1000 trials, max err %.3g (<1e-10)",
                report.rows.size(), worst);
  detail = buf;
  if (!report.all_pass) {
    for (const auto& r : report.rows) {
      if (!r.pass) detail += " FAILED:" + r.name;
    }
  }
  return report.all_pass;
}

bool crit_table3d(std::string& detail) {
  const auto report = verify::check_table3d(500, 20260808);
  double worst = 0.0;
  bool has_example1 = false;
  for (const auto& r : report.rows) {
    worst = std::max(worst, r.max_err);
    has_example1 = has_example1 || r.name == "example1_construction";
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%zu rows x 500 trials, max err %.3g (<1e-10)",
                report.rows.size(), worst);
  detail = buf;
  if (!has_example1) {
    detail += " (example1 row missing)";
    return false;
  }
  if (!report.all_pass) {
    for (const auto& r : report.rows) {
      if (!r.pass) detail += " FAILED:" + r.name;
    }
  }
  return report.all_pass;
}

// --- 4. kaleidoscope ------------------------------------------------------------

bool crit_kaleidoscope(std::string& detail) {
  bool ok = true;
  const Plane a = plane(1, 0, 0, 0);
  const Plane b6 = plane(std::cos(kPi / 6), std::sin(kPi / 6), 0, 0);
  const double closure = closure_error(a, b6, 6);
  const auto orbit = kaleidoscope_orbit(a, b6, point3(0.3, 0.1, 0.2).mv());
  leq(closure, 1e-12, "closure(pi/6)", detail, ok);
  detail += "orbit=" + std::to_string(orbit.versors.size()) + "(=12) ";
  if (orbit.versors.size() != 12) ok = false;

  const Plane b5 = plane(std::cos(kPi / 5), std::sin(kPi / 5), 0, 0);
  const double bad = closure_error(a, b5, 6);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "negative-control(pi/5)=%.3g(>0.1)", bad);
  detail += buf;
  if (!(bad > 0.1)) ok = false;
  return ok;
}

// --- 5. skew line product -------------------------------------------------------

bool crit_skew_lines(std::string& detail) {
  Rng rng(555);
  double worst_angle = 0, worst_d = 0, worst_vol = 0;
  int done = 0;
  while (done < 500) {
    const an::Vec3 pa{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const an::Vec3 pb{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    an::Vec3 da{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    an::Vec3 db{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    if (da.norm() < 0.2 || db.norm() < 0.2) continue;
    da = da.unit();
    db = db.unit();
    const auto ca = an::closest_approach({pa, da}, {pb, db});
    if (ca.parallel || std::sin(ca.angle) < 0.05 || ca.distance < 0.1) continue;
    ++done;

    const Line3 la = line_through(point3(pa.x, pa.y, pa.z),
                                  point3(pa.x + da.x, pa.y + da.y, pa.z + da.z))
                         .normalized();
    const Line3 lb = line_through(point3(pb.x, pb.y, pb.z),
                                  point3(pb.x + db.x, pb.y + db.y, pb.z + db.z))
                         .normalized();
    const LineProduct lp = product_of_lines(la, lb);
    worst_angle = std::max(worst_angle, std::abs(lp.alpha - ca.angle));
    worst_d = std::max(worst_d, std::abs(std::abs(lp.d) - ca.distance));
    worst_vol = std::max(worst_vol, std::abs(std::abs(lp.d_sin_alpha) -
                                             ca.distance * std::sin(ca.angle)));
  }
  bool ok = true;
  leq(worst_angle, 1e-10, "angle", detail, ok);
  leq(worst_d, 1e-10, "distance", detail, ok);
  leq(worst_vol, 1e-10, "grade4-weight", detail, ok);
  return ok;
}

// --- 6. exponential correctness ---------------------------------------------------

bool crit_exponential(std::string& detail) {
  Rng rng(616);
  double worst_series = 0, worst_log = 0;
  for (int t = 0; t < 500; ++t) {
    Multivector b(Algebra::pga3());
    for (BladeMask m = 0; m < b.size(); ++m) {
      if (Algebra::grade(m) == 2) b.set(m, rng.uniform(-1, 1));
    }
    worst_series =
        std::max(worst_series, max_abs_diff(exp_bivector(b).mv(), exp_series(b, 40)));
  }
  for (int t = 0; t < 500; ++t) {
    an::Vec3 p{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    an::Vec3 d{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    if (d.norm() < 0.2) continue;
    d = d.unit();
    const Line3 axis =
        line_through(point3(p.x, p.y, p.z), point3(p.x + d.x, p.y + d.y, p.z + d.z))
            .normalized();
    const double alpha = rng.uniform(0.05, kPi - 0.1);
    const double beta = rng.uniform(-2, 2);
    const Multivector gen = ScrewDecomposition{axis, alpha, beta, false}.recompose();
    worst_log = std::max(worst_log, max_abs_diff(log_motor(exp_bivector(gen)), gen));
  }
  bool ok = true;
  leq(worst_series, 1e-12, "closed-vs-series", detail, ok);
  leq(worst_log, 1e-10, "log-exp-roundtrip", detail, ok);
  return ok;
}

// --- 7. dual quaternions ------------------------------------------------------------

bool crit_dual_quaternion(std::string& detail) {
  Rng rng(707);
  auto random_motor = [&] {
    Multivector b(Algebra::pga3());
    for (BladeMask m = 0; m < b.size(); ++m) {
      if (Algebra::grade(m) == 2) b.set(m, rng.uniform(-1, 1));
    }
    return exp_bivector(b);
  };
  double worst = 0;
  for (int t = 0; t < 200; ++t) {
    const Motor3 m1 = random_motor(), m2 = random_motor();
    const auto lhs = to_dual_quaternion(m1 * m2);
    const auto rhs = ts::dq_mul(to_dual_quaternion(m1), to_dual_quaternion(m2));
    for (int i = 0; i < 8; ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
  }
  bool ok = true;
  leq(worst, 1e-12, "homomorphism", detail, ok);
  return ok;
}

// --- 8. autodiff ----------------------------------------------------------------------

bool crit_autodiff(std::string& detail) {
  Rng rng(808);
  int exact_hits = 0;
  for (int t = 0; t < 50; ++t) {
    const int deg = 1 + static_cast<int>(rng.uniform(0, 6));
    std::vector<double> coeffs;
    for (int k = 0; k <= deg; ++k) coeffs.push_back(std::floor(rng.uniform(-9, 10)));
    const double x = std::floor(rng.uniform(-16, 17)) / 8.0;  // dyadic point
    const double got = derivative(
        [&](DualScalar v) {
          DualScalar sum(0.0);
          for (std::size_t k = 0; k < coeffs.size(); ++k) {
            sum = sum + DualScalar(coeffs[k]) * pow_int(v, static_cast<int>(k));
          }
          return sum;
        },
        x);
    const double want = ts::poly_eval(ts::poly_derivative(coeffs), x);
    if (got == want) ++exact_hits;
  }
  detail = "bit-exact polynomials " + std::to_string(exact_hits) + "/50 ";
  bool ok = exact_hits == 50;

  double worst_rel = 0;
  for (int t = 0; t < 300; ++t) {
    const double x = rng.uniform(0.2, 2.5);
    auto f = [](auto v) {
      using std::cos;
      using std::exp;
      using std::log;
      using std::sin;
      using std::sqrt;
      return sin(v * v) * cos(v) + exp(v * 0.5) / (v + 1.0) - log(v) * sqrt(v + 2.0);
    };
    const double ad = derivative([&](DualScalar v) { return f(v); }, x);
    const double h = 1e-6;
    const double fd = (f(x + h) - f(x - h)) / (2 * h);
    worst_rel = std::max(worst_rel, std::abs(ad - fd) / std::max(1.0, std::abs(ad)));
  }
  leq(worst_rel, 1e-5, "analytic-vs-central-diff", detail, ok);
  return ok;
}

// --- 9. rigid body ---------------------------------------------------------------------

bool crit_rigid_body(std::string& detail) {
  bool ok = true;
  const std::vector<PointMass> body = {
      {1, point3(1.0, 0, 0)},  {1, point3(-1.0, 0, 0)}, {1, point3(0, 1.7, 0)},
      {1, point3(0, -1.7, 0)}, {1, point3(0, 0, 2.9)},  {1, point3(0, 0, -2.9)},
      {0.5, point3(0.8, 0.6, 0)}, {0.5, point3(-0.8, -0.6, 0)}};
  const InertiaMap A = InertiaMap::from_point_masses(body);
  const RigidBodyState s0(
      Motor3::identity(),
      bivector_from_coords({0, 0, 0, 0.45, 0.025, 0.2}));

  // 10^5 steps at dt = 1e-3.
  const Trajectory traj = simulate(s0, A, 1e-3, 100000);
  const ConservationSummary cs = conservation_summary(traj);
  leq(cs.max_energy_drift, 1e-7, "energy-drift", detail, ok);
  leq(cs.max_momentum_drift, 1e-7, "momentum-drift", detail, ok);
  leq(cs.max_rotor_error, 1e-12, "rotor-constraint", detail, ok);

  // Halving dt reduces drift by >= 8 (measured where truncation dominates).
  auto drift_at = [&](double dt, long steps) {
    return conservation_summary(simulate(s0, A, dt, steps)).max_energy_drift;
  };
  const double coarse = drift_at(0.02, 1000);
  const double fine = drift_at(0.01, 2000);
  char buf[96];
  std::snprintf(buf, sizeof(buf), "order-ratio=%.1f(>=8) ", coarse / fine);
  detail += buf;
  if (!(coarse / fine >= 8.0)) ok = false;

  // Equivalence with the classical 3-vector flow over unit time.
  std::vector<ts::ClassicalParticle> cparts;
  for (const auto& p : body) {
    cparts.push_back({p.mass, {p.position.x(), p.position.y(), p.position.z()}});
  }
  const ts::M3 icl = ts::classical_inertia(cparts);
  const ts::M3 icl_inv = ts::m3_inverse(icl);
  ts::V3 w{};
  {
    const Vec6 c = bivector_coords(s0.body_velocity);
    w = {-2 * c[3], -2 * c[4], -2 * c[5]};
  }
  RigidBodyState s = s0;
  for (int i = 0; i < 1000; ++i) {
    s = step_rk4(s, A, 1e-3);
    w = ts::euler_rk4_step(icl, icl_inv, w, 1e-3);
  }
  const Vec6 c = bivector_coords(s.body_velocity);
  const double eq = std::max({std::abs(-2 * c[3] - w[0]), std::abs(-2 * c[4] - w[1]),
                              std::abs(-2 * c[5] - w[2])});
  leq(eq, 1e-9, "classical-equivalence", detail, ok);
  return ok;
}

// --- 10. kernel laws ---------------------------------------------------------------------

bool crit_kernel_laws(std::string& detail) {
  Rng rng(1010);
  double assoc = 0, distrib = 0, revanti = 0, dualrt = 0;
  for (const auto& alg : {Algebra::pga2(), Algebra::pga3()}) {
    for (int t = 0; t < 1000; ++t) {
      const Multivector a = ts::random_mv(alg, rng);
      const Multivector b = ts::random_mv(alg, rng);
      const Multivector c = ts::random_mv(alg, rng);
      assoc = std::max(assoc, max_abs_diff((a * b) * c, a * (b * c)));
      distrib = std::max(distrib, max_abs_diff(a * (b + c), a * b + a * c));
      revanti = std::max(revanti, max_abs_diff(reverse(a * b), reverse(b) * reverse(a)));
      dualrt = std::max(dualrt, max_abs_diff(poincare_undual(poincare_dual(a)), a));
    }
  }
  bool ok = true;
  leq(assoc, 1e-12, "associativity", detail, ok);
  leq(distrib, 1e-12, "distributivity", detail, ok);
  leq(revanti, 1e-12, "reverse-antiautomorphism", detail, ok);
  leq(dualrt, 1e-12, "duality-roundtrip", detail, ok);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"cayley-table-2d", 1.0, crit_cayley},
      {"table-2d-oracle-suite", 5.0, crit_table2d},
      {"table-3d-oracle-suite", 10.0, crit_table3d},
      {"kaleidoscope-closure", 1.0, crit_kaleidoscope},
      {"skew-line-product", 10.0, crit_skew_lines},
      {"exponential-correctness", 10.0, crit_exponential},
      {"dual-quaternion-homomorphism", 10.0, crit_dual_quaternion},
      {"autodiff-exactness", 10.0, crit_autodiff},
      {"rigid-body-conservation", 60.0, crit_rigid_body},
      {"kernel-algebra-laws", 10.0, crit_kernel_laws},
  };

  int failures = 0;
  int ran = 0;
  for (const auto& crit : criteria) {
    if (argc > 1) {
      bool selected = false;
      for (int i = 1; i < argc; ++i) {
        if (crit.name == argv[i]) selected = true;
      }
      if (!selected) continue;
    }
    ++ran;
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = crit.run(detail);
    } catch (const std::exception& e) {
      detail += std::string(" exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= crit.budget_seconds) {
      ok = false;
      detail += " OVER TIME BUDGET";
    }
    std::printf("%s %-30s %s[%.2fs, budget %.0fs]\n", ok ? "PASS" : "FAIL",
                crit.name.c_str(), detail.c_str(), secs, crit.budget_seconds);
    if (!ok) ++failures;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion matched; known names:\n");
    for (const auto& crit : criteria) std::fprintf(stderr, "  %s\n", crit.name.c_str());
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
