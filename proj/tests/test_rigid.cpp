#include <cmath>

#include "doctest.h"
#include "pgakit/rigid.hpp"
#include "pgakit/rng.hpp"
#include "support/classical_euler.hpp"

using namespace pga;
namespace ts = testsupport;

namespace {

std::vector<PointMass> octahedral_body() {
  return {{1, point3(1, 0, 0)},  {1, point3(-1, 0, 0)}, {1, point3(0, 1, 0)},
          {1, point3(0, -1, 0)}, {1, point3(0, 0, 1)},  {1, point3(0, 0, -1)}};
}

/// Markedly asymmetric body with its center of mass at the origin.
std::vector<PointMass> asymmetric_body() {
  return {{1, point3(1.0, 0, 0)},  {1, point3(-1.0, 0, 0)},
          {1, point3(0, 1.7, 0)},  {1, point3(0, -1.7, 0)},
          {1, point3(0, 0, 2.9)},  {1, point3(0, 0, -2.9)},
          {0.5, point3(0.8, 0.6, 0)}, {0.5, point3(-0.8, -0.6, 0)}};
}

std::vector<ts::ClassicalParticle> as_classical(const std::vector<PointMass>& b) {
  std::vector<ts::ClassicalParticle> out;
  for (const auto& p : b) {
    out.push_back({p.mass, {p.position.x(), p.position.y(), p.position.z()}});
  }
  return out;
}

/// omega = -2 (c23, c31, c12): the classical angular velocity carried by a
/// rotational bivector with coordinates c.
ts::V3 omega_of(const Multivector& biv) {
  const Vec6 c = bivector_coords(biv);
  return {-2 * c[3], -2 * c[4], -2 * c[5]};
}

Multivector biv_of_omega(const ts::V3& w) {
  return bivector_from_coords({0, 0, 0, -w[0] / 2, -w[1] / 2, -w[2] / 2});
}

Multivector random_rot_biv(Rng& rng) {
  return bivector_from_coords({0, 0, 0, rng.uniform(-1, 1), rng.uniform(-1, 1),
                               rng.uniform(-1, 1)});
}

}  // namespace

TEST_CASE("bivector coordinates and the Klein pairing") {
  Rng rng(81);
  for (int t = 0; t < 50; ++t) {
    Vec6 c;
    for (auto& v : c) v = rng.uniform(-2, 2);
    CHECK(bivector_coords(bivector_from_coords(c)) == c);
  }
  // K pairs each moment coordinate with its direction partner, no signs.
  for (int i = 0; i < 6; ++i) {
    Vec6 a{}, b{};
    a[i] = 1.0;
    for (int j = 0; j < 6; ++j) {
      b = Vec6{};
      b[j] = 1.0;
      const double k =
          klein_pairing(bivector_from_coords(a), bivector_from_coords(b));
      CHECK(k == ((i + 3) % 6 == j % 6 && (i / 3 != j / 3) ? 1.0 : 0.0));
    }
  }
  const std::array<double, 8> g{0.5, 1, 2, 3, 4, 5, 6, 7};
  CHECK(even_coords(even_from_coords(g)) == g);
}

TEST_CASE("inertia map from point masses") {
  // A single mass at the origin only carries the translational directions.
  const InertiaMap solo = InertiaMap::from_point_masses({{1, point3(0, 0, 0)}});
  CHECK(solo.rank() == 3);
  CHECK(solo.is_degenerate());
  for (int j = 3; j < 6; ++j) {
    Vec6 c{};
    c[j] = 1.0;  // rotations through the origin's axes
    CHECK(solo.apply(bivector_from_coords(c)).is_zero(1e-15));
  }

  const InertiaMap octa = InertiaMap::from_point_masses(octahedral_body());
  CHECK(octa.rank() == 6);
  const Mat6& q = octa.quadratic_form();
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      CHECK(q[i][j] == (i == j ? (i < 3 ? 12.0 : 8.0) : 0.0));
    }
  }
  // Rotational block = 2 x the classical inertia tensor diag(4,4,4).
  const ts::M3 icl = ts::classical_inertia(as_classical(octahedral_body()));
  for (int i = 0; i < 3; ++i) CHECK(q[3 + i][3 + i] == 2.0 * icl[i][i]);

  // Pinned: the momentum state of a unit z-axis rotation bivector.
  const Multivector m12 = octa.apply(Multivector::blade(Algebra::pga3(), 0b0110));
  CHECK(max_abs_diff(m12, Multivector::blade(Algebra::pga3(), 0b1001, -8.0)) <
        1e-12);

  // Linearity: doubling all masses doubles the map.
  auto doubled = octahedral_body();
  for (auto& p : doubled) p.mass *= 2;
  const InertiaMap octa2 = InertiaMap::from_point_masses(doubled);
  Rng rng(83);
  for (int t = 0; t < 20; ++t) {
    const Multivector b = random_rot_biv(rng);
    CHECK(max_abs_diff(octa2.apply(b), octa.apply(b) * 2.0) < 1e-12);
  }

  // Symmetric PSD quadratic form for random bodies.
  for (int t = 0; t < 20; ++t) {
    std::vector<PointMass> body;
    for (int i = 0; i < 5; ++i) {
      body.push_back({rng.uniform(0.1, 2.0),
                      point3(rng.uniform(-2, 2), rng.uniform(-2, 2),
                             rng.uniform(-2, 2))});
    }
    const InertiaMap A = InertiaMap::from_point_masses(body);
    const Mat6& qq = A.quadratic_form();
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) CHECK(qq[i][j] == qq[j][i]);
    }
    const SymEigen6 eig = sym_eigen(qq);
    for (double l : eig.values) CHECK(l > -1e-9);
    // apply and apply_inverse are mutually inverse on full-rank bodies.
    if (A.rank() == 6) {
      const Multivector b = random_rot_biv(rng) +
                            bivector_from_coords({rng.uniform(-1, 1), 0.3, 0, 0, 0, 0});
      CHECK(max_abs_diff(A.apply_inverse(A.apply(b)), b) < 1e-9);
    }
  }

  CHECK_THROWS_AS(InertiaMap::from_point_masses({}), std::invalid_argument);
  CHECK_THROWS_AS(InertiaMap::from_point_masses({{0.0, point3(1, 0, 0)}}),
                  std::invalid_argument);
}

TEST_CASE("energy convention matches the classical oracle") {
  const InertiaMap octa = InertiaMap::from_point_masses(octahedral_body());
  CHECK(octa.energy(Multivector::zero(Algebra::pga3())) == 0.0);

  Rng rng(87);
  for (int t = 0; t < 50; ++t) {
    const double rate = rng.uniform(-2, 2);
    // Spin about z at rate w: E = (1/2) I_zz w^2 = (1/2) 4 w^2.
    const Multivector spin = biv_of_omega({0, 0, rate});
    CHECK(octa.energy(spin) == doctest::Approx(2.0 * rate * rate).epsilon(1e-12));

    // General rotational state against (1/2) w^T I w.
    const Multivector b = random_rot_biv(rng);
    const ts::V3 w = omega_of(b);
    const ts::M3 icl = ts::classical_inertia(as_classical(octahedral_body()));
    const ts::V3 iw = ts::m3_apply(icl, w);
    const double classical = 0.5 * (w[0] * iw[0] + w[1] * iw[1] + w[2] * iw[2]);
    CHECK(octa.energy(b) == doctest::Approx(classical).epsilon(1e-12));

    // And for an asymmetric body.
    const InertiaMap asym = InertiaMap::from_point_masses(asymmetric_body());
    const ts::M3 icl2 = ts::classical_inertia(as_classical(asymmetric_body()));
    const ts::V3 iw2 = ts::m3_apply(icl2, w);
    const double classical2 = 0.5 * (w[0] * iw2[0] + w[1] * iw2[1] + w[2] * iw2[2]);
    CHECK(asym.energy(b) == doctest::Approx(classical2).epsilon(1e-12));
  }
}

TEST_CASE("euler derivative") {
  const InertiaMap asym = InertiaMap::from_point_masses(asymmetric_body());

  // Principal-axis spin is stationary; needs a body whose coordinate axes
  // are principal (no products of inertia), with distinct moments.
  const InertiaMap principal = InertiaMap::from_point_masses(
      {{1, point3(1, 0, 0)}, {1, point3(-1, 0, 0)}, {1, point3(0, 1.7, 0)},
       {1, point3(0, -1.7, 0)}, {1, point3(0, 0, 2.9)}, {1, point3(0, 0, -2.9)}});
  for (int axis = 3; axis < 6; ++axis) {
    Vec6 c{};
    c[axis] = 0.8;
    const RigidBodyState s(Motor3::identity(), bivector_from_coords(c));
    CHECK(euler_derivative(s, principal).omega_dot.is_zero(1e-12));
  }

  // At rest nothing moves.
  const RigidBodyState rest(Motor3::identity(), Multivector::zero(Algebra::pga3()));
  CHECK(euler_derivative(rest, asym).pose_dot.is_zero());
  CHECK(euler_derivative(rest, asym).omega_dot.is_zero());

  // Off-axis states follow the classical Euler equations under w = -2c.
  Rng rng(91);
  const ts::M3 icl = ts::classical_inertia(as_classical(asymmetric_body()));
  const ts::M3 icl_inv = ts::m3_inverse(icl);
  for (int t = 0; t < 100; ++t) {
    const Multivector b = random_rot_biv(rng);
    const RigidBodyState s(Motor3::identity(), b);
    const Multivector wd = euler_derivative(s, asym).omega_dot;
    const ts::V3 want = ts::euler_rhs(icl, icl_inv, omega_of(b));
    const ts::V3 got = omega_of(wd);
    for (int i = 0; i < 3; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-10));
    // The rotational flow stays rotational for centered bodies.
    const Vec6 c = bivector_coords(wd);
    CHECK(std::abs(c[0]) < 1e-12);
    CHECK(std::abs(c[1]) < 1e-12);
    CHECK(std::abs(c[2]) < 1e-12);
  }
}

TEST_CASE("rk4 integration") {
  const InertiaMap octa = InertiaMap::from_point_masses(octahedral_body());
  const InertiaMap asym = InertiaMap::from_point_masses(asymmetric_body());

  // Zero velocity: the state is constant.
  RigidBodyState still(Motor3::identity(), Multivector::zero(Algebra::pga3()));
  for (int i = 0; i < 10; ++i) still = step_rk4(still, octa, 1e-2);
  CHECK(max_abs_diff(still.pose.mv(),
                     Multivector::scalar(Algebra::pga3(), 1.0)) < 1e-14);

  // Principal-axis spin matches the closed-form rotor exp(t Omega).
  {
    const Multivector spin = biv_of_omega({0, 0, 1.3});
    RigidBodyState s(Motor3::identity(), spin);
    const double dt = 1e-3;
    const int steps = 10000;
    for (int i = 0; i < steps; ++i) s = step_rk4(s, octa, dt);
    const Motor3 want = exp_bivector(spin * (steps * dt));
    CHECK(max_abs_diff(s.pose.mv(), want.mv()) < 1e-8);
    CHECK(max_abs_diff(s.body_velocity, spin) < 1e-12);
  }

  // Free asymmetric top: conservation over 10^4 steps, exact rotor constraint.
  {
    const RigidBodyState s0(Motor3::identity(),
                            biv_of_omega({0.9, 0.05, 0.4}));
    const Trajectory traj = simulate(s0, asym, 1e-3, 10000);
    const ConservationSummary cs = conservation_summary(traj);
    CHECK(cs.max_energy_drift < 1e-9);
    CHECK(cs.max_momentum_drift < 1e-9);
    CHECK(cs.max_rotor_error < 1e-13);
    CHECK(traj.samples.size() == 10001);
    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
      CHECK(traj.samples[i].t > traj.samples[i - 1].t);
    }
  }

  // Fourth order: halving dt cuts the omega error by about 16.
  {
    const Multivector w0 = biv_of_omega({0.8, 0.1, 0.5});
    auto run = [&](double dt, int steps) {
      RigidBodyState s(Motor3::identity(), w0);
      for (int i = 0; i < steps; ++i) s = step_rk4(s, asym, dt);
      return s;
    };
    const RigidBodyState ref = run(1.0 / 4096.0, 4096);
    const RigidBodyState coarse = run(1.0 / 16.0, 16);
    const RigidBodyState fine = run(1.0 / 32.0, 32);
    const double e_coarse = max_abs_diff(coarse.body_velocity, ref.body_velocity);
    const double e_fine = max_abs_diff(fine.body_velocity, ref.body_velocity);
    CHECK(e_coarse / e_fine > 8.0);
  }

  CHECK_THROWS_AS(step_rk4(still, octa, 0.0), std::invalid_argument);

  // A non-finite state aborts with a diagnostic instead of propagating NaNs.
  const RigidBodyState poisoned(
      Motor3::identity(),
      bivector_from_coords({0, 0, 0, std::nan(""), 0, 0}));
  CHECK_THROWS_AS(step_rk4(poisoned, octa, 1e-3), std::runtime_error);
}

TEST_CASE("bivector flow equals the classical euler flow") {
  const auto body = asymmetric_body();
  const InertiaMap A = InertiaMap::from_point_masses(body);
  const ts::M3 icl = ts::classical_inertia(as_classical(body));
  const ts::M3 icl_inv = ts::m3_inverse(icl);

  const double dt = 1e-3;
  const int steps = 1000;  // unit time
  ts::V3 w = {1.1, -0.3, 0.6};
  RigidBodyState s(Motor3::identity(), biv_of_omega(w));
  for (int i = 0; i < steps; ++i) {
    s = step_rk4(s, A, dt);
    w = ts::euler_rk4_step(icl, icl_inv, w, dt);
  }
  const ts::V3 got = omega_of(s.body_velocity);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(got[i] - w[i]) < 1e-9);
  }
}

TEST_CASE("frame consistency: transported point velocity") {
  const InertiaMap asym = InertiaMap::from_point_masses(asymmetric_body());
  const RigidBodyState s0(Motor3::identity(), biv_of_omega({0.4, 0.9, -0.2}));

  // Advance to a generic pose, then compare the analytic transport rule
  // P_s' = g (2 (Omega x P_c)) g~ with a finite difference of g P_c g~.
  RigidBodyState s = s0;
  for (int i = 0; i < 100; ++i) s = step_rk4(s, asym, 1e-2);

  const Multivector pc = point3(0.7, -0.3, 1.1).mv();
  const double dt = 1e-6;
  const RigidBodyState s2 = step_rk4(s, asym, dt);
  const Multivector ps_before = sandwich(s.pose.mv(), pc);
  const Multivector ps_after = sandwich(s2.pose.mv(), pc);
  const Multivector fd = (ps_after - ps_before) * (1.0 / dt);
  const Multivector analytic =
      sandwich(s.pose.mv(), commutator(s.body_velocity, pc) * 2.0);
  CHECK(max_abs_diff(fd, analytic) < 1e-5);
}
