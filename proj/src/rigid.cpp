#include "pgakit/rigid.hpp"

#include <cmath>
#include <stdexcept>

namespace pga {

using namespace detail3;

namespace {

constexpr std::array<BladeMask, 6> kBivBlades = {kE01, kE02, kE03, kE23, kE13, kE12};
constexpr std::array<double, 6> kBivSigns = {1, 1, 1, 1, -1, 1};  // e31 = -e13

// Klein pairing swaps the moment and direction blocks.
constexpr int kSwap[6] = {3, 4, 5, 0, 1, 2};

void check_biv(const Multivector& b, const char* what) {
  double scale = 0.0;
  for (BladeMask m = 0; m < b.size(); ++m) scale = std::max(scale, std::abs(b[m]));
  for (BladeMask m = 0; m < b.size(); ++m) {
    if (Algebra::grade(m) != 2 && std::abs(b[m]) > 1e-9 * std::max(scale, 1.0)) {
      throw std::invalid_argument(std::string(what) + ": expected a bivector");
    }
  }
}

}  // namespace

Vec6 bivector_coords(const Multivector& b) {
  Vec6 c{};
  for (int i = 0; i < 6; ++i) c[i] = kBivSigns[i] * b[kBivBlades[i]];
  return c;
}

Multivector bivector_from_coords(const Vec6& c, const AlgebraPtr& alg) {
  Multivector b(alg);
  for (int i = 0; i < 6; ++i) b.set(kBivBlades[i], kBivSigns[i] * c[i]);
  return b;
}

std::array<double, 8> even_coords(const Multivector& g) {
  const Vec6 b = bivector_coords(g);
  return {g[0], b[0], b[1], b[2], b[3], b[4], b[5], g[kI3]};
}

Multivector even_from_coords(const std::array<double, 8>& c, const AlgebraPtr& alg) {
  Multivector g = bivector_from_coords({c[1], c[2], c[3], c[4], c[5], c[6]}, alg);
  g.set(0, c[0]);
  g.set(kI3, c[7]);
  return g;
}

double klein_pairing(const Multivector& a, const Multivector& b) {
  return outer_product(a, b)[a.algebra()->pseudoscalar()];
}

InertiaMap InertiaMap::from_point_masses(const std::vector<PointMass>& particles) {
  if (particles.empty()) {
    throw std::invalid_argument("InertiaMap: no particles");
  }
  double total = 0.0;
  for (const auto& p : particles) {
    if (p.mass < 0.0) throw std::invalid_argument("InertiaMap: negative mass");
    total += p.mass;
  }
  if (!(total > 0.0)) throw std::invalid_argument("InertiaMap: zero total mass");

  InertiaMap out;
  out.alg_ = particles.front().position.mv().algebra();

  for (int j = 0; j < 6; ++j) {
    Vec6 unit{};
    unit[j] = 1.0;
    const Multivector basis = bivector_from_coords(unit, out.alg_);
    Multivector momentum = Multivector::zero(out.alg_);
    for (const auto& p : particles) {
      const Multivector vel = commutator(basis, p.position.mv()) * 2.0;
      momentum += regressive_product(p.position.mv(), vel) * p.mass;
    }
    const Vec6 col = bivector_coords(momentum);
    for (int i = 0; i < 6; ++i) out.polar_[i][j] = col[i];
  }

  // Energy form Q = -Delta polar, symmetrized exactly; then the polar map is
  // rebuilt from Q so the two views cannot drift apart.
  Mat6 q{};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) q[i][j] = -out.polar_[kSwap[i]][j];
  }
  for (int i = 0; i < 6; ++i) {
    for (int j = i; j < 6; ++j) {
      const double s = 0.5 * (q[i][j] + q[j][i]);
      q[i][j] = s;
      q[j][i] = s;
    }
  }
  out.quad_ = q;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) out.polar_[i][j] = -q[kSwap[i]][j];
  }

  const Mat6 qinv = sym_pseudo_inverse(q);
  // A^{-1} = -Q^+ Delta.
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) out.polar_pinv_[i][j] = -qinv[i][kSwap[j]];
  }
  out.rank_ = sym_rank(q);
  return out;
}

Multivector InertiaMap::apply(const Multivector& velocity) const {
  check_biv(velocity, "InertiaMap::apply");
  return bivector_from_coords(mat6_apply(polar_, bivector_coords(velocity)), alg_);
}

Multivector InertiaMap::apply_inverse(const Multivector& momentum) const {
  check_biv(momentum, "InertiaMap::apply_inverse");
  return bivector_from_coords(mat6_apply(polar_pinv_, bivector_coords(momentum)),
                              alg_);
}

double InertiaMap::energy(const Multivector& velocity) const {
  const Vec6 c = bivector_coords(velocity);
  const Vec6 qc = mat6_apply(quad_, c);
  double e = 0.0;
  for (int i = 0; i < 6; ++i) e += c[i] * qc[i];
  return e;
}

EulerDerivative euler_derivative(const RigidBodyState& state, const InertiaMap& A) {
  const Multivector& w = state.body_velocity;
  const Multivector momentum = A.apply(w);
  const Multivector bracket2 =
      geometric_product(momentum, w) - geometric_product(w, momentum);
  return {geometric_product(state.pose.mv(), w), A.apply_inverse(bracket2)};
}

double energy(const RigidBodyState& state, const InertiaMap& A) {
  return A.energy(state.body_velocity);
}

Multivector momentum_space(const RigidBodyState& state, const InertiaMap& A) {
  // The sandwich preserves grade; projecting drops rounding dust on 0 and 4.
  return grade_part(sandwich(state.pose.mv(), A.apply(state.body_velocity)), 2);
}

RigidBodyState step_rk4(const RigidBodyState& state, const InertiaMap& A,
                        double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_rk4: dt must be positive");
  const Multivector& g = state.pose.mv();
  const Multivector& w = state.body_velocity;

  auto f = [&](const Multivector& gc, const Multivector& wc) {
    return euler_derivative(RigidBodyState(Motor3(gc), wc), A);
  };

  const EulerDerivative k1 = f(g, w);
  const EulerDerivative k2 =
      f(g + k1.pose_dot * (dt / 2), w + k1.omega_dot * (dt / 2));
  const EulerDerivative k3 =
      f(g + k2.pose_dot * (dt / 2), w + k2.omega_dot * (dt / 2));
  const EulerDerivative k4 = f(g + k3.pose_dot * dt, w + k3.omega_dot * dt);

  const Multivector g_new =
      g + (k1.pose_dot + (k2.pose_dot + k3.pose_dot) * 2.0 + k4.pose_dot) *
              (dt / 6.0);
  const Multivector w_new =
      w + (k1.omega_dot + (k2.omega_dot + k3.omega_dot) * 2.0 + k4.omega_dot) *
              (dt / 6.0);

  for (BladeMask m = 0; m < g_new.size(); ++m) {
    if (!std::isfinite(g_new[m]) || !std::isfinite(w_new[m])) {
      throw std::runtime_error("step_rk4: state diverged (non-finite values)");
    }
  }
  return RigidBodyState(Motor3(g_new).normalized(), w_new);
}

Trajectory simulate(const RigidBodyState& initial, const InertiaMap& A, double dt,
                    long n_steps) {
  if (!(dt > 0.0)) throw std::invalid_argument("simulate: dt must be positive");
  if (n_steps < 0) throw std::invalid_argument("simulate: negative step count");

  Trajectory traj;
  traj.samples.reserve(static_cast<std::size_t>(n_steps) + 1);
  RigidBodyState state = initial;
  traj.samples.push_back(
      {0.0, state, pga::energy(state, A), momentum_space(state, A)});
  for (long k = 1; k <= n_steps; ++k) {
    state = step_rk4(state, A, dt);
    traj.samples.push_back({static_cast<double>(k) * dt, state,
                            pga::energy(state, A), momentum_space(state, A)});
  }
  return traj;
}

ConservationSummary conservation_summary(const Trajectory& traj) {
  ConservationSummary out;
  if (traj.samples.empty()) return out;
  const double e0 = traj.samples.front().energy;
  const Vec6 m0 = bivector_coords(traj.samples.front().momentum);
  const double escale = std::max(std::abs(e0), 1.0);
  double mscale = 1.0;
  for (double v : m0) mscale = std::max(mscale, std::abs(v));

  for (const auto& s : traj.samples) {
    out.max_energy_drift =
        std::max(out.max_energy_drift, std::abs(s.energy - e0) / escale);
    const Vec6 m = bivector_coords(s.momentum);
    for (int i = 0; i < 6; ++i) {
      out.max_momentum_drift =
          std::max(out.max_momentum_drift, std::abs(m[i] - m0[i]) / mscale);
    }
    out.max_rotor_error = std::max(out.max_rotor_error, s.state.pose.norm_error());
  }
  return out;
}

}  // namespace pga
