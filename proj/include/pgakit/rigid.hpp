#pragma once

#include <vector>

#include "pgakit/mat6.hpp"
#include "pgakit/pga3.hpp"

namespace pga {

// Free rigid-body motion in Cl*(3,0,1): the pose is an even-subalgebra rotor
// g with space = g body reverse(g), the velocity state a body-frame bivector.
// The equations of motion are
//   g' = g Omega_c
//   Omega_c' = 2 A^{-1}( A(Omega_c) x Omega_c )
// with x the commutator (ab - ba)/2; momentum in space g A(Omega_c) g~ and
// kinetic energy are then conserved, which is what the conservation suite
// checks.

/// Bivector coordinate order shared by the dynamics and the file formats:
/// (e01, e02, e03, e23, e31, e12), where e31 = -e13.
Vec6 bivector_coords(const Multivector& b);
Multivector bivector_from_coords(const Vec6& c,
                                 const AlgebraPtr& alg = Algebra::pga3());

/// Even-subalgebra coordinate order (1, e01, e02, e03, e23, e31, e12, e0123)
/// used for the g0..g7 trajectory columns.
std::array<double, 8> even_coords(const Multivector& g);
Multivector even_from_coords(const std::array<double, 8>& c,
                             const AlgebraPtr& alg = Algebra::pga3());

/// Pseudoscalar coefficient of a ^ b: pairs moment coordinates with
/// direction coordinates (the se(3) duality pairing).
double klein_pairing(const Multivector& a, const Multivector& b);

struct PointMass {
  double mass;
  Point3 position;
};

/// The inertia map A on bivector space, assembled from point masses by
/// momentum summation: a velocity state Omega moves each particle by
/// P' = 2 (Omega x P), contributing momentum m (P v P').
class InertiaMap {
public:
  static InertiaMap from_point_masses(const std::vector<PointMass>& particles);

  /// Momentum bivector A(Omega).
  Multivector apply(const Multivector& velocity) const;
  /// Velocity from momentum through the pseudo-inverse on the
  /// non-degenerate subspace.
  Multivector apply_inverse(const Multivector& momentum) const;

  /// Kinetic energy (1/2) scale convention pinned by the classical oracle:
  /// quadratic form of the velocity coordinates, equal to sum m |v_i|^2 / 2.
  double energy(const Multivector& velocity) const;

  /// Symmetric positive-semidefinite quadratic form Q with
  /// energy = c^T Q c on bivector coordinates c.
  const Mat6& quadratic_form() const { return quad_; }

  int rank() const { return rank_; }
  bool is_degenerate() const { return rank_ < 6; }
  const AlgebraPtr& algebra() const { return alg_; }

private:
  InertiaMap() : alg_(Algebra::pga3()) {}
  Mat6 polar_{};       // velocity coords -> momentum coords
  Mat6 polar_pinv_{};  // momentum coords -> velocity coords
  Mat6 quad_{};        // symmetric PSD energy form
  int rank_ = 0;
  AlgebraPtr alg_;
};

struct RigidBodyState {
  Motor3 pose;                // body-to-space motion g
  Multivector body_velocity;  // Omega_c, grade 2

  RigidBodyState(Motor3 g, Multivector omega)
      : pose(std::move(g)), body_velocity(std::move(omega)) {}
};

struct EulerDerivative {
  Multivector pose_dot;   // g Omega_c (even grades)
  Multivector omega_dot;  // 2 A^{-1}(A(Omega) x Omega)
};

EulerDerivative euler_derivative(const RigidBodyState& state, const InertiaMap& A);

double energy(const RigidBodyState& state, const InertiaMap& A);
/// Space-frame momentum g A(Omega_c) g~; constant along free motion.
Multivector momentum_space(const RigidBodyState& state, const InertiaMap& A);

/// One classical RK4 step over the 14 coordinates (8 even + 6 bivector),
/// followed by exact rotor renormalization. Throws on non-finite states.
RigidBodyState step_rk4(const RigidBodyState& state, const InertiaMap& A,
                        double dt);

struct TrajectorySample {
  double t;
  RigidBodyState state;
  double energy;
  Multivector momentum;  // space frame
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
};

Trajectory simulate(const RigidBodyState& initial, const InertiaMap& A, double dt,
                    long n_steps);

struct ConservationSummary {
  double max_energy_drift = 0.0;    // relative to max(|E0|, 1)
  double max_momentum_drift = 0.0;  // per coordinate, same normalization
  double max_rotor_error = 0.0;     // | g g~ - 1 | after renormalization
};
ConservationSummary conservation_summary(const Trajectory& traj);

}  // namespace pga
