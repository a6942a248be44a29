#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pgakit/multivector.hpp"

namespace pga {

// Typed layer over Cl*(3,0,1).
//
// Coordinate conventions (single source of truth, shared with the oracle
// through the accessors):
//   plane a x + b y + c z + d = 0  <->  d e0 + a e1 + b e2 + c e3
//   point (x, y, z)                <->  e123 - x e023 + y e013 - z e012
//   direction (x, y, z)            <->      - x e023 + y e013 - z e012
//   line (Plucker dir u, moment p x u)
//        u = (c(e23), -c(e13), c(e12)),  moment = (c(e01), c(e02), c(e03))
// so (e23, e31, e12) are the lines through the origin along x, y, z, and
// the join of two weight-1 points carries Plucker weight |q - p|.
// Normalized euclidean planes square to +1, lines and points to -1.

namespace detail3 {
inline constexpr BladeMask kE0 = 0b0001, kE1 = 0b0010, kE2 = 0b0100, kE3 = 0b1000;
inline constexpr BladeMask kE01 = 0b0011, kE02 = 0b0101, kE03 = 0b1001;
inline constexpr BladeMask kE12 = 0b0110, kE13 = 0b1010, kE23 = 0b1100;
inline constexpr BladeMask kE012 = 0b0111, kE013 = 0b1011, kE023 = 0b1101;
inline constexpr BladeMask kE123 = 0b1110;
inline constexpr BladeMask kI3 = 0b1111;
}  // namespace detail3

class Plane {
public:
  explicit Plane(const Multivector& mv);
  const Multivector& mv() const { return mv_; }
  double a() const { return mv_[detail3::kE1]; }
  double b() const { return mv_[detail3::kE2]; }
  double c() const { return mv_[detail3::kE3]; }
  double d() const { return mv_[detail3::kE0]; }

  bool is_zero(double tol = 0.0) const { return mv_.is_zero(tol); }
  bool is_euclidean(double tol = 1e-12) const;
  Plane normalized() const;
  bool is_normalized(double tol = 1e-9) const;

private:
  Multivector mv_;
};

class Line3 {
public:
  explicit Line3(const Multivector& mv);
  const Multivector& mv() const { return mv_; }

  /// Plucker direction (x, y, z).
  std::array<double, 3> dir() const {
    return {mv_[detail3::kE23], -mv_[detail3::kE13], mv_[detail3::kE12]};
  }
  /// Plucker moment (coefficients of e01, e02, e03).
  std::array<double, 3> moment() const {
    return {mv_[detail3::kE01], mv_[detail3::kE02], mv_[detail3::kE03]};
  }

  bool is_zero(double tol = 0.0) const { return mv_.is_zero(tol); }
  bool is_euclidean(double tol = 1e-12) const;
  bool is_ideal(double tol = 1e-12) const;
  /// Plucker condition |l ^ l| <= tol * |l|^2: the bivector factors as a line.
  bool is_simple(double tol = 1e-10) const;
  Line3 normalized() const;
  bool is_normalized(double tol = 1e-9) const;

private:
  Multivector mv_;
};

class Point3 {
public:
  explicit Point3(const Multivector& mv);
  const Multivector& mv() const { return mv_; }
  double weight() const { return mv_[detail3::kE123]; }
  double x() const { return -mv_[detail3::kE023] / weight(); }
  double y() const { return mv_[detail3::kE013] / weight(); }
  double z() const { return -mv_[detail3::kE012] / weight(); }
  double dir_x() const { return -mv_[detail3::kE023]; }
  double dir_y() const { return mv_[detail3::kE013]; }
  double dir_z() const { return -mv_[detail3::kE012]; }

  bool is_zero(double tol = 0.0) const { return mv_.is_zero(tol); }
  bool is_euclidean(double tol = 1e-12) const { return std::abs(weight()) > tol; }
  bool is_ideal(double tol = 1e-12) const;
  Point3 normalized() const;
  bool is_normalized(double tol = 1e-9) const;

private:
  Multivector mv_;
};

/// Even-grade versor of Cl*(3,0,1) (grades 0, 2, 4).
class Motor3 {
public:
  explicit Motor3(const Multivector& mv);
  static Motor3 identity(const AlgebraPtr& alg = Algebra::pga3());
  const Multivector& mv() const { return mv_; }

  /// max-abs deviation of m reverse(m) from 1 (scalar and pseudoscalar parts).
  double norm_error() const;
  /// Exact renormalization m / sqrt(m reverse(m)) in the dual-number sense;
  /// afterwards m reverse(m) = 1 to rounding, including the pseudoscalar part.
  Motor3 normalized() const;

  friend Motor3 operator*(const Motor3& a, const Motor3& b) {
    return Motor3(geometric_product(a.mv_, b.mv_));
  }

private:
  Multivector mv_;
};

Plane plane(double a, double b, double c, double d,
            const AlgebraPtr& alg = Algebra::pga3());
Point3 point3(double x, double y, double z, const AlgebraPtr& alg = Algebra::pga3());
Point3 direction3(double x, double y, double z,
                  const AlgebraPtr& alg = Algebra::pga3());

/// P v Q; also line through a point and an ideal direction.
Line3 line_through(const Point3& p, const Point3& q);
/// a ^ b.
Line3 line_meet(const Plane& a, const Plane& b);

/// Orthogonal complement X (-I); the polarity sign is fixed so that screws
/// and translators advance along +axis (see the screw regression tests).
Multivector polar(const Multivector& x);

// --- Formulas of the 3D construction table -------------------------------

Point3 meet3(const Plane& a, const Plane& b, const Plane& c);   // a ^ b ^ c
Plane join3(const Point3& p, const Point3& q, const Point3& r); // P v Q v R

double angle(const Plane& a, const Plane& b);
/// Angle between an ideal direction and a plane: asin |a ^ V|_inf.
double angle_to_plane(const Point3& dir, const Plane& a);
double dist(const Point3& p, const Point3& q);
/// Oriented distance: pseudoscalar weight of a ^ P.
double dist(const Point3& p, const Plane& a);
double dist_parallel(const Plane& a, const Plane& b);

Line3 perp_line(const Point3& p, const Plane& a);        // P . a
Point3 nearest_point(const Point3& p, const Plane& a);   // (P . a) a
Plane parallel_plane(const Point3& p, const Plane& a);   // (P . a) P
Plane perp_plane(const Line3& l, const Plane& a);        // O . a
Point3 meet_line_plane(const Line3& l, const Plane& a);  // O ^ a
Plane join_point_line(const Point3& p, const Line3& l);  // P v O
Plane perp_plane(const Point3& p, const Line3& l);       // P . O
Point3 nearest_point(const Point3& p, const Line3& l);   // (P . O) O
Line3 parallel_line(const Point3& p, const Line3& l);    // (P . O) P
Line3 perp_line(const Point3& p, const Line3& l);        // ((P . O) O) v P
double tetra_volume(const Point3& a, const Point3& b, const Point3& c,
                    const Point3& d);
/// The ideal line <PQ>_2, perpendicular complement of the join.
Line3 perp_direction_join(const Point3& p, const Point3& q);
/// The worked construction of the paper's first example:
/// ((Pi . P) ^ Pi) v P, the line through P meeting Pi orthogonally.
Line3 perp_line_through_point_to_line(const Point3& p, const Line3& pi);

Plane reflect3(const Plane& mirror, const Plane& x);
Line3 reflect3(const Plane& mirror, const Line3& x);
Point3 reflect3(const Plane& mirror, const Point3& x);
Multivector reflect3(const Plane& mirror, const Multivector& x);

// --- Bivector exponential / logarithm ------------------------------------

struct ScrewDecomposition {
  Line3 axis;       // normalized euclidean axis (ideal line when translation)
  double alpha = 0; // rotation coefficient
  double beta = 0;  // translation coefficient (on axis * I)
  bool pure_translation = false;

  /// (alpha + beta I) axis, or beta axis in the ideal case.
  Multivector recompose() const;
};

/// Split B = (alpha + beta I) * axis with axis^2 = -1; ideal bivectors are
/// flagged as pure translation generators.
ScrewDecomposition split_bivector(const Multivector& bivector);

/// Closed-form exponential of a bivector; agrees with exp_series.
Motor3 exp_bivector(const Multivector& bivector);
/// Principal-branch logarithm (rotation magnitude in [0, pi)); exact right
/// inverse of exp_bivector there. Throws on -1 and on non-normalized motors.
Multivector log_motor(const Motor3& m);

/// exp((angle/2) (axis + pitch * polar(axis))): rotation by `angle` about the
/// axis, advancing pitch * angle along it.
Motor3 motor_from_screw(const Line3& axis, double angle, double pitch);
Motor3 rotor3(const Line3& axis, double angle);
/// Translation by d along the unit ideal direction V, built from the
/// construction-table form 1 + (d/2) polar(E0 v V).
Motor3 translator3(const Point3& dir, double d);

Point3 apply(const Motor3& m, const Point3& x);
Line3 apply(const Motor3& m, const Line3& x);
Plane apply(const Motor3& m, const Plane& x);
Multivector apply(const Motor3& m, const Multivector& x);

// --- Product of two lines (screw invariants) ------------------------------

struct LineProduct {
  double cos_alpha = 0;     // <OS>_0
  Multivector grade2;       // <OS>_2
  double d_sin_alpha = 0;   // pseudoscalar weight <OS>_4
  double alpha = 0;         // angle between oriented directions, in [0, pi]
  double d = 0;             // signed offset along the common normal; |d| is
                            // the closest-approach distance
  bool parallel = false;
  std::optional<Line3> common_normal;  // unset for parallel pencils

  LineProduct() : grade2(Algebra::pga3()) {}
};

/// Graded decomposition of the product of two normalized euclidean simple
/// lines. Throws on identical lines; parallel distinct lines come back with
/// parallel=true and no common normal (degenerate pencil).
LineProduct product_of_lines(const Line3& a, const Line3& b);

// --- Kaleidoscope ----------------------------------------------------------

struct KaleidoscopeOrbit {
  std::vector<Multivector> versors;  // sign-canonicalized, deduplicated
  std::vector<Multivector> images;   // sandwich of each versor applied to x
};

/// All alternating products of reflections in two normalized planes, applied
/// to x. Stops at max_elements if the group does not close.
KaleidoscopeOrbit kaleidoscope_orbit(const Plane& a, const Plane& b,
                                     const Multivector& x,
                                     std::size_t max_elements = 256);

/// Versor with sign flipped so its largest-magnitude coefficient is positive
/// (+-v describe the same isometry).
Multivector canonical_versor(const Multivector& v);

/// max-abs deviation of canonical_versor((ab)^k) from the scalar 1.
double closure_error(const Plane& a, const Plane& b, int k);

// --- Dual quaternions ------------------------------------------------------

/// Components ordered (1, i, j, k, eps, eps i, eps j, eps k);
/// i = -e23, j = -e31, k = -e12, eps = e0123.
std::array<double, 8> to_dual_quaternion(const Motor3& m);
Motor3 from_dual_quaternion(const std::array<double, 8>& q,
                            const AlgebraPtr& alg = Algebra::pga3());

double ideal_norm(const Plane& a);
double ideal_norm(const Line3& l);
double ideal_norm(const Point3& p);

}  // namespace pga
