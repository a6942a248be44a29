#pragma once

#include "pgakit/multivector.hpp"

namespace pga {

// Typed layer over Cl*(2,0,1).
//
// Coordinate conventions (the single source of truth, shared with the
// verification oracle through the accessors below):
//   line a x + b y + c = 0   <->  c e0 + a e1 + b e2
//   point (x, y)             <->  E0 + x E1 + y E2
//   direction (x, y)         <->  x E1 + y E2          (ideal point)
// with E0 = e12, E1 = e20 = -e02, E2 = e01, I = e012.
// A normalized euclidean line squares to +1, a normalized euclidean point
// to -1; normalized euclidean points carry weight +1 on E0.

class Line2;
class Point2;
class Motor2;

namespace detail {
inline constexpr BladeMask kE0 = 0b001;
inline constexpr BladeMask kE1 = 0b010;
inline constexpr BladeMask kE2 = 0b100;
inline constexpr BladeMask kE01 = 0b011;
inline constexpr BladeMask kE02 = 0b101;
inline constexpr BladeMask kE12 = 0b110;
inline constexpr BladeMask kI2 = 0b111;

Multivector restrict_to_grades(const Multivector& mv, unsigned grade_set,
                               const char* what);
}  // namespace detail

class Line2 {
public:
  /// Wraps a grade-1 multivector; off-grade dust is checked and dropped.
  explicit Line2(const Multivector& mv)
      : mv_(detail::restrict_to_grades(mv, 1u << 1, "Line2")) {}

  const Multivector& mv() const { return mv_; }
  double a() const { return mv_[detail::kE1]; }
  double b() const { return mv_[detail::kE2]; }
  double c() const { return mv_[detail::kE0]; }

  bool is_zero(double tol = 0.0) const { return mv_.is_zero(tol); }
  bool is_euclidean(double tol = 1e-12) const { return std::hypot(a(), b()) > tol; }
  bool is_ideal(double tol = 1e-12) const {
    return !is_euclidean(tol) && std::abs(c()) > tol;
  }
  bool is_normalized(double tol = 1e-9) const;

  Line2 normalized() const;

private:
  Multivector mv_;
};

class Point2 {
public:
  explicit Point2(const Multivector& mv)
      : mv_(detail::restrict_to_grades(mv, 1u << 2, "Point2")) {}

  const Multivector& mv() const { return mv_; }
  double weight() const { return mv_[detail::kE12]; }
  double x() const { return -mv_[detail::kE02] / weight(); }
  double y() const { return mv_[detail::kE01] / weight(); }
  /// Direction coordinates of an ideal point (weight ignored).
  double dir_x() const { return -mv_[detail::kE02]; }
  double dir_y() const { return mv_[detail::kE01]; }

  bool is_zero(double tol = 0.0) const { return mv_.is_zero(tol); }
  bool is_euclidean(double tol = 1e-12) const { return std::abs(weight()) > tol; }
  bool is_ideal(double tol = 1e-12) const {
    return !is_euclidean(tol) && ideal_norm(mv_) > tol;
  }
  bool is_normalized(double tol = 1e-9) const;

  /// Euclidean points come out with weight exactly +1.
  Point2 normalized() const;

private:
  Multivector mv_;
};

/// Even-grade versor of Cl*(2,0,1) (scalar + bivector).
class Motor2 {
public:
  explicit Motor2(const Multivector& mv)
      : mv_(detail::restrict_to_grades(mv, (1u << 0) | (1u << 2), "Motor2")) {}

  const Multivector& mv() const { return mv_; }
  double norm_error() const;  // |m reverse(m) - 1|
  Motor2 normalized() const;

  friend Motor2 operator*(const Motor2& a, const Motor2& b) {
    return Motor2(a.mv_ * b.mv_);
  }

private:
  Multivector mv_;
};

Line2 line(double a, double b, double c, const AlgebraPtr& alg = Algebra::pga2());
Point2 point(double x, double y, const AlgebraPtr& alg = Algebra::pga2());
Point2 direction(double x, double y, const AlgebraPtr& alg = Algebra::pga2());

/// a ^ b. Identical lines give the zero point (dependent-arguments outcome).
Point2 meet(const Line2& a, const Line2& b);
/// P v Q. Coincident points give the zero line.
Line2 join(const Point2& p, const Point2& q);

/// Angle of two normalized euclidean lines, in [0, pi].
double angle(const Line2& a, const Line2& b);

double dist(const Point2& p, const Point2& q);
/// Oriented distance: the pseudoscalar weight of a ^ P (signed).
double dist(const Point2& p, const Line2& a);
double dist_parallel(const Line2& a, const Line2& b);

Line2 perp_through(const Point2& p, const Line2& a);   // P . a
Point2 nearest_point(const Point2& p, const Line2& a); // (P . a) a
Line2 parallel_through(const Point2& p, const Line2& a); // (P . a) P

double triangle_area(const Point2& p, const Point2& q, const Point2& r);

Line2 reflect(const Line2& mirror, const Line2& x);
Point2 reflect(const Line2& mirror, const Point2& x);

/// cos(alpha/2) + sin(alpha/2) center: rotation by alpha about the center.
Motor2 rotor(const Point2& center, double alpha);
/// 1 + (d/2) dir: translation by d perpendicular to the unit direction dir
/// (concretely (x,y) -> (x,y) + d*(dir_y, -dir_x); pinned by regression test).
Motor2 translator(const Point2& dir, double d);
/// Closed-form exponential of a bivector (arbitrated by exp_series).
Motor2 exp_bivector2(const Multivector& bivector);
/// The motor of "reflect in a, then in b".
Motor2 motor_from_reflections(const Line2& a, const Line2& b);

Point2 apply(const Motor2& m, const Point2& x);
Line2 apply(const Motor2& m, const Line2& x);

double ideal_norm(const Line2& a);
double ideal_norm(const Point2& p);

}  // namespace pga
