#include "pgakit/pga2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pga {

namespace detail {

Multivector restrict_to_grades(const Multivector& mv, unsigned grade_set,
                               const char* what) {
  double scale = 0.0;
  for (BladeMask b = 0; b < mv.size(); ++b) scale = std::max(scale, std::abs(mv[b]));
  Multivector out(mv.algebra());
  for (BladeMask b = 0; b < mv.size(); ++b) {
    const int g = Algebra::grade(b);
    if (grade_set & (1u << g)) {
      out.set(b, mv[b]);
    } else if (std::abs(mv[b]) > 1e-9 * std::max(scale, 1.0)) {
      throw std::invalid_argument(std::string(what) +
                                  ": multivector has parts outside the expected grades");
    }
  }
  return out;
}

}  // namespace detail

namespace {

using detail::kE0;
using detail::kE01;
using detail::kE02;
using detail::kE1;
using detail::kE12;
using detail::kE2;
using detail::kI2;

void expect_unit_euclidean_line(const Line2& a, const char* what) {
  const double sq = geometric_product(a.mv(), a.mv()).scalar_part();
  if (std::abs(sq - 1.0) > 1e-6) {
    throw std::invalid_argument(std::string(what) +
                                ": expects a normalized euclidean line (a^2 = 1)");
  }
}

void expect_unit_euclidean_point(const Point2& p, const char* what) {
  const double sq = geometric_product(p.mv(), p.mv()).scalar_part();
  if (std::abs(sq + 1.0) > 1e-6) {
    throw std::invalid_argument(std::string(what) +
                                ": expects a normalized euclidean point (P^2 = -1)");
  }
}

}  // namespace

bool Line2::is_normalized(double tol) const {
  return std::abs(geometric_product(mv_, mv_).scalar_part() - 1.0) <= tol;
}

Line2 Line2::normalized() const {
  if (is_euclidean()) {
    return Line2(mv_ * (1.0 / std::hypot(a(), b())));
  }
  const double n = pga::ideal_norm(mv_);
  if (n == 0.0) throw std::domain_error("Line2::normalized: zero line");
  return Line2(mv_ * (1.0 / n));
}

bool Point2::is_normalized(double tol) const {
  return std::abs(geometric_product(mv_, mv_).scalar_part() + 1.0) <= tol &&
         weight() > 0.0;
}

Point2 Point2::normalized() const {
  if (is_euclidean()) {
    return Point2(mv_ * (1.0 / weight()));
  }
  const double n = pga::ideal_norm(mv_);
  if (n == 0.0) throw std::domain_error("Point2::normalized: zero point");
  return Point2(mv_ * (1.0 / n));
}

double Motor2::norm_error() const {
  Multivector r = geometric_product(mv_, reverse(mv_));
  r.set(0, r[0] - 1.0);
  return max_abs_diff(r, Multivector::zero(mv_.algebra()));
}

Motor2 Motor2::normalized() const {
  const double n = std::sqrt(geometric_product(mv_, reverse(mv_)).scalar_part());
  if (!(n > 0.0)) throw std::domain_error("Motor2::normalized: null motor");
  return Motor2(mv_ * (1.0 / n));
}

Line2 line(double a, double b, double c, const AlgebraPtr& alg) {
  if (a == 0.0 && b == 0.0 && c == 0.0) {
    throw std::invalid_argument("line: all coefficients are zero");
  }
  Multivector mv(alg);
  mv.set(kE0, c);
  mv.set(kE1, a);
  mv.set(kE2, b);
  return Line2(mv);
}

Point2 point(double x, double y, const AlgebraPtr& alg) {
  Multivector mv(alg);
  mv.set(kE12, 1.0);
  mv.set(kE02, -x);
  mv.set(kE01, y);
  return Point2(mv);
}

Point2 direction(double x, double y, const AlgebraPtr& alg) {
  if (x == 0.0 && y == 0.0) {
    throw std::invalid_argument("direction: zero direction");
  }
  Multivector mv(alg);
  mv.set(kE02, -x);
  mv.set(kE01, y);
  return Point2(mv);
}

Point2 meet(const Line2& a, const Line2& b) {
  return Point2(outer_product(a.mv(), b.mv()));
}

Line2 join(const Point2& p, const Point2& q) {
  return Line2(regressive_product(p.mv(), q.mv()));
}

double angle(const Line2& a, const Line2& b) {
  expect_unit_euclidean_line(a, "angle");
  expect_unit_euclidean_line(b, "angle");
  const double c = inner_product(a.mv(), b.mv()).scalar_part();
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double dist(const Point2& p, const Point2& q) {
  expect_unit_euclidean_point(p, "dist");
  expect_unit_euclidean_point(q, "dist");
  return norm(regressive_product(p.mv(), q.mv()));
}

double dist(const Point2& p, const Line2& a) {
  expect_unit_euclidean_point(p, "dist");
  expect_unit_euclidean_line(a, "dist");
  return outer_product(a.mv(), p.mv())[kI2];
}

double dist_parallel(const Line2& a, const Line2& b) {
  expect_unit_euclidean_line(a, "dist_parallel");
  expect_unit_euclidean_line(b, "dist_parallel");
  const Multivector w = outer_product(a.mv(), b.mv());
  if (std::abs(w[kE12]) > 1e-9) {
    throw std::invalid_argument("dist_parallel: lines are not parallel");
  }
  return pga::ideal_norm(w);
}

Line2 perp_through(const Point2& p, const Line2& a) {
  expect_unit_euclidean_point(p, "perp_through");
  expect_unit_euclidean_line(a, "perp_through");
  return Line2(inner_product(p.mv(), a.mv()));
}

Point2 nearest_point(const Point2& p, const Line2& a) {
  expect_unit_euclidean_point(p, "nearest_point");
  expect_unit_euclidean_line(a, "nearest_point");
  return Point2(geometric_product(inner_product(p.mv(), a.mv()), a.mv()));
}

Line2 parallel_through(const Point2& p, const Line2& a) {
  expect_unit_euclidean_point(p, "parallel_through");
  expect_unit_euclidean_line(a, "parallel_through");
  return Line2(geometric_product(inner_product(p.mv(), a.mv()), p.mv()));
}

double triangle_area(const Point2& p, const Point2& q, const Point2& r) {
  expect_unit_euclidean_point(p, "triangle_area");
  expect_unit_euclidean_point(q, "triangle_area");
  expect_unit_euclidean_point(r, "triangle_area");
  const Multivector j =
      regressive_product(regressive_product(p.mv(), q.mv()), r.mv());
  return 0.5 * std::abs(j.scalar_part());
}

Line2 reflect(const Line2& mirror, const Line2& x) {
  expect_unit_euclidean_line(mirror, "reflect");
  return Line2(sandwich(mirror.mv(), x.mv()));
}

Point2 reflect(const Line2& mirror, const Point2& x) {
  expect_unit_euclidean_line(mirror, "reflect");
  return Point2(sandwich(mirror.mv(), x.mv()));
}

Motor2 rotor(const Point2& center, double alpha) {
  expect_unit_euclidean_point(center, "rotor");
  return Motor2(Multivector::scalar(center.mv().algebra(), std::cos(alpha / 2)) +
                center.mv() * std::sin(alpha / 2));
}

Motor2 translator(const Point2& dir, double d) {
  if (std::abs(dir.weight()) > 1e-9 || std::abs(pga::ideal_norm(dir.mv()) - 1.0) > 1e-6) {
    throw std::invalid_argument("translator: expects a unit ideal direction");
  }
  return Motor2(Multivector::scalar(dir.mv().algebra(), 1.0) + dir.mv() * (d / 2));
}

Motor2 exp_bivector2(const Multivector& bivector) {
  const Multivector b = detail::restrict_to_grades(bivector, 1u << 2, "exp_bivector2");
  const double theta = std::abs(b[kE12]);
  double sinc;
  if (theta < 1e-6) {
    sinc = 1.0 - theta * theta / 6.0;
  } else {
    sinc = std::sin(theta) / theta;
  }
  return Motor2(Multivector::scalar(b.algebra(), std::cos(theta)) + b * sinc);
}

Motor2 motor_from_reflections(const Line2& a, const Line2& b) {
  expect_unit_euclidean_line(a, "motor_from_reflections");
  expect_unit_euclidean_line(b, "motor_from_reflections");
  return Motor2(geometric_product(a.mv(), b.mv()));
}

Point2 apply(const Motor2& m, const Point2& x) {
  return Point2(sandwich(reverse(m.mv()), x.mv()));
}

Line2 apply(const Motor2& m, const Line2& x) {
  return Line2(sandwich(reverse(m.mv()), x.mv()));
}

double ideal_norm(const Line2& a) { return pga::ideal_norm(a.mv()); }
double ideal_norm(const Point2& p) { return pga::ideal_norm(p.mv()); }

}  // namespace pga
