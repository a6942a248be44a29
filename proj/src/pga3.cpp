#include "pgakit/pga3.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pgakit/pga2.hpp"  // detail::restrict_to_grades

namespace pga {

using namespace detail3;

namespace {

Multivector restrict3(const Multivector& mv, unsigned grade_set, const char* what) {
  return detail::restrict_to_grades(mv, grade_set, what);
}

void expect_unit_plane(const Plane& a, const char* what) {
  const double sq = geometric_product(a.mv(), a.mv()).scalar_part();
  if (std::abs(sq - 1.0) > 1e-6) {
    throw std::invalid_argument(std::string(what) +
                                ": expects a normalized euclidean plane (a^2 = 1)");
  }
}

void expect_unit_point(const Point3& p, const char* what) {
  const double sq = geometric_product(p.mv(), p.mv()).scalar_part();
  if (std::abs(sq + 1.0) > 1e-6) {
    throw std::invalid_argument(std::string(what) +
                                ": expects a normalized euclidean point (P^2 = -1)");
  }
}

void expect_unit_line(const Line3& l, const char* what) {
  const double sq = geometric_product(l.mv(), l.mv()).scalar_part();
  if (std::abs(sq + 1.0) > 1e-6) {
    throw std::invalid_argument(std::string(what) +
                                ": expects a normalized euclidean line (O^2 = -1)");
  }
}

Multivector scalar3(const AlgebraPtr& alg, double s) {
  return Multivector::scalar(alg, s);
}

/// a + b I as a multivector (central in the even subalgebra, I^2 = 0).
Multivector dual_scalar_mv(const AlgebraPtr& alg, double a, double b) {
  Multivector out(alg);
  out.set(0, a);
  out.set(kI3, b);
  return out;
}

}  // namespace

// --- type wrappers ----------------------------------------------------------

Plane::Plane(const Multivector& mv) : mv_(restrict3(mv, 1u << 1, "Plane")) {}

bool Plane::is_euclidean(double tol) const {
  return std::sqrt(a() * a() + b() * b() + c() * c()) > tol;
}

Plane Plane::normalized() const {
  const double n = std::sqrt(a() * a() + b() * b() + c() * c());
  if (n > 0.0) return Plane(mv_ * (1.0 / n));
  const double ni = std::abs(d());
  if (ni == 0.0) throw std::domain_error("Plane::normalized: zero plane");
  return Plane(mv_ * (1.0 / ni));
}

bool Plane::is_normalized(double tol) const {
  return std::abs(geometric_product(mv_, mv_).scalar_part() - 1.0) <= tol;
}

Line3::Line3(const Multivector& mv) : mv_(restrict3(mv, 1u << 2, "Line3")) {}

bool Line3::is_euclidean(double tol) const {
  const auto u = dir();
  return std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]) > tol;
}

bool Line3::is_ideal(double tol) const {
  return !is_euclidean(tol) && pga::ideal_norm(mv_) > tol;
}

bool Line3::is_simple(double tol) const {
  const double w = std::abs(outer_product(mv_, mv_)[kI3]);
  double norm2 = 0.0;
  for (BladeMask b = 0; b < mv_.size(); ++b) norm2 += mv_[b] * mv_[b];
  return w <= tol * std::max(norm2, 1e-300);
}

Line3 Line3::normalized() const {
  const double n = norm(mv_);
  if (n > 1e-12) return Line3(mv_ * (1.0 / n));
  const double ni = pga::ideal_norm(mv_);
  if (ni == 0.0) throw std::domain_error("Line3::normalized: zero line");
  return Line3(mv_ * (1.0 / ni));
}

bool Line3::is_normalized(double tol) const {
  return std::abs(geometric_product(mv_, mv_).scalar_part() + 1.0) <= tol;
}

Point3::Point3(const Multivector& mv) : mv_(restrict3(mv, 1u << 3, "Point3")) {}

bool Point3::is_ideal(double tol) const {
  return !is_euclidean(tol) && pga::ideal_norm(mv_) > tol;
}

Point3 Point3::normalized() const {
  if (is_euclidean()) return Point3(mv_ * (1.0 / weight()));
  const double n = pga::ideal_norm(mv_);
  if (n == 0.0) throw std::domain_error("Point3::normalized: zero point");
  return Point3(mv_ * (1.0 / n));
}

bool Point3::is_normalized(double tol) const {
  return std::abs(geometric_product(mv_, mv_).scalar_part() + 1.0) <= tol &&
         weight() > 0.0;
}

Motor3::Motor3(const Multivector& mv)
    : mv_(restrict3(mv, (1u << 0) | (1u << 2) | (1u << 4), "Motor3")) {}

Motor3 Motor3::identity(const AlgebraPtr& alg) { return Motor3(scalar3(alg, 1.0)); }

double Motor3::norm_error() const {
  Multivector r = geometric_product(mv_, reverse(mv_));
  r.set(0, r[0] - 1.0);
  return max_abs_diff(r, Multivector::zero(mv_.algebra()));
}

Motor3 Motor3::normalized() const {
  const Multivector r = geometric_product(mv_, reverse(mv_));
  const double n0 = r.scalar_part();
  if (!(n0 > 0.0)) throw std::domain_error("Motor3::normalized: null motor");
  const double n4 = r[kI3];
  const double s = std::sqrt(n0);
  // m (1/sqrt(n0 + n4 I)) with the dual-number square root.
  const Multivector corr = dual_scalar_mv(mv_.algebra(), 1.0 / s, -n4 / (2.0 * n0 * s));
  return Motor3(geometric_product(mv_, corr));
}

// --- constructors -----------------------------------------------------------

Plane plane(double a, double b, double c, double d, const AlgebraPtr& alg) {
  if (a == 0.0 && b == 0.0 && c == 0.0 && d == 0.0) {
    throw std::invalid_argument("plane: all coefficients are zero");
  }
  Multivector mv(alg);
  mv.set(kE0, d);
  mv.set(kE1, a);
  mv.set(kE2, b);
  mv.set(kE3, c);
  return Plane(mv);
}

Point3 point3(double x, double y, double z, const AlgebraPtr& alg) {
  Multivector mv(alg);
  mv.set(kE123, 1.0);
  mv.set(kE023, -x);
  mv.set(kE013, y);
  mv.set(kE012, -z);
  return Point3(mv);
}

Point3 direction3(double x, double y, double z, const AlgebraPtr& alg) {
  if (x == 0.0 && y == 0.0 && z == 0.0) {
    throw std::invalid_argument("direction3: zero direction");
  }
  Multivector mv(alg);
  mv.set(kE023, -x);
  mv.set(kE013, y);
  mv.set(kE012, -z);
  return Point3(mv);
}

Line3 line_through(const Point3& p, const Point3& q) {
  return Line3(regressive_product(p.mv(), q.mv()));
}

Line3 line_meet(const Plane& a, const Plane& b) {
  return Line3(outer_product(a.mv(), b.mv()));
}

Multivector polar(const Multivector& x) {
  return geometric_product(x, Multivector::blade(x.algebra(), x.algebra()->pseudoscalar(), -1.0));
}

// --- construction-table formulas -------------------------------------------

Point3 meet3(const Plane& a, const Plane& b, const Plane& c) {
  return Point3(outer_product(outer_product(a.mv(), b.mv()), c.mv()));
}

Plane join3(const Point3& p, const Point3& q, const Point3& r) {
  return Plane(regressive_product(regressive_product(p.mv(), q.mv()), r.mv()));
}

double angle(const Plane& a, const Plane& b) {
  expect_unit_plane(a, "angle");
  expect_unit_plane(b, "angle");
  const double c = inner_product(a.mv(), b.mv()).scalar_part();
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double angle_to_plane(const Point3& dir, const Plane& a) {
  expect_unit_plane(a, "angle_to_plane");
  if (std::abs(dir.weight()) > 1e-9 || std::abs(pga::ideal_norm(dir.mv()) - 1.0) > 1e-6) {
    throw std::invalid_argument("angle_to_plane: expects a unit ideal direction");
  }
  const double s = pga::ideal_norm(outer_product(a.mv(), dir.mv()));
  return std::asin(std::clamp(s, -1.0, 1.0));
}

double dist(const Point3& p, const Point3& q) {
  expect_unit_point(p, "dist");
  expect_unit_point(q, "dist");
  return norm(regressive_product(p.mv(), q.mv()));
}

double dist(const Point3& p, const Plane& a) {
  expect_unit_point(p, "dist");
  expect_unit_plane(a, "dist");
  return outer_product(a.mv(), p.mv())[kI3];
}

double dist_parallel(const Plane& a, const Plane& b) {
  expect_unit_plane(a, "dist_parallel");
  expect_unit_plane(b, "dist_parallel");
  const Multivector w = outer_product(a.mv(), b.mv());
  if (norm(w) > 1e-9) {
    throw std::invalid_argument("dist_parallel: planes are not parallel");
  }
  return pga::ideal_norm(w);
}

Line3 perp_line(const Point3& p, const Plane& a) {
  expect_unit_point(p, "perp_line");
  expect_unit_plane(a, "perp_line");
  return Line3(inner_product(p.mv(), a.mv()));
}

Point3 nearest_point(const Point3& p, const Plane& a) {
  expect_unit_point(p, "nearest_point");
  expect_unit_plane(a, "nearest_point");
  return Point3(geometric_product(inner_product(p.mv(), a.mv()), a.mv()));
}

Plane parallel_plane(const Point3& p, const Plane& a) {
  expect_unit_point(p, "parallel_plane");
  expect_unit_plane(a, "parallel_plane");
  return Plane(geometric_product(inner_product(p.mv(), a.mv()), p.mv()));
}

Plane perp_plane(const Line3& l, const Plane& a) {
  expect_unit_line(l, "perp_plane");
  expect_unit_plane(a, "perp_plane");
  return Plane(inner_product(l.mv(), a.mv()));
}

Point3 meet_line_plane(const Line3& l, const Plane& a) {
  return Point3(outer_product(l.mv(), a.mv()));
}

Plane join_point_line(const Point3& p, const Line3& l) {
  return Plane(regressive_product(p.mv(), l.mv()));
}

Plane perp_plane(const Point3& p, const Line3& l) {
  expect_unit_point(p, "perp_plane");
  expect_unit_line(l, "perp_plane");
  return Plane(inner_product(p.mv(), l.mv()));
}

Point3 nearest_point(const Point3& p, const Line3& l) {
  expect_unit_point(p, "nearest_point");
  expect_unit_line(l, "nearest_point");
  return Point3(geometric_product(inner_product(p.mv(), l.mv()), l.mv()));
}

Line3 parallel_line(const Point3& p, const Line3& l) {
  expect_unit_point(p, "parallel_line");
  expect_unit_line(l, "parallel_line");
  return Line3(geometric_product(inner_product(p.mv(), l.mv()), p.mv()));
}

Line3 perp_line(const Point3& p, const Line3& l) {
  const Point3 foot = nearest_point(p, l);
  return Line3(regressive_product(foot.mv(), p.mv()));
}

double tetra_volume(const Point3& a, const Point3& b, const Point3& c,
                    const Point3& d) {
  expect_unit_point(a, "tetra_volume");
  expect_unit_point(b, "tetra_volume");
  expect_unit_point(c, "tetra_volume");
  expect_unit_point(d, "tetra_volume");
  const Multivector j = regressive_product(
      regressive_product(regressive_product(a.mv(), b.mv()), c.mv()), d.mv());
  return std::abs(j.scalar_part()) / 6.0;
}

Line3 perp_direction_join(const Point3& p, const Point3& q) {
  return Line3(grade_part(geometric_product(p.mv(), q.mv()), 2));
}

Line3 perp_line_through_point_to_line(const Point3& p, const Line3& pi) {
  expect_unit_point(p, "perp_line_through_point_to_line");
  expect_unit_line(pi, "perp_line_through_point_to_line");
  const Multivector plane_perp = inner_product(pi.mv(), p.mv());
  const Multivector foot = outer_product(plane_perp, pi.mv());
  return Line3(regressive_product(foot, p.mv()));
}

Plane reflect3(const Plane& mirror, const Plane& x) {
  expect_unit_plane(mirror, "reflect3");
  return Plane(sandwich(mirror.mv(), x.mv()));
}

Line3 reflect3(const Plane& mirror, const Line3& x) {
  expect_unit_plane(mirror, "reflect3");
  return Line3(sandwich(mirror.mv(), x.mv()));
}

Point3 reflect3(const Plane& mirror, const Point3& x) {
  expect_unit_plane(mirror, "reflect3");
  return Point3(sandwich(mirror.mv(), x.mv()));
}

Multivector reflect3(const Plane& mirror, const Multivector& x) {
  expect_unit_plane(mirror, "reflect3");
  return sandwich(mirror.mv(), x);
}

// --- exponential / logarithm -------------------------------------------------

Multivector ScrewDecomposition::recompose() const {
  if (pure_translation) return axis.mv() * beta;
  return geometric_product(dual_scalar_mv(axis.mv().algebra(), alpha, beta),
                           axis.mv());
}

ScrewDecomposition split_bivector(const Multivector& bivector) {
  const Multivector b = restrict3(bivector, 1u << 2, "split_bivector");
  if (b.is_zero()) throw std::invalid_argument("split_bivector: zero bivector");
  const Multivector b2 = geometric_product(b, b);
  const double alpha = std::sqrt(std::max(0.0, -b2.scalar_part()));

  ScrewDecomposition out{Line3(Multivector::zero(b.algebra())), 0.0, 0.0, false};
  double scale = 0.0;
  for (BladeMask m = 0; m < b.size(); ++m) scale = std::max(scale, std::abs(b[m]));
  if (alpha <= 1e-12 * scale) {
    out.pure_translation = true;
    out.beta = pga::ideal_norm(b);
    out.axis = Line3(b * (1.0 / out.beta));
    return out;
  }
  out.alpha = alpha;
  out.beta = -b2[kI3] / (2.0 * alpha);
  // axis = (alpha - beta I) B / alpha^2
  out.axis = Line3(geometric_product(dual_scalar_mv(b.algebra(), out.alpha, -out.beta),
                                     b) *
                   (1.0 / (alpha * alpha)));
  return out;
}

Motor3 exp_bivector(const Multivector& bivector) {
  const Multivector b = restrict3(bivector, 1u << 2, "exp_bivector");
  const Multivector b2 = geometric_product(b, b);
  const double a0 = -b2.scalar_part();
  double scale = 0.0;
  for (BladeMask m = 0; m < b.size(); ++m) scale = std::max(scale, std::abs(b[m]));
  const double alpha = std::sqrt(std::max(0.0, a0));
  if (alpha <= 1e-6 * std::max(scale, 1.0)) {
    // Near-ideal: the series terminates fast and is exact for ideal B.
    return Motor3(exp_series(b, 16));
  }
  const double beta = -b2[kI3] / (2.0 * alpha);
  const Multivector axis =
      geometric_product(dual_scalar_mv(b.algebra(), alpha, -beta), b) *
      (1.0 / (alpha * alpha));
  const double c = std::cos(alpha), s = std::sin(alpha);
  return Motor3(dual_scalar_mv(b.algebra(), c, -beta * s) +
                geometric_product(dual_scalar_mv(b.algebra(), s, beta * c), axis));
}

Multivector log_motor(const Motor3& m) {
  if (m.norm_error() > 1e-6) {
    throw std::invalid_argument("log_motor: motor is not normalized");
  }
  const Multivector& g = m.mv();
  const double s0 = g.scalar_part();
  const double s4 = g[kI3];
  const Multivector w = grade_part(g, 2);
  const double u = norm(w);

  if (u <= 1e-12) {
    if (s0 < 0.0) {
      throw std::domain_error("log_motor: half-turn (scalar part -1) has no "
                              "principal-branch logarithm");
    }
    return w;  // pure translator: log(1 + B_ideal) = B_ideal exactly
  }
  const double alpha = std::atan2(u, s0);
  if (alpha >= 3.14159265358979323846 - 1e-9) {
    throw std::domain_error("log_motor: rotation angle at the branch cut");
  }
  const double beta = -s4 / u;
  const double v = beta * s0;
  const Multivector axis =
      geometric_product(dual_scalar_mv(g.algebra(), u, -v), w) * (1.0 / (u * u));
  return geometric_product(dual_scalar_mv(g.algebra(), alpha, beta), axis);
}

Motor3 motor_from_screw(const Line3& axis, double angle, double pitch) {
  expect_unit_line(axis, "motor_from_screw");
  if (!axis.is_simple()) {
    throw std::invalid_argument("motor_from_screw: axis bivector is not simple");
  }
  const Multivector generator = axis.mv() + polar(axis.mv()) * pitch;
  return exp_bivector(generator * (angle / 2.0));
}

Motor3 rotor3(const Line3& axis, double angle) {
  return motor_from_screw(axis, angle, 0.0);
}

Motor3 translator3(const Point3& dir, double d) {
  if (std::abs(dir.weight()) > 1e-9 ||
      std::abs(pga::ideal_norm(dir.mv()) - 1.0) > 1e-6) {
    throw std::invalid_argument("translator3: expects a unit ideal direction");
  }
  const auto& alg = dir.mv().algebra();
  const Point3 origin = point3(0, 0, 0, alg);
  const Multivector axis = regressive_product(origin.mv(), dir.mv());
  return Motor3(scalar3(alg, 1.0) + polar(axis) * (d / 2.0));
}

Point3 apply(const Motor3& m, const Point3& x) {
  return Point3(sandwich(reverse(m.mv()), x.mv()));
}
Line3 apply(const Motor3& m, const Line3& x) {
  return Line3(sandwich(reverse(m.mv()), x.mv()));
}
Plane apply(const Motor3& m, const Plane& x) {
  return Plane(sandwich(reverse(m.mv()), x.mv()));
}
Multivector apply(const Motor3& m, const Multivector& x) {
  return sandwich(reverse(m.mv()), x);
}

// --- product of two lines ----------------------------------------------------

LineProduct product_of_lines(const Line3& a, const Line3& b) {
  expect_unit_line(a, "product_of_lines");
  expect_unit_line(b, "product_of_lines");
  if (!a.is_simple() || !b.is_simple()) {
    throw std::invalid_argument("product_of_lines: lines must be simple");
  }
  const Multivector prod = geometric_product(a.mv(), b.mv());

  LineProduct out;
  out.cos_alpha = prod.scalar_part();
  out.grade2 = grade_part(prod, 2);
  out.d_sin_alpha = prod[kI3];
  const double u = norm(out.grade2);

  // <OS>_0 = -cos(angle between oriented directions).
  out.alpha = std::atan2(u, -out.cos_alpha);

  if (u <= 1e-9) {
    if (pga::ideal_norm(out.grade2) <= 1e-9) {
      throw std::invalid_argument("product_of_lines: identical lines");
    }
    out.parallel = true;
    out.d = pga::ideal_norm(out.grade2);
    return out;  // degenerate pencil: no unique common normal
  }

  out.d = out.d_sin_alpha / u;
  const double v = -geometric_product(out.grade2, out.grade2)[kI3] / (2.0 * u);
  out.common_normal =
      Line3(geometric_product(dual_scalar_mv(prod.algebra(), u, -v), out.grade2) *
            (1.0 / (u * u)));
  return out;
}

// --- kaleidoscope ------------------------------------------------------------

Multivector canonical_versor(const Multivector& v) {
  BladeMask imax = 0;
  double best = 0.0;
  for (BladeMask b = 0; b < v.size(); ++b) {
    if (std::abs(v[b]) > best) {
      best = std::abs(v[b]);
      imax = b;
    }
  }
  return (v[imax] < 0.0) ? -v : v;
}

KaleidoscopeOrbit kaleidoscope_orbit(const Plane& a, const Plane& b,
                                     const Multivector& x,
                                     std::size_t max_elements) {
  expect_unit_plane(a, "kaleidoscope_orbit");
  expect_unit_plane(b, "kaleidoscope_orbit");

  KaleidoscopeOrbit orbit;
  auto seen = [&](const Multivector& v) {
    for (const auto& w : orbit.versors) {
      if (approx_equal(w, v, 1e-9)) return true;
    }
    return false;
  };

  std::vector<Multivector> frontier;
  frontier.push_back(Multivector::scalar(a.mv().algebra(), 1.0));
  orbit.versors.push_back(frontier.back());
  while (!frontier.empty() && orbit.versors.size() < max_elements) {
    std::vector<Multivector> next;
    for (const auto& v : frontier) {
      for (const auto& mirror : {a.mv(), b.mv()}) {
        const Multivector w = canonical_versor(geometric_product(mirror, v));
        if (!seen(w)) {
          orbit.versors.push_back(w);
          next.push_back(w);
          if (orbit.versors.size() >= max_elements) break;
        }
      }
    }
    frontier = std::move(next);
  }
  orbit.images.reserve(orbit.versors.size());
  for (const auto& v : orbit.versors) orbit.images.push_back(sandwich(v, x));
  return orbit;
}

double closure_error(const Plane& a, const Plane& b, int k) {
  if (k < 1) throw std::invalid_argument("closure_error: k must be positive");
  const Multivector ab = geometric_product(a.mv(), b.mv());
  Multivector pow = Multivector::scalar(ab.algebra(), 1.0);
  for (int i = 0; i < k; ++i) pow = geometric_product(pow, ab);
  return max_abs_diff(canonical_versor(pow),
                      Multivector::scalar(ab.algebra(), 1.0));
}

// --- dual quaternions ----------------------------------------------------------

std::array<double, 8> to_dual_quaternion(const Motor3& m) {
  const Multivector& g = m.mv();
  return {g[0],     -g[kE23], g[kE13], -g[kE12],
          g[kI3],   g[kE01],  g[kE02], g[kE03]};
}

Motor3 from_dual_quaternion(const std::array<double, 8>& q, const AlgebraPtr& alg) {
  Multivector g(alg);
  g.set(0, q[0]);
  g.set(kE23, -q[1]);
  g.set(kE13, q[2]);
  g.set(kE12, -q[3]);
  g.set(kI3, q[4]);
  g.set(kE01, q[5]);
  g.set(kE02, q[6]);
  g.set(kE03, q[7]);
  return Motor3(g);
}

double ideal_norm(const Plane& a) { return pga::ideal_norm(a.mv()); }
double ideal_norm(const Line3& l) { return pga::ideal_norm(l.mv()); }
double ideal_norm(const Point3& p) { return pga::ideal_norm(p.mv()); }

}  // namespace pga
