#include "pgakit/analytic.hpp"

#include <algorithm>

namespace pga::analytic {

namespace {
double clamp1(double v) { return std::clamp(v, -1.0, 1.0); }
}  // namespace

LineEq2 line_through(Vec2 p, Vec2 q) {
  // Normal is the perp of the direction; c fixed by incidence with p.
  const Vec2 d = q - p;
  return {-d.y, d.x, -(-d.y * p.x + d.x * p.y)};
}

std::optional<Vec2> intersect(const LineEq2& u, const LineEq2& v) {
  const double det = u.a * v.b - v.a * u.b;
  if (det == 0.0) return std::nullopt;
  return Vec2{(u.b * v.c - v.b * u.c) / det, (v.a * u.c - u.a * v.c) / det};
}

double line_angle(const LineEq2& u, const LineEq2& v) {
  const Vec2 nu = u.normal().unit(), nv = v.normal().unit();
  return std::acos(clamp1(nu.dot(nv)));
}

double signed_dist(const LineEq2& u, Vec2 p) { return u.a * p.x + u.b * p.y + u.c; }

double parallel_separation(const LineEq2& u, const LineEq2& v) {
  const LineEq2 un = u.normalized();
  LineEq2 vn = v.normalized();
  if (un.normal().dot(vn.normal()) < 0.0) vn = {-vn.a, -vn.b, -vn.c};
  return std::abs(un.c - vn.c);
}

Vec2 foot_on_line(const LineEq2& u, Vec2 p) {
  const LineEq2 un = u.normalized();
  return p - un.normal() * signed_dist(un, p);
}

Vec2 reflect_point(const LineEq2& u, Vec2 p) {
  const LineEq2 un = u.normalized();
  return p - un.normal() * (2.0 * signed_dist(un, p));
}

LineEq2 reflect_line(const LineEq2& u, const LineEq2& v) {
  // Reflect two points of v in u.
  const Vec2 d = v.dir();
  Vec2 p0;
  if (std::abs(v.b) > std::abs(v.a)) {
    p0 = {0.0, -v.c / v.b};
  } else {
    p0 = {-v.c / v.a, 0.0};
  }
  return line_through(reflect_point(u, p0), reflect_point(u, p0 + d));
}

Vec2 rotate_about(Vec2 center, double angle, Vec2 p) {
  const Vec2 r = p - center;
  const double c = std::cos(angle), s = std::sin(angle);
  return center + Vec2{c * r.x - s * r.y, s * r.x + c * r.y};
}

double triangle_area(Vec2 a, Vec2 b, Vec2 c) {
  return 0.5 * std::abs((b - a).cross(c - a));
}

PlaneEq plane_through(Vec3 p, Vec3 q, Vec3 r) {
  const Vec3 n = (q - p).cross(r - p);
  return {n.x, n.y, n.z, -n.dot(p)};
}

double plane_angle(const PlaneEq& u, const PlaneEq& v) {
  return std::acos(clamp1(u.normal().unit().dot(v.normal().unit())));
}

double signed_dist(const PlaneEq& u, Vec3 p) { return u.normal().dot(p) + u.d; }

double parallel_separation(const PlaneEq& u, const PlaneEq& v) {
  const PlaneEq un = u.normalized();
  PlaneEq vn = v.normalized();
  if (un.normal().dot(vn.normal()) < 0.0) vn = {-vn.a, -vn.b, -vn.c, -vn.d};
  return std::abs(un.d - vn.d);
}

std::optional<ParamLine3> intersect(const PlaneEq& u, const PlaneEq& v) {
  const Vec3 d = u.normal().cross(v.normal());
  const double n2 = d.dot(d);
  if (n2 == 0.0) return std::nullopt;
  // Point satisfying both plane equations.
  const Vec3 p =
      (d.cross(v.normal()) * u.d + u.normal().cross(d) * v.d) * (1.0 / n2);
  return ParamLine3{p, d};
}

std::optional<Vec3> intersect3(const PlaneEq& u, const PlaneEq& v, const PlaneEq& w) {
  const Vec3 nu = u.normal(), nv = v.normal(), nw = w.normal();
  const double det = nu.dot(nv.cross(nw));
  if (det == 0.0) return std::nullopt;
  const Vec3 num =
      nv.cross(nw) * (-u.d) + nw.cross(nu) * (-v.d) + nu.cross(nv) * (-w.d);
  return num * (1.0 / det);
}

std::optional<Vec3> intersect(const ParamLine3& l, const PlaneEq& u) {
  const double denom = u.normal().dot(l.dir);
  if (denom == 0.0) return std::nullopt;
  const double t = -signed_dist(u, l.point) / denom;
  return l.point + l.dir * t;
}

Vec3 foot_on_plane(const PlaneEq& u, Vec3 p) {
  const PlaneEq un = u.normalized();
  return p - un.normal() * signed_dist(un, p);
}

Vec3 foot_on_line(const ParamLine3& l, Vec3 p) {
  const Vec3 d = l.dir.unit();
  return l.point + d * d.dot(p - l.point);
}

Vec3 reflect_point(const PlaneEq& u, Vec3 p) {
  const PlaneEq un = u.normalized();
  return p - un.normal() * (2.0 * signed_dist(un, p));
}

double tetra_volume(Vec3 a, Vec3 b, Vec3 c, Vec3 d) {
  return std::abs((b - a).dot((c - a).cross(d - a))) / 6.0;
}

Vec3 rotate_about_axis(Vec3 origin, Vec3 axis, double angle, Vec3 p) {
  const Vec3 k = axis.unit();
  const Vec3 r = p - origin;
  const double c = std::cos(angle), s = std::sin(angle);
  // Rodrigues rotation formula.
  const Vec3 rot = r * c + k.cross(r) * s + k * (k.dot(r) * (1.0 - c));
  return origin + rot;
}

Vec3 screw_about_axis(Vec3 origin, Vec3 axis, double angle, double pitch, Vec3 p) {
  return rotate_about_axis(origin, axis, angle, p) + axis.unit() * (pitch * angle);
}

CommonNormal closest_approach(const ParamLine3& la, const ParamLine3& lb) {
  CommonNormal out{};
  const Vec3 da = la.dir.unit(), db = lb.dir.unit();
  out.angle = std::acos(clamp1(da.dot(db)));
  const Vec3 n = da.cross(db);
  const double n2 = n.dot(n);
  const Vec3 w = lb.point - la.point;
  if (n2 < 1e-24) {
    out.parallel = true;
    out.foot_a = la.point;
    out.foot_b = lb.point + db * db.dot(la.point - lb.point);
    out.distance = (out.foot_b - la.point).norm();
    return out;
  }
  out.parallel = false;
  out.distance = std::abs(w.dot(n)) / std::sqrt(n2);
  // Parameters of the mutual perpendicular feet.
  const double d_ab = da.dot(db);
  const double ta = (w.dot(da) - d_ab * w.dot(db)) / (1.0 - d_ab * d_ab);
  const double tb = (d_ab * w.dot(da) - w.dot(db)) / (1.0 - d_ab * d_ab);
  out.foot_a = la.point + da * ta;
  out.foot_b = lb.point + db * tb;
  return out;
}

}  // namespace pga::analytic
