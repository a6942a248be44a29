#pragma once

// Plain coordinate geometry on raw doubles: the independent oracle that the
// verification suites compare every algebra-side formula against. Nothing in
// here may touch the Clifford kernel.

#include <cmath>
#include <optional>

namespace pga::analytic {

struct Vec2 {
  double x = 0, y = 0;
  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}
  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  Vec2 unit() const {
    const double n = norm();
    return {x / n, y / n};
  }
  Vec2 perp() const { return {-y, x}; }
};

struct Vec3 {
  double x = 0, y = 0, z = 0;
  Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}
  Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(Vec3 o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 unit() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }
};

// ---------------------------------------------------------------------------
// Plane geometry. Lines are a x + b y + c = 0.

struct LineEq2 {
  double a = 0, b = 0, c = 0;
  Vec2 normal() const { return {a, b}; }
  Vec2 dir() const { return {b, -a}; }
  LineEq2 normalized() const {
    const double n = std::hypot(a, b);
    return {a / n, b / n, c / n};
  }
};

LineEq2 line_through(Vec2 p, Vec2 q);
std::optional<Vec2> intersect(const LineEq2& u, const LineEq2& v);
/// Angle between oriented lines in [0, pi] from the normal directions.
double line_angle(const LineEq2& u, const LineEq2& v);
/// Signed distance; u must be normalized.
double signed_dist(const LineEq2& u, Vec2 p);
double parallel_separation(const LineEq2& u, const LineEq2& v);
Vec2 foot_on_line(const LineEq2& u, Vec2 p);
Vec2 reflect_point(const LineEq2& u, Vec2 p);
LineEq2 reflect_line(const LineEq2& u, const LineEq2& v);
Vec2 rotate_about(Vec2 center, double angle, Vec2 p);
double triangle_area(Vec2 a, Vec2 b, Vec2 c);

// ---------------------------------------------------------------------------
// Space geometry. Planes are a x + b y + c z + d = 0; lines are point + dir.

struct PlaneEq {
  double a = 0, b = 0, c = 0, d = 0;
  Vec3 normal() const { return {a, b, c}; }
  PlaneEq normalized() const {
    const double n = normal().norm();
    return {a / n, b / n, c / n, d / n};
  }
};

struct ParamLine3 {
  Vec3 point;
  Vec3 dir;
};

PlaneEq plane_through(Vec3 p, Vec3 q, Vec3 r);
double plane_angle(const PlaneEq& u, const PlaneEq& v);
/// Signed distance; u must be normalized.
double signed_dist(const PlaneEq& u, Vec3 p);
double parallel_separation(const PlaneEq& u, const PlaneEq& v);
std::optional<ParamLine3> intersect(const PlaneEq& u, const PlaneEq& v);
std::optional<Vec3> intersect3(const PlaneEq& u, const PlaneEq& v, const PlaneEq& w);
std::optional<Vec3> intersect(const ParamLine3& l, const PlaneEq& u);
Vec3 foot_on_plane(const PlaneEq& u, Vec3 p);
Vec3 foot_on_line(const ParamLine3& l, Vec3 p);
Vec3 reflect_point(const PlaneEq& u, Vec3 p);
double tetra_volume(Vec3 a, Vec3 b, Vec3 c, Vec3 d);
/// Rotation of p about the axis through `origin` with unit direction `axis`,
/// right-handed by `angle`.
Vec3 rotate_about_axis(Vec3 origin, Vec3 axis, double angle, Vec3 p);
/// Screw motion: rotate as above, then advance pitch*angle along the axis.
Vec3 screw_about_axis(Vec3 origin, Vec3 axis, double angle, double pitch, Vec3 p);

struct CommonNormal {
  double angle;     // between the direction vectors, in [0, pi]
  double distance;  // closest approach, >= 0
  Vec3 foot_a;      // closest point on line a
  Vec3 foot_b;      // closest point on line b
  bool parallel;
};
CommonNormal closest_approach(const ParamLine3& la, const ParamLine3& lb);

}  // namespace pga::analytic
