#include "pgakit/verify.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"
#include "pgakit/analytic.hpp"
#include "pgakit/pga2.hpp"
#include "pgakit/pga3.hpp"
#include "pgakit/rng.hpp"
#include "pgakit/version.hpp"

namespace pga::verify {

namespace an = pga::analytic;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Harness {
  Report& report;
  int trials;
  std::uint64_t seed;

  template <typename Fn>
  void row(const std::string& name, Fn&& trial) {
    RowResult r{name, trials, 0.0, false};
    Rng rng(seed ^ (0x9e3779b97f4a7c15ULL *
                    static_cast<std::uint64_t>(report.rows.size() + 1)));
    for (int t = 0; t < trials; ++t) {
      double err;
      try {
        err = trial(rng);
      } catch (const std::exception&) {
        err = kInf;
      }
      if (!std::isfinite(err)) err = kInf;
      r.max_err = std::max(r.max_err, err);
    }
    r.pass = r.max_err < report.tolerance;
    report.all_pass = report.all_pass && r.pass;
    report.rows.push_back(std::move(r));
  }
};

// --- comparison helpers -----------------------------------------------------

double point2_err(const Point2& p, an::Vec2 want) {
  if (std::abs(p.weight()) < 1e-9) return kInf;
  return (an::Vec2{p.x(), p.y()} - want).norm();
}

an::LineEq2 to_eq2(const Line2& l) { return {l.a(), l.b(), l.c()}; }

double line2_err(const Line2& l, const an::LineEq2& want) {
  const double n = std::hypot(l.a(), l.b());
  if (n < 1e-9) return kInf;
  const an::LineEq2 got{l.a() / n, l.b() / n, l.c() / n};
  const an::LineEq2 w = want.normalized();
  const double d1 = std::max({std::abs(got.a - w.a), std::abs(got.b - w.b),
                              std::abs(got.c - w.c)});
  const double d2 = std::max({std::abs(got.a + w.a), std::abs(got.b + w.b),
                              std::abs(got.c + w.c)});
  return std::min(d1, d2);
}

an::Vec3 v3(const Point3& p) { return {p.x(), p.y(), p.z()}; }

double point3_err(const Point3& p, an::Vec3 want) {
  if (std::abs(p.weight()) < 1e-9) return kInf;
  return (v3(p) - want).norm();
}

an::PlaneEq to_eq3(const Plane& p) { return {p.a(), p.b(), p.c(), p.d()}; }

double plane_err(const Plane& pl, const an::PlaneEq& want) {
  const double n = an::Vec3{pl.a(), pl.b(), pl.c()}.norm();
  if (n < 1e-9) return kInf;
  const an::PlaneEq got{pl.a() / n, pl.b() / n, pl.c() / n, pl.d() / n};
  const an::PlaneEq w = want.normalized();
  const double d1 = std::max({std::abs(got.a - w.a), std::abs(got.b - w.b),
                              std::abs(got.c - w.c), std::abs(got.d - w.d)});
  const double d2 = std::max({std::abs(got.a + w.a), std::abs(got.b + w.b),
                              std::abs(got.c + w.c), std::abs(got.d + w.d)});
  return std::min(d1, d2);
}

an::ParamLine3 to_param(const Line3& l) {
  const auto ua = l.dir();
  const auto ma = l.moment();
  const an::Vec3 u{ua[0], ua[1], ua[2]};
  const an::Vec3 m{ma[0], ma[1], ma[2]};
  // moment = p x u, so u x moment / |u|^2 is the foot of the origin.
  return {u.cross(m) * (1.0 / u.dot(u)), u};
}

double line3_err(const Line3& l, const an::ParamLine3& want) {
  const auto ua = l.dir();
  const auto ma = l.moment();
  const double n = an::Vec3{ua[0], ua[1], ua[2]}.norm();
  if (n < 1e-9) return kInf;
  const an::Vec3 du = an::Vec3{ua[0], ua[1], ua[2]} * (1.0 / n);
  const an::Vec3 dm = an::Vec3{ma[0], ma[1], ma[2]} * (1.0 / n);
  const an::Vec3 wu = want.dir.unit();
  const an::Vec3 wm = want.point.cross(want.dir.unit());
  const double d1 = std::max((du - wu).norm(), (dm - wm).norm());
  const double d2 = std::max((du + wu).norm(), (dm + wm).norm());
  return std::min(d1, d2);
}

// --- random configuration generators ----------------------------------------

an::Vec2 rv2(Rng& rng, double r = 3.0) {
  return {rng.uniform(-r, r), rng.uniform(-r, r)};
}

an::Vec3 rv3(Rng& rng, double r = 3.0) {
  return {rng.uniform(-r, r), rng.uniform(-r, r), rng.uniform(-r, r)};
}

an::Vec2 rdir2(Rng& rng) {
  const double phi = rng.uniform(0, 2 * kPi);
  return {std::cos(phi), std::sin(phi)};
}

an::Vec3 rdir3(Rng& rng) {
  while (true) {
    const an::Vec3 v = rv3(rng, 1.0);
    const double n = v.norm();
    if (n > 0.2 && n <= 1.0) return v * (1.0 / n);
  }
}

struct Gen2 {
  const AlgebraPtr& alg;

  Point2 point_at(an::Vec2 p) const { return pga::point(p.x, p.y, alg); }
  Line2 line_of(const an::LineEq2& e) const { return pga::line(e.a, e.b, e.c, alg); }

  Line2 unit_line(Rng& rng) const {
    const an::Vec2 n = rdir2(rng);
    return pga::line(n.x, n.y, rng.uniform(-3, 3), alg);
  }
};

struct Gen3 {
  const AlgebraPtr& alg;

  Point3 point_at(an::Vec3 p) const { return pga::point3(p.x, p.y, p.z, alg); }
  Plane plane_of(const an::PlaneEq& e) const {
    return pga::plane(e.a, e.b, e.c, e.d, alg);
  }

  Plane unit_plane(Rng& rng) const {
    const an::Vec3 n = rdir3(rng);
    return pga::plane(n.x, n.y, n.z, rng.uniform(-3, 3), alg);
  }

  /// Normalized euclidean line plus its analytic form.
  std::pair<Line3, an::ParamLine3> unit_line(Rng& rng) const {
    while (true) {
      const an::Vec3 p = rv3(rng), q = rv3(rng);
      if ((q - p).norm() < 0.3) continue;
      const Line3 l =
          pga::line_through(point_at(p), point_at(q)).normalized();
      return {l, an::ParamLine3{p, (q - p).unit()}};
    }
  }
};

}  // namespace

// ============================================================================

Report check_table2d(int trials, std::uint64_t seed, const AlgebraPtr& alg) {
  Report report;
  report.suite = "table2d";
  report.seed = seed;
  report.trials_per_row = trials;
  report.tolerance = 1e-10;
  report.all_pass = true;
  Harness h{report, trials, seed};
  Gen2 g{alg};

  h.row("meet_lines", [&](Rng& rng) {
    while (true) {
      const Line2 u = g.unit_line(rng), v = g.unit_line(rng);
      const auto hit = an::intersect(to_eq2(u), to_eq2(v));
      if (!hit || hit->norm() > 10) continue;
      if (std::abs(to_eq2(u).normal().cross(to_eq2(v).normal())) < 0.05) continue;
      return point2_err(meet(u, v), *hit);
    }
  });

  h.row("angle_acos", [&](Rng& rng) {
    const Line2 u = g.unit_line(rng), v = g.unit_line(rng);
    const double got = angle(u, v);
    const double want = an::line_angle(to_eq2(u), to_eq2(v));
    // The defining identity: cos(angle) equals a0 a1 + b0 b1.
    const double coef = u.a() * v.a() + u.b() * v.b();
    return std::max(std::abs(got - want), std::abs(std::cos(got) - coef));
  });

  h.row("angle_asin", [&](Rng& rng) {
    const Line2 u = g.unit_line(rng), v = g.unit_line(rng);
    const double theta = an::line_angle(to_eq2(u), to_eq2(v));
    const double got = std::asin(std::min(1.0, norm(outer_product(u.mv(), v.mv()))));
    return std::abs(got - std::min(theta, kPi - theta));
  });

  h.row("dist_parallel_lines", [&](Rng& rng) {
    const an::Vec2 n = rdir2(rng);
    const double c1 = rng.uniform(-3, 3), c2 = rng.uniform(-3, 3);
    const Line2 u = g.line_of({n.x, n.y, c1});
    const double flip = rng.uniform(0, 1) < 0.5 ? -1.0 : 1.0;
    const Line2 v = g.line_of({flip * n.x, flip * n.y, flip * c2});
    return std::abs(dist_parallel(u, v) - std::abs(c1 - c2));
  });

  h.row("join_points", [&](Rng& rng) {
    while (true) {
      const an::Vec2 p = rv2(rng), q = rv2(rng);
      if ((q - p).norm() < 0.2) continue;
      return line2_err(join(g.point_at(p), g.point_at(q)), an::line_through(p, q));
    }
  });

  h.row("perp_direction_join", [&](Rng& rng) {
    while (true) {
      const an::Vec2 p = rv2(rng), q = rv2(rng);
      if ((q - p).norm() < 0.2) continue;
      const Multivector pq =
          geometric_product(g.point_at(p).mv(), g.point_at(q).mv());
      const Point2 dir = Point2(grade_part(pq, 2));
      const double e1 = std::abs(dir.weight());
      const double e2 =
          std::abs(pga::ideal_norm(dir.mv()) - (q - p).norm());
      const double e3 =
          std::abs(an::Vec2{dir.dir_x(), dir.dir_y()}.unit().dot((q - p).unit()));
      return std::max({e1, e2, e3});
    }
  });

  h.row("dist_points_join", [&](Rng& rng) {
    const an::Vec2 p = rv2(rng), q = rv2(rng);
    return std::abs(dist(g.point_at(p), g.point_at(q)) - (q - p).norm());
  });

  h.row("dist_points_cross", [&](Rng& rng) {
    const an::Vec2 p = rv2(rng), q = rv2(rng);
    const Multivector pq =
        geometric_product(g.point_at(p).mv(), g.point_at(q).mv());
    return std::abs(pga::ideal_norm(grade_part(pq, 2)) - (q - p).norm());
  });

  h.row("dist_point_line", [&](Rng& rng) {
    const an::Vec2 p = rv2(rng);
    const Line2 u = g.unit_line(rng);
    return std::abs(dist(g.point_at(p), u) - an::signed_dist(to_eq2(u), p));
  });

  h.row("angle_ideal_point_line", [&](Rng& rng) {
    const an::Vec2 v = rdir2(rng);
    const Line2 u = g.unit_line(rng);
    const double got = std::asin(std::min(
        1.0, pga::ideal_norm(outer_product(u.mv(), direction(v.x, v.y, alg).mv()))));
    const double want = std::asin(std::abs(to_eq2(u).normal().unit().dot(v)));
    return std::abs(got - want);
  });

  h.row("perp_line_through_point", [&](Rng& rng) {
    const an::Vec2 p = rv2(rng);
    const Line2 u = g.unit_line(rng);
    const Line2 perp = perp_through(g.point_at(p), u);
    const double inc = std::abs(an::signed_dist(to_eq2(perp).normalized(), p));
    const double orth =
        std::abs(to_eq2(perp).normal().unit().dot(to_eq2(u).normal().unit()));
    return std::max(inc, orth);
  });

  h.row("nearest_point_on_line", [&](Rng& rng) {
    const an::Vec2 p = rv2(rng);
    const Line2 u = g.unit_line(rng);
    return point2_err(nearest_point(g.point_at(p), u),
                      an::foot_on_line(to_eq2(u), p));
  });

  h.row("parallel_line_through_point", [&](Rng& rng) {
    const an::Vec2 p = rv2(rng);
    const Line2 u = g.unit_line(rng);
    const an::LineEq2 ue = to_eq2(u);
    return line2_err(parallel_through(g.point_at(p), u),
                     {ue.a, ue.b, -(ue.a * p.x + ue.b * p.y)});
  });

  h.row("triangle_area", [&](Rng& rng) {
    const an::Vec2 p = rv2(rng), q = rv2(rng), r = rv2(rng);
    return std::abs(triangle_area(g.point_at(p), g.point_at(q), g.point_at(r)) -
                    an::triangle_area(p, q, r));
  });

  h.row("reflect_point", [&](Rng& rng) {
    const an::Vec2 p = rv2(rng);
    const Line2 u = g.unit_line(rng);
    return point2_err(reflect(u, g.point_at(p)), an::reflect_point(to_eq2(u), p));
  });

  h.row("reflect_line", [&](Rng& rng) {
    const Line2 u = g.unit_line(rng), v = g.unit_line(rng);
    return line2_err(reflect(u, v), an::reflect_line(to_eq2(u), to_eq2(v)));
  });

  h.row("rotation", [&](Rng& rng) {
    const an::Vec2 c = rv2(rng, 2.0), p = rv2(rng);
    const double theta = rng.uniform(-kPi, kPi);
    return point2_err(apply(rotor(g.point_at(c), theta), g.point_at(p)),
                      an::rotate_about(c, theta, p));
  });

  h.row("translation", [&](Rng& rng) {
    const an::Vec2 v = rdir2(rng), p = rv2(rng);
    const double d = rng.uniform(-3, 3);
    // Pinned convention: d along (v.y, -v.x).
    return point2_err(apply(translator(direction(v.x, v.y, alg), d), g.point_at(p)),
                      p + an::Vec2{v.y, -v.x} * d);
  });

  h.row("meet_weight_sin", [&](Rng& rng) {
    while (true) {
      const Line2 u = g.unit_line(rng), v = g.unit_line(rng);
      const double theta = an::line_angle(to_eq2(u), to_eq2(v));
      if (std::sin(theta) < 0.05) continue;
      return std::abs(norm(outer_product(u.mv(), v.mv())) - std::sin(theta));
    }
  });

  h.row("meet_parallel_separation", [&](Rng& rng) {
    const an::Vec2 n = rdir2(rng);
    const double c1 = rng.uniform(-3, 3), c2 = rng.uniform(-3, 3);
    const Line2 u = g.line_of({n.x, n.y, c1});
    const Line2 v = g.line_of({n.x, n.y, c2});
    return std::abs(pga::ideal_norm(outer_product(u.mv(), v.mv())) -
                    std::abs(c1 - c2));
  });

  h.row("point_pair_product", [&](Rng& rng) {
    const an::Vec2 p = rv2(rng), q = rv2(rng);
    const Multivector pq =
        geometric_product(g.point_at(p).mv(), g.point_at(q).mv());
    return std::abs(pq.scalar_part() + 1.0);
  });

  h.row("point_line_product", [&](Rng& rng) {
    const an::Vec2 p = rv2(rng);
    const Line2 u = g.unit_line(rng);
    const Multivector ap = geometric_product(u.mv(), g.point_at(p).mv());
    const Line2 perp = Line2(grade_part(ap, 1));
    const double inc = std::abs(an::signed_dist(to_eq2(perp).normalized(), p));
    const double orth =
        std::abs(to_eq2(perp).normal().unit().dot(to_eq2(u).normal().unit()));
    const double dd = std::abs(std::abs(ap[0b111]) -
                               std::abs(an::signed_dist(to_eq2(u), p)));
    return std::max({inc, orth, dd});
  });

  h.row("project_line_line", [&](Rng& rng) {
    const Line2 m = g.unit_line(rng), n = g.unit_line(rng);
    const Multivector rebuilt =
        geometric_product(inner_product(m.mv(), n.mv()), n.mv()) +
        geometric_product(outer_product(m.mv(), n.mv()), n.mv());
    return max_abs_diff(rebuilt, m.mv());
  });

  h.row("project_line_point", [&](Rng& rng) {
    const Line2 m = g.unit_line(rng);
    const Point2 p = g.point_at(rv2(rng));
    const Multivector rebuilt =
        -geometric_product(inner_product(m.mv(), p.mv()), p.mv()) -
        geometric_product(outer_product(m.mv(), p.mv()), p.mv());
    return max_abs_diff(rebuilt, m.mv());
  });

  return report;
}

// ============================================================================

Report check_table3d(int trials, std::uint64_t seed, const AlgebraPtr& alg) {
  Report report;
  report.suite = "table3d";
  report.seed = seed;
  report.trials_per_row = trials;
  report.tolerance = 1e-10;
  report.all_pass = true;
  Harness h{report, trials, seed};
  Gen3 g{alg};

  h.row("meet_planes_line", [&](Rng& rng) {
    while (true) {
      const Plane a = g.unit_plane(rng), b = g.unit_plane(rng);
      const auto hit = an::intersect(to_eq3(a), to_eq3(b));
      if (!hit || hit->dir.norm() < 0.05 || hit->point.norm() > 10) continue;
      return line3_err(line_meet(a, b), *hit);
    }
  });

  h.row("angle_planes_acos", [&](Rng& rng) {
    const Plane a = g.unit_plane(rng), b = g.unit_plane(rng);
    return std::abs(angle(a, b) - an::plane_angle(to_eq3(a), to_eq3(b)));
  });

  h.row("angle_planes_asin", [&](Rng& rng) {
    const Plane a = g.unit_plane(rng), b = g.unit_plane(rng);
    const double theta = an::plane_angle(to_eq3(a), to_eq3(b));
    const double got = std::asin(std::min(1.0, norm(outer_product(a.mv(), b.mv()))));
    return std::abs(got - std::min(theta, kPi - theta));
  });

  h.row("dist_parallel_planes", [&](Rng& rng) {
    const an::Vec3 n = rdir3(rng);
    const double d1 = rng.uniform(-3, 3), d2 = rng.uniform(-3, 3);
    const double flip = rng.uniform(0, 1) < 0.5 ? -1.0 : 1.0;
    const Plane a = g.plane_of({n.x, n.y, n.z, d1});
    const Plane b = g.plane_of({flip * n.x, flip * n.y, flip * n.z, flip * d2});
    return std::abs(dist_parallel(a, b) - std::abs(d1 - d2));
  });

  h.row("join_points_line", [&](Rng& rng) {
    while (true) {
      const an::Vec3 p = rv3(rng), q = rv3(rng);
      if ((q - p).norm() < 0.3) continue;
      return line3_err(line_through(g.point_at(p), g.point_at(q)),
                       an::ParamLine3{p, q - p});
    }
  });

  h.row("meet3_planes", [&](Rng& rng) {
    while (true) {
      const Plane a = g.unit_plane(rng), b = g.unit_plane(rng),
                  c = g.unit_plane(rng);
      const auto pt = an::intersect3(to_eq3(a), to_eq3(b), to_eq3(c));
      if (!pt || pt->norm() > 8) continue;
      const an::Vec3 na = to_eq3(a).normal(), nb = to_eq3(b).normal(),
                     nc = to_eq3(c).normal();
      if (std::abs(na.dot(nb.cross(nc))) < 0.1) continue;
      return point3_err(meet3(a, b, c), *pt);
    }
  });

  h.row("join3_points", [&](Rng& rng) {
    while (true) {
      const an::Vec3 p = rv3(rng), q = rv3(rng), r = rv3(rng);
      if ((q - p).cross(r - p).norm() < 0.3) continue;
      return plane_err(join3(g.point_at(p), g.point_at(q), g.point_at(r)),
                       an::plane_through(p, q, r));
    }
  });

  h.row("dist_point_plane", [&](Rng& rng) {
    const an::Vec3 p = rv3(rng);
    const Plane a = g.unit_plane(rng);
    return std::abs(dist(g.point_at(p), a) - an::signed_dist(to_eq3(a), p));
  });

  h.row("angle_ideal_point_plane", [&](Rng& rng) {
    const an::Vec3 v = rdir3(rng);
    const Plane a = g.unit_plane(rng);
    const double got = angle_to_plane(direction3(v.x, v.y, v.z, alg), a);
    const double want = std::asin(std::abs(to_eq3(a).normal().unit().dot(v)));
    return std::abs(got - want);
  });

  h.row("perp_direction_join", [&](Rng& rng) {
    while (true) {
      const an::Vec3 p = rv3(rng), q = rv3(rng);
      if ((q - p).norm() < 0.3) continue;
      const Line3 pd = perp_direction_join(g.point_at(p), g.point_at(q));
      const auto u = pd.dir();
      const auto m = pd.moment();
      const double e1 = an::Vec3{u[0], u[1], u[2]}.norm();
      const double e2 = std::abs(pga::ideal_norm(pd.mv()) - (q - p).norm());
      // Pinned convention: the moment coordinates carry -(q - p).
      const double e3 = (an::Vec3{m[0], m[1], m[2]} + (q - p)).norm();
      return std::max({e1, e2, e3});
    }
  });

  h.row("dist_points_join", [&](Rng& rng) {
    const an::Vec3 p = rv3(rng), q = rv3(rng);
    return std::abs(dist(g.point_at(p), g.point_at(q)) - (q - p).norm());
  });

  h.row("dist_points_cross", [&](Rng& rng) {
    const an::Vec3 p = rv3(rng), q = rv3(rng);
    const Multivector pq =
        geometric_product(g.point_at(p).mv(), g.point_at(q).mv());
    return std::abs(pga::ideal_norm(grade_part(pq, 2)) - (q - p).norm());
  });

  h.row("perp_line_point_plane", [&](Rng& rng) {
    const an::Vec3 p = rv3(rng);
    const Plane a = g.unit_plane(rng);
    return line3_err(perp_line(g.point_at(p), a),
                     an::ParamLine3{p, to_eq3(a).normal()});
  });

  h.row("nearest_point_on_plane", [&](Rng& rng) {
    const an::Vec3 p = rv3(rng);
    const Plane a = g.unit_plane(rng);
    return point3_err(nearest_point(g.point_at(p), a),
                      an::foot_on_plane(to_eq3(a), p));
  });

  h.row("parallel_plane_through_point", [&](Rng& rng) {
    const an::Vec3 p = rv3(rng);
    const Plane a = g.unit_plane(rng);
    const an::PlaneEq ae = to_eq3(a);
    return plane_err(parallel_plane(g.point_at(p), a),
                     {ae.a, ae.b, ae.c, -ae.normal().dot(p)});
  });

  h.row("perp_plane_line_plane", [&](Rng& rng) {
    while (true) {
      const auto [l, le] = g.unit_line(rng);
      const Plane a = g.unit_plane(rng);
      const an::Vec3 n2 = le.dir.cross(to_eq3(a).normal());
      if (n2.norm() < 0.2) continue;
      return plane_err(perp_plane(l, a), {n2.x, n2.y, n2.z, -n2.dot(le.point)});
    }
  });

  h.row("meet_line_plane", [&](Rng& rng) {
    while (true) {
      const auto [l, le] = g.unit_line(rng);
      const Plane a = g.unit_plane(rng);
      if (std::abs(to_eq3(a).normal().dot(le.dir)) < 0.1) continue;
      const auto hit = an::intersect(le, to_eq3(a));
      if (!hit || hit->norm() > 10) continue;
      return point3_err(meet_line_plane(l, a), *hit);
    }
  });

  h.row("join_point_line", [&](Rng& rng) {
    while (true) {
      const auto [l, le] = g.unit_line(rng);
      const an::Vec3 p = rv3(rng);
      const an::Vec3 n = le.dir.cross(p - le.point);
      if (n.norm() < 0.2) continue;
      return plane_err(join_point_line(g.point_at(p), l),
                       {n.x, n.y, n.z, -n.dot(p)});
    }
  });

  h.row("perp_plane_point_line", [&](Rng& rng) {
    const auto [l, le] = g.unit_line(rng);
    const an::Vec3 p = rv3(rng);
    return plane_err(perp_plane(g.point_at(p), l),
                     {le.dir.x, le.dir.y, le.dir.z, -le.dir.dot(p)});
  });

  h.row("nearest_point_on_line", [&](Rng& rng) {
    while (true) {
      const auto [l, le] = g.unit_line(rng);
      const an::Vec3 p = rv3(rng);
      if ((p - an::foot_on_line(le, p)).norm() < 0.2) continue;
      return point3_err(nearest_point(g.point_at(p), l), an::foot_on_line(le, p));
    }
  });

  h.row("parallel_line_through_point", [&](Rng& rng) {
    const auto [l, le] = g.unit_line(rng);
    const an::Vec3 p = rv3(rng);
    return line3_err(parallel_line(g.point_at(p), l), an::ParamLine3{p, le.dir});
  });

  h.row("perp_line_through_point", [&](Rng& rng) {
    while (true) {
      const auto [l, le] = g.unit_line(rng);
      const an::Vec3 p = rv3(rng);
      const an::Vec3 foot = an::foot_on_line(le, p);
      if ((p - foot).norm() < 0.2) continue;
      return line3_err(perp_line(g.point_at(p), l), an::ParamLine3{p, foot - p});
    }
  });

  h.row("tetra_volume", [&](Rng& rng) {
    const an::Vec3 a = rv3(rng), b = rv3(rng), c = rv3(rng), d = rv3(rng);
    return std::abs(
        tetra_volume(g.point_at(a), g.point_at(b), g.point_at(c), g.point_at(d)) -
        an::tetra_volume(a, b, c, d));
  });

  h.row("reflect_point", [&](Rng& rng) {
    const Plane m = g.unit_plane(rng);
    const an::Vec3 p = rv3(rng);
    return point3_err(reflect3(m, g.point_at(p)),
                      an::reflect_point(to_eq3(m), p));
  });

  h.row("reflect_line", [&](Rng& rng) {
    const Plane m = g.unit_plane(rng);
    const auto [l, le] = g.unit_line(rng);
    const an::Vec3 p0 = an::reflect_point(to_eq3(m), le.point);
    const an::Vec3 p1 = an::reflect_point(to_eq3(m), le.point + le.dir);
    return line3_err(reflect3(m, l), an::ParamLine3{p0, p1 - p0});
  });

  h.row("reflect_plane", [&](Rng& rng) {
    const Plane m = g.unit_plane(rng);
    const Plane x = g.unit_plane(rng);
    // Reflect three spanning points of x.
    const an::PlaneEq xe = to_eq3(x);
    const an::Vec3 n = xe.normal();
    const an::Vec3 p0 = n * (-xe.d);
    an::Vec3 t1 = n.cross({1, 0, 0});
    if (t1.norm() < 0.1) t1 = n.cross({0, 1, 0});
    const an::Vec3 t2 = n.cross(t1);
    const an::Vec3 r0 = an::reflect_point(to_eq3(m), p0);
    const an::Vec3 r1 = an::reflect_point(to_eq3(m), p0 + t1);
    const an::Vec3 r2 = an::reflect_point(to_eq3(m), p0 + t2);
    return plane_err(reflect3(m, x), an::plane_through(r0, r1, r2));
  });

  h.row("rotation", [&](Rng& rng) {
    const an::Vec3 p0 = rv3(rng, 2.0);
    const an::Vec3 d = rdir3(rng);
    const Line3 axis =
        line_through(g.point_at(p0), g.point_at(p0 + d)).normalized();
    const double theta = rng.uniform(-kPi, kPi);
    const an::Vec3 x = rv3(rng);
    return point3_err(apply(rotor3(axis, theta), g.point_at(x)),
                      an::rotate_about_axis(p0, d, theta, x));
  });

  h.row("translation", [&](Rng& rng) {
    const an::Vec3 v = rdir3(rng);
    const double d = rng.uniform(-3, 3);
    const an::Vec3 x = rv3(rng);
    return point3_err(
        apply(translator3(direction3(v.x, v.y, v.z, alg), d), g.point_at(x)),
        x + v * d);
  });

  h.row("screw", [&](Rng& rng) {
    const an::Vec3 p0 = rv3(rng, 2.0);
    const an::Vec3 d = rdir3(rng);
    const Line3 axis =
        line_through(g.point_at(p0), g.point_at(p0 + d)).normalized();
    const double theta = rng.uniform(-2.5, 2.5);
    const double pitch = rng.uniform(-2, 2);
    const an::Vec3 x = rv3(rng);
    return point3_err(apply(motor_from_screw(axis, theta, pitch), g.point_at(x)),
                      an::screw_about_axis(p0, d, theta, pitch, x));
  });

  h.row("example1_construction", [&](Rng& rng) {
    while (true) {
      const auto [pi, pie] = g.unit_line(rng);
      const an::Vec3 p = rv3(rng);
      const an::Vec3 foot = an::foot_on_line(pie, p);
      if ((p - foot).norm() < 0.3) continue;
      const Line3 sigma = perp_line_through_point_to_line(g.point_at(p), pi);
      // Incidence: passes through p. Perpendicularity: meets pi at a right
      // angle. Both against the analytic construction.
      const an::ParamLine3 se = to_param(sigma);
      const double inc = se.dir.unit().cross(p - se.point).norm();
      const auto u = sigma.dir();
      const double orth = std::abs(an::Vec3{u[0], u[1], u[2]}.unit().dot(pie.dir));
      const double match = line3_err(sigma, an::ParamLine3{p, foot - p});
      return std::max({inc, orth, match});
    }
  });

  h.row("skew_line_product", [&](Rng& rng) {
    while (true) {
      const auto [la, lae] = g.unit_line(rng);
      const auto [lb, lbe] = g.unit_line(rng);
      const auto ca = an::closest_approach(lae, lbe);
      if (ca.parallel || std::sin(ca.angle) < 0.05 || ca.distance < 0.1) continue;
      const LineProduct lp = product_of_lines(la, lb);
      const double e1 = std::abs(lp.alpha - ca.angle);
      const double e2 = std::abs(std::abs(lp.d) - ca.distance);
      const double e3 = std::abs(std::abs(lp.d_sin_alpha) -
                                 ca.distance * std::sin(ca.angle));
      if (!lp.common_normal) return kInf;
      const double e4 = line3_err(*lp.common_normal,
                                  an::ParamLine3{ca.foot_a, ca.foot_b - ca.foot_a});
      return std::max({e1, e2, e3, e4});
    }
  });

  return report;
}

std::string report_to_json(const Report& report) {
  nlohmann::ordered_json out;
  out["tool"] = "pgakit";
  out["version"] = kVersion;
  out["suite"] = report.suite;
  out["seed"] = report.seed;
  out["trials_per_row"] = report.trials_per_row;
  out["tolerance"] = report.tolerance;
  out["all_pass"] = report.all_pass;
  out["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json jr;
    jr["name"] = r.name;
    jr["trials"] = r.trials;
    if (std::isfinite(r.max_err)) {
      jr["max_err"] = r.max_err;
    } else {
      jr["max_err"] = "inf";  // a trial threw or diverged
    }
    jr["pass"] = r.pass;
    out["rows"].push_back(jr);
  }
  return out.dump(2);
}

}  // namespace pga::verify
