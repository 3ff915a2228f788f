#include "arcunion/geom.hpp"

#include <algorithm>
#include <limits>

namespace arcunion {

double& global_tolerance() {
  static double eps = 1e-9;
  return eps;
}

double norm_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

bool UnitArc::contains_angle(double theta, double ang_tol) const {
  double rel = theta - theta_start;
  rel = std::fmod(rel, kTwoPi);
  if (rel < 0) rel += kTwoPi;
  if (rel <= theta_end - theta_start + ang_tol) return true;
  // the wrap may land the angle just below theta_start
  return rel >= kTwoPi - ang_tol;
}

UnitArc make_unit_arc(Point center, double theta_start, double theta_end,
                      std::int64_t id) {
  if (!std::isfinite(center.x) || !std::isfinite(center.y) ||
      !std::isfinite(theta_start) || !std::isfinite(theta_end))
    throw std::invalid_argument("unit arc: non-finite parameter");
  double span = theta_end - theta_start;
  if (span > kTwoPi) span = kTwoPi;
  if (span <= 0)
    throw std::invalid_argument("unit arc: zero angular extent");
  UnitArc e;
  e.center = center;
  e.theta_start = norm_angle(theta_start);
  e.theta_end = e.theta_start + span;
  e.id = id;
  return e;
}

bool disc_contains(Point p, Point c, double r) {
  return dist(p, c) <= r + global_tolerance();
}

std::vector<Point> circle_circle_intersections(Point c1, Point c2, double r) {
  if (r <= 0) throw std::invalid_argument("circle intersection: r <= 0");
  const double eps = global_tolerance();
  const double d = dist(c1, c2);
  if (d <= eps) throw std::invalid_argument("coincident circles");
  if (std::fabs(d - 2 * r) <= eps) {
    // external tangency of equal circles: the midpoint
    return {Point{0.5 * (c1.x + c2.x), 0.5 * (c1.y + c2.y)}};
  }
  if (d > 2 * r) return {};
  const double a = d / 2;
  const double h = std::sqrt(std::max(0.0, r * r - a * a));
  const Point mid{0.5 * (c1.x + c2.x), 0.5 * (c1.y + c2.y)};
  const Point u{(c2.x - c1.x) / d, (c2.y - c1.y) / d};
  Point p1{mid.x - h * u.y, mid.y + h * u.x};
  Point p2{mid.x + h * u.y, mid.y - h * u.x};
  if (p2.x < p1.x || (p2.x == p1.x && p2.y < p1.y)) std::swap(p1, p2);
  return {p1, p2};
}

double arc_point_distance(const UnitArc& e, Point x) {
  const double d = dist(x, e.center);
  if (d < 1e-14) return 1.0;  // all arc points are at distance 1 from the center
  const double ang = std::atan2(x.y - e.center.y, x.x - e.center.x);
  if (e.contains_angle(ang)) return std::fabs(d - 1.0);
  return std::min(dist(x, e.first_endpoint()), dist(x, e.second_endpoint()));
}

bool arc_intersects_disc(const UnitArc& e, Point x) {
  return arc_point_distance(e, x) <= 1.0 + global_tolerance();
}

double CurveChain::y_at(double x) const {
  if (!covers(x)) return std::numeric_limits<double>::infinity();
  for (const CurvePiece& p : pieces)
    if (x <= p.x_hi) return p.y_at(x);
  return pieces.back().y_at(x);
}

namespace {

void push_piece(std::vector<CurvePiece>& out, CurvePiece p) {
  if (p.x_hi - p.x_lo <= 1e-15) return;
  out.push_back(p);
}

}  // namespace

MinkowskiCurves minkowski_curves(const UnitArc& e) {
  if (!e.on_lower_semicircle(1e-9))
    throw std::invalid_argument("minkowski curves: arc not on a lower semicircle");
  const double ts = std::max(e.theta_start, kPi);
  const double te = std::min(e.theta_end, kTwoPi);
  const Point c = e.center;
  const Point p1 = e.point_at(ts);
  const Point p2 = e.point_at(te);

  MinkowskiCurves mc;
  // Upper curve: upper semicircles of D(p1) and D(p2) meeting above c.
  // The center lies on both (it is at distance 1 from every arc point).
  push_piece(mc.gamma_plus.pieces,
             CurvePiece{p1, 1.0, +1, p1.x - 1.0, c.x, e.id});
  push_piece(mc.gamma_plus.pieces,
             CurvePiece{p2, 1.0, +1, c.x, p2.x + 1.0, e.id});

  // Lower curve: cap of D(p1) from its leftmost point to the radius-2
  // circle, the radius-2 arc spanning the arc's own angles, then the cap
  // of D(p2).
  const Point q1 = c + 2.0 * (p1 - c);  // = p1 + u(ts)
  const Point q2 = c + 2.0 * (p2 - c);
  push_piece(mc.gamma_minus.pieces,
             CurvePiece{p1, 1.0, -1, p1.x - 1.0, q1.x, e.id});
  push_piece(mc.gamma_minus.pieces,
             CurvePiece{c, 2.0, -1, q1.x, q2.x, e.id});
  push_piece(mc.gamma_minus.pieces,
             CurvePiece{p2, 1.0, -1, q2.x, p2.x + 1.0, e.id});
  return mc;
}

MinkowskiCurves minkowski_curves(Point p, std::int64_t id) {
  MinkowskiCurves mc;
  mc.gamma_plus.pieces.push_back(CurvePiece{p, 1.0, +1, p.x - 1.0, p.x + 1.0, id});
  mc.gamma_minus.pieces.push_back(CurvePiece{p, 1.0, -1, p.x - 1.0, p.x + 1.0, id});
  return mc;
}

HalfPlaneCapRegion tangent_line_region(const UnitArc& e) {
  const Point p1 = e.first_endpoint();
  const Point p2 = e.second_endpoint();
  const double eps = global_tolerance();
  if (dist(p1, p2) <= eps) throw std::invalid_argument("degenerate arc");

  HalfPlaneCapRegion region;
  region.center = e.center;
  region.t1 = e.center + 2.0 * (p1 - e.center);
  region.t2 = e.center + 2.0 * (p2 - e.center);
  region.line_point = region.t1;
  Point d = region.t2 - region.t1;
  const double len = norm(d);
  d = {d.x / len, d.y / len};
  if (d.x < 0 || (d.x == 0 && d.y < 0)) d = {-d.x, -d.y};
  region.line_dir = d;

  // Incidence check: the second intersection q of the endpoint circles lies
  // on the line; when the chord p1p2 is a diameter the center does.
  Point probe = e.center;
  const double chord = dist(p1, p2);
  if (chord < 2.0 - eps) {
    // q is the reflection of c across the chord line
    Point cd = p2 - p1;
    const double cl = norm(cd);
    cd = {cd.x / cl, cd.y / cl};
    const Point rel = e.center - p1;
    const double along = dot(rel, cd);
    const Point foot = p1 + along * cd;
    probe = 2.0 * foot - e.center;
  }
  const double off = std::fabs(cross(region.line_dir, probe - region.line_point));
  if (off > 1e-6)
    throw std::logic_error("tangent line region: incidence check failed");
  return region;
}

double signed_line_offset(const HalfPlaneCapRegion& region, Point x) {
  // cross > 0 means x is on the counter-clockwise side of the canonical
  // direction, i.e. above the line for dir.x > 0.
  return cross(region.line_dir, x - region.line_point);
}

bool region_contains(const HalfPlaneCapRegion& region, Point x) {
  const double eps = global_tolerance();
  if (dist(x, region.center) > 2.0 + eps) return false;
  return signed_line_offset(region, x) <= eps;
}

}  // namespace arcunion
