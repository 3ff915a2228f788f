#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

// Low-level primitives shared by every structure in the library: points,
// unit-radius circular arcs, offset (Minkowski-sum) curves and the
// epsilon-tolerant predicates built on them.
//
// All values are immutable after construction and safe to share across
// threads.

namespace arcunion {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Global incidence/ordering tolerance. Comparisons within the tolerance are
// resolved by deterministic tie-breaks (lower id first).
double& global_tolerance();

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

// Angle normalized to [0, 2*pi).
double norm_angle(double a);

// Unit-radius circular arc: the points center + (cos t, sin t) for
// t in [theta_start, theta_end], traversed counter-clockwise.
// Invariants: theta_start in [0, 2*pi), 0 < theta_end - theta_start <= 2*pi.
struct UnitArc {
  Point center;
  double theta_start = 0.0;
  double theta_end = 0.0;
  std::int64_t id = -1;

  Point point_at(double theta) const {
    return {center.x + std::cos(theta), center.y + std::sin(theta)};
  }
  Point first_endpoint() const { return point_at(theta_start); }
  Point second_endpoint() const { return point_at(theta_end); }
  double span() const { return theta_end - theta_start; }

  // True when the normalized angle falls inside the arc interval
  // (ang_tol widens both ends).
  bool contains_angle(double theta, double ang_tol = 0.0) const;

  // Arcs entirely on the closed lower semicircle, i.e. the angular interval
  // fits in [pi, 2*pi] (no wrap through angle 0).
  bool on_lower_semicircle(double ang_tol = 1e-12) const {
    return theta_start >= kPi - ang_tol && theta_end <= kTwoPi + ang_tol;
  }
};

// Throws std::invalid_argument on non-finite input or zero angular extent.
UnitArc make_unit_arc(Point center, double theta_start, double theta_end,
                      std::int64_t id = -1);

// |p - c| <= r within the global tolerance.
bool disc_contains(Point p, Point c, double r);

// Intersection points of two radius-r circles, sorted by (x, y).
// Tangency within tolerance yields exactly one point. Coincident centers
// throw std::invalid_argument("coincident circles").
std::vector<Point> circle_circle_intersections(Point c1, Point c2, double r);

// Exact distance from a point to an arc (closest angular point clamped to
// the arc's interval, otherwise the nearer endpoint).
double arc_point_distance(const UnitArc& e, Point x);

// Some point of e lies within distance 1 of x (epsilon-tolerant). The unit
// disc D(x) intersects e exactly under this predicate.
bool arc_intersects_disc(const UnitArc& e, Point x);

// One x-monotone circular piece of an offset curve:
// y(x) = center.y + sign * sqrt(radius^2 - (x - center.x)^2) on [x_lo, x_hi].
struct CurvePiece {
  Point center;
  double radius = 1.0;
  int sign = -1;  // -1 lower semicircle piece, +1 upper semicircle piece
  double x_lo = 0.0;
  double x_hi = 0.0;
  std::int64_t source_arc_id = -1;

  double y_at(double x) const {
    double dx = x - center.x;
    double s = radius * radius - dx * dx;
    if (s < 0) s = 0;
    return center.y + sign * std::sqrt(s);
  }
};

// An x-monotone chain of circular pieces with contiguous domains.
struct CurveChain {
  std::vector<CurvePiece> pieces;

  double x_lo() const { return pieces.front().x_lo; }
  double x_hi() const { return pieces.back().x_hi; }
  bool covers(double x) const { return !pieces.empty() && x >= x_lo() && x <= x_hi(); }
  // +infinity outside the domain.
  double y_at(double x) const;
};

// Upper and lower boundary curves of the Minkowski sum e + D(0,1), split at
// the x-extremal points. Requires e to be a piece of a lower semicircle
// (throws std::invalid_argument otherwise).
//
// gamma_plus:  upper envelope of the unit circles around the two endpoints
//              (two upper pieces joined above the arc's center).
// gamma_minus: lower cap of D(p1), the radius-2 arc around the center, and
//              the lower cap of D(p2).
struct MinkowskiCurves {
  CurveChain gamma_plus;
  CurveChain gamma_minus;
};
MinkowskiCurves minkowski_curves(const UnitArc& e);
// Degenerate point "arc": both curves are the semicircles of D(p).
MinkowskiCurves minkowski_curves(Point p, std::int64_t id = -1);

// The region D+(c) `cap` l^- used by the arc/disc intersection criteria:
// the radius-2 disc around the arc's center, intersected with the closed
// half-plane on the "below" side of the line through the two tangency
// points t1 = c + 2(p1 - c), t2 = c + 2(p2 - c).
struct HalfPlaneCapRegion {
  Point center;      // c
  Point t1, t2;      // tangency points on the radius-2 circle
  Point line_point;  // point on l
  Point line_dir;    // canonical direction (dir.x > 0, or (0,1) if vertical)
};

// Throws std::invalid_argument("degenerate arc") when the endpoints
// coincide. Verifies the incidence property of the construction: the second
// intersection q of the endpoint circles (or c, when the chord is a
// diameter) lies on the line.
HalfPlaneCapRegion tangent_line_region(const UnitArc& e);

// x in D+(c) and on or below the line, both epsilon-tolerant.
bool region_contains(const HalfPlaneCapRegion& region, Point x);

// Signed distance of x from the region's line; negative is below.
double signed_line_offset(const HalfPlaneCapRegion& region, Point x);

}  // namespace arcunion
