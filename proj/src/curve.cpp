#include "arcunion/curve.hpp"

#include <algorithm>
#include <cmath>

namespace arcunion::envelope {

namespace {

// Intersections of two circles with arbitrary radii; empty when disjoint,
// nested or coincident.
int circle_pair_points(Point c1, double r1, Point c2, double r2,
                       Point out[2]) {
  const double dx = c2.x - c1.x, dy = c2.y - c1.y;
  const double d2 = dx * dx + dy * dy;
  const double d = std::sqrt(d2);
  if (d < 1e-14) return 0;
  if (d > r1 + r2 || d < std::fabs(r1 - r2)) return 0;
  const double a = (d2 + r1 * r1 - r2 * r2) / (2.0 * d);
  const double h2 = r1 * r1 - a * a;
  const double h = h2 > 0 ? std::sqrt(h2) : 0.0;
  const double mx = c1.x + a * dx / d, my = c1.y + a * dy / d;
  out[0] = {mx - h * dy / d, my + h * dx / d};
  out[1] = {mx + h * dy / d, my - h * dx / d};
  return h > 0 ? 2 : 1;
}

// Closed-form crossing of two piece chains inside [lo, hi]: scan the piece
// pairs, keep circle intersection points lying on both pieces where the
// height difference changes sign. Returns false when no candidate fits
// (e.g. the crossing sits on an extension ray).
bool chain_crossing(const Curve& a, const Curve& b, double lo, double hi,
                    Point* out) {
  const CurvePiece* pa_begin;
  const CurvePiece* pa_end;
  const CurvePiece* pb_begin;
  const CurvePiece* pb_end;
  if (!a.pieces(&pa_begin, &pa_end) || !b.pieces(&pb_begin, &pb_end))
    return false;
  const double tol = 1e-9;
  bool have = false;
  Point best{};
  for (const CurvePiece* pa = pa_begin; pa != pa_end; ++pa) {
    if (pa->x_hi < lo - tol || pa->x_lo > hi + tol) continue;
    for (const CurvePiece* pb = pb_begin; pb != pb_end; ++pb) {
      if (pb->x_hi < lo - tol || pb->x_lo > hi + tol) continue;
      const double wlo = std::max({lo, pa->x_lo, pb->x_lo});
      const double whi = std::min({hi, pa->x_hi, pb->x_hi});
      if (whi < wlo - tol) continue;
      Point pts[2];
      const int m =
          circle_pair_points(pa->center, pa->radius, pb->center, pb->radius,
                             pts);
      for (int t = 0; t < m; ++t) {
        const Point& p = pts[t];
        if (p.x < wlo - tol || p.x > whi + tol) continue;
        // the point must lie on the right semicircle of both pieces
        if (std::fabs(pa->y_at(p.x) - p.y) > 1e-7) continue;
        if (std::fabs(pb->y_at(p.x) - p.y) > 1e-7) continue;
        // keep the crossing where a passes from below to above
        const double step = 1e-7 * (1.0 + std::fabs(p.x));
        const double fl = a.y_at(p.x - step) - b.y_at(p.x - step);
        const double fr = a.y_at(p.x + step) - b.y_at(p.x + step);
        if (fl <= 0.0 && fr >= 0.0) {
          if (!have || p.x < best.x) best = p;
          have = true;
        }
      }
    }
  }
  if (have) *out = best;
  return have;
}

}  // namespace

Point curve_crossing(const Curve& a, const Curve& b, double lo, double hi) {
  if (a.kind() == Curve::Kind::Line && b.kind() == Curve::Kind::Line) {
    const double da = a.slope() - b.slope();
    if (da == 0.0) {
      // Parallel pair: the crossing degenerates to +-infinity. The lower
      // line keeps the whole envelope (ties go to a, which precedes b).
      return a.intercept() <= b.intercept() ? Point{kInfX, a.y_at(kInfX)}
                                            : Point{-kInfX, a.y_at(-kInfX)};
    }
    const double x = (b.intercept() - a.intercept()) / da;
    return {x, a.y_at(x)};
  }
  if (lo > hi) std::swap(lo, hi);
  if (lo <= -0.5 * kInfX) lo = std::min(a.domain_lo(), b.domain_lo()) - 1.0;
  if (hi >= 0.5 * kInfX) hi = std::max(a.domain_hi(), b.domain_hi()) + 1.0;
  if (Point p; chain_crossing(a, b, lo, hi, &p)) return p;
  double flo = a.y_at(lo) - b.y_at(lo);
  double fhi = a.y_at(hi) - b.y_at(hi);
  if (flo > 0.0) return {lo, std::min(a.y_at(lo), b.y_at(lo))};
  if (fhi < 0.0) return {hi, std::min(a.y_at(hi), b.y_at(hi))};
  while (hi - lo > 1e-12 * (1.0 + std::fabs(lo) + std::fabs(hi))) {
    const double mid = 0.5 * (lo + hi);
    const double f = a.y_at(mid) - b.y_at(mid);
    if (f <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double x = 0.5 * (lo + hi);
  return {x, std::min(a.y_at(x), b.y_at(x))};
}

}  // namespace arcunion::envelope
