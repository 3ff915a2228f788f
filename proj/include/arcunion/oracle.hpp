#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "arcunion/chain.hpp"
#include "arcunion/curve.hpp"
#include "arcunion/geom.hpp"

// Brute-force references used by tests and the acceptance suite. These share
// only the geom primitives with the fast paths, never their search logic.

namespace arcunion::oracle {

// Pointwise envelope minimum by linear scan.
struct EnvelopeSample {
  double y;
  std::int64_t curve_id;
};
std::vector<EnvelopeSample> naive_envelope(
    const std::vector<const envelope::Curve*>& curves,
    const std::vector<double>& xs);

// Crossing of two envelopes given as segment lists (all curves of `a`
// preceding all of `b`), found by a linear two-finger walk.
struct WalkCross {
  Point q;
  int u_index;  // segment of `a` whose half-open (lo, hi] interval holds q
  int v_index;  // segment of `b` whose [lo, hi) interval holds q
};
WalkCross walk_envelope_crossing(const std::vector<envelope::ChainSegment>& a,
                                 const std::vector<envelope::ChainSegment>& b);

// Maximal boundary arcs of the union of unit discs, per disc, as angular
// intervals (start in [0, 2*pi), positive span; a full circle is (0, 2*pi)).
// Classical quadratic construction: subtract from each circle the angular
// ranges covered by every other disc.
using DiscArcs = std::vector<std::pair<double, double>>;
std::vector<DiscArcs> naive_boundary(const std::vector<Point>& centers);

// Exact union area from the naive boundary via the circular-arc shoelace
// (Green's theorem with per-arc circular-segment terms).
double union_area_from_boundary(const std::vector<Point>& centers,
                                const std::vector<DiscArcs>& boundary);
double naive_union_area(const std::vector<Point>& centers);

// Rejection-sampling area estimate over the union's bounding box.
struct McEstimate {
  double estimate;
  double std_error;
};
McEstimate mc_area(const std::vector<Point>& centers, std::size_t samples,
                   std::uint64_t seed);

// Linear scan of arcs intersecting the unit disc around x.
std::vector<std::int64_t> naive_arc_query(const std::vector<UnitArc>& arcs,
                                          Point x);

// Closed forms: intersection area of two unit discs at center distance d,
// union of two, and the three-disc cases.
double lens_area(double d);
double two_disc_union_area(double d);
double triple_intersection_area(Point a, Point b, Point c);
double three_disc_union_area(Point a, Point b, Point c);

}  // namespace arcunion::oracle
