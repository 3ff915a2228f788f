#include "arcunion/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace arcunion::oracle {

using envelope::ChainSegment;
using envelope::Curve;

std::vector<EnvelopeSample> naive_envelope(
    const std::vector<const Curve*>& curves, const std::vector<double>& xs) {
  std::vector<EnvelopeSample> out;
  out.reserve(xs.size());
  for (double x : xs) {
    double best = std::numeric_limits<double>::infinity();
    std::int64_t id = -1;
    for (const Curve* c : curves) {
      const double y = c->y_at(x);
      if (y < best || (y == best && c->id() < id)) {
        best = y;
        id = c->id();
      }
    }
    out.push_back({best, id});
  }
  return out;
}

WalkCross walk_envelope_crossing(const std::vector<ChainSegment>& a,
                                 const std::vector<ChainSegment>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("walk crossing: empty envelope");
  std::size_t i = 0, j = 0;
  Point q{};
  bool have = false;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].x_lo, b[j].x_lo);
    const double hi = std::min(a[i].x_hi, b[j].x_hi);
    if (lo <= hi) {
      const double fl = a[i].curve->y_at(lo) - b[j].curve->y_at(lo);
      const double fh = a[i].curve->y_at(hi) - b[j].curve->y_at(hi);
      if (fl <= 0.0 && fh >= 0.0) {
        q = envelope::curve_crossing(*a[i].curve, *b[j].curve, lo, hi);
        have = true;
        break;
      }
    }
    if (a[i].x_hi <= b[j].x_hi)
      ++i;
    else
      ++j;
  }
  if (!have) throw std::logic_error("walk crossing: no crossing found");
  WalkCross w;
  w.q = q;
  w.u_index = 0;
  while (w.u_index + 1 < static_cast<int>(a.size()) &&
         !(a[w.u_index].x_lo < q.x && q.x <= a[w.u_index].x_hi))
    ++w.u_index;
  w.v_index = 0;
  while (w.v_index + 1 < static_cast<int>(b.size()) &&
         !(b[w.v_index].x_lo <= q.x && q.x < b[w.v_index].x_hi))
    ++w.v_index;
  return w;
}

std::vector<DiscArcs> naive_boundary(const std::vector<Point>& centers) {
  const std::size_t n = centers.size();
  const double eps = global_tolerance();
  std::vector<DiscArcs> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool duplicate_of_earlier = false;
    // covered angular intervals, as [lo, hi] with lo in [0, 2*pi), split at
    // the wrap
    std::vector<std::pair<double, double>> cov;
    for (std::size_t j = 0; j < n && !duplicate_of_earlier; ++j) {
      if (j == i) continue;
      const double d = dist(centers[i], centers[j]);
      if (d <= eps) {
        if (j < i) duplicate_of_earlier = true;  // earlier copy owns the circle
        continue;
      }
      if (d >= 2.0) continue;
      const double phi = std::atan2(centers[j].y - centers[i].y,
                                    centers[j].x - centers[i].x);
      const double alpha = std::acos(d / 2.0);
      double lo = norm_angle(phi - alpha);
      double hi = lo + 2.0 * alpha;
      if (hi <= kTwoPi) {
        cov.push_back({lo, hi});
      } else {
        cov.push_back({lo, kTwoPi});
        cov.push_back({0.0, hi - kTwoPi});
      }
    }
    if (duplicate_of_earlier) continue;
    if (cov.empty()) {
      out[i].push_back({0.0, kTwoPi});
      continue;
    }
    std::sort(cov.begin(), cov.end());
    std::vector<std::pair<double, double>> merged;
    for (auto& iv : cov) {
      if (!merged.empty() && iv.first <= merged.back().second + 1e-15)
        merged.back().second = std::max(merged.back().second, iv.second);
      else
        merged.push_back(iv);
    }
    // complement within [0, 2*pi)
    DiscArcs arcs;
    if (merged.front().first > 0.0 || merged.back().second < kTwoPi) {
      for (std::size_t t = 0; t + 1 < merged.size(); ++t)
        if (merged[t + 1].first > merged[t].second)
          arcs.push_back({merged[t].second, merged[t + 1].first});
      // the wrapping gap from the last covered end to the first covered start
      const double tail = merged.back().second;
      const double head = merged.front().first;
      if (tail < kTwoPi && head > 0.0)
        arcs.push_back({tail, head + kTwoPi});
      else if (tail < kTwoPi)
        arcs.push_back({tail, kTwoPi});
      else if (head > 0.0)
        arcs.push_back({0.0, head});
    } else {
      for (std::size_t t = 0; t + 1 < merged.size(); ++t)
        if (merged[t + 1].first > merged[t].second)
          arcs.push_back({merged[t].second, merged[t + 1].first});
    }
    // canonical form: start in [0, 2*pi), sorted, zero-length dropped
    DiscArcs canon;
    for (auto [lo, hi] : arcs) {
      if (hi - lo <= 1e-12) continue;
      const double s = norm_angle(lo);
      canon.push_back({s, s + (hi - lo)});
    }
    std::sort(canon.begin(), canon.end());
    out[i] = std::move(canon);
  }
  return out;
}

double union_area_from_boundary(const std::vector<Point>& centers,
                                const std::vector<DiscArcs>& boundary) {
  double acc = 0.0;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const Point c = centers[i];
    for (auto [a0, a1] : boundary[i]) {
      const Point pa{c.x + std::cos(a0), c.y + std::sin(a0)};
      const Point pb{c.x + std::cos(a1), c.y + std::sin(a1)};
      acc += 0.5 * (cross(c, pb - pa) + (a1 - a0));
    }
  }
  return acc;
}

double naive_union_area(const std::vector<Point>& centers) {
  return union_area_from_boundary(centers, naive_boundary(centers));
}

McEstimate mc_area(const std::vector<Point>& centers, std::size_t samples,
                   std::uint64_t seed) {
  if (centers.empty()) return {0.0, 0.0};
  double xmin = centers[0].x, xmax = centers[0].x;
  double ymin = centers[0].y, ymax = centers[0].y;
  for (const Point& c : centers) {
    xmin = std::min(xmin, c.x);
    xmax = std::max(xmax, c.x);
    ymin = std::min(ymin, c.y);
    ymax = std::max(ymax, c.y);
  }
  xmin -= 1.0;
  xmax += 1.0;
  ymin -= 1.0;
  ymax += 1.0;

  // bucket the centers on a unit grid so each point test is local
  std::map<std::pair<long, long>, std::vector<Point>> buckets;
  for (const Point& c : centers)
    buckets[{static_cast<long>(std::floor(c.x)),
             static_cast<long>(std::floor(c.y))}]
        .push_back(c);
  auto in_union = [&](Point p) {
    const long bx = static_cast<long>(std::floor(p.x));
    const long by = static_cast<long>(std::floor(p.y));
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy) {
        auto it = buckets.find({bx + dx, by + dy});
        if (it == buckets.end()) continue;
        for (const Point& c : it->second) {
          const double ddx = p.x - c.x, ddy = p.y - c.y;
          if (ddx * ddx + ddy * ddy <= 1.0) return true;
        }
      }
    return false;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(xmin, xmax), uy(ymin, ymax);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s)
    if (in_union({ux(rng), uy(rng)})) ++hits;
  const double box = (xmax - xmin) * (ymax - ymin);
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  McEstimate r;
  r.estimate = box * p;
  r.std_error = box * std::sqrt(std::max(p * (1.0 - p), 1e-12) /
                                static_cast<double>(samples));
  return r;
}

std::vector<std::int64_t> naive_arc_query(const std::vector<UnitArc>& arcs,
                                          Point x) {
  std::vector<std::int64_t> out;
  for (const UnitArc& e : arcs)
    if (arc_intersects_disc(e, x)) out.push_back(e.id);
  std::sort(out.begin(), out.end());
  return out;
}

double lens_area(double d) {
  if (d >= 2.0) return 0.0;
  if (d <= 0.0) return kPi;
  return 2.0 * std::acos(d / 2.0) - (d / 2.0) * std::sqrt(4.0 - d * d);
}

double two_disc_union_area(double d) { return 2.0 * kPi - lens_area(d); }

double triple_intersection_area(Point a, Point b, Point c) {
  const Point ctr[3] = {a, b, c};
  const double eps = 1e-12;
  // duplicates collapse to the two-disc case
  if (dist(a, b) <= eps) return lens_area(dist(a, c));
  if (dist(a, c) <= eps || dist(b, c) <= eps) return lens_area(dist(a, b));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (dist(ctr[i], ctr[j]) >= 2.0) return 0.0;

  struct Vertex {
    Point p;
    int i, j;  // the two circles meeting at p
  };
  std::vector<Vertex> verts;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const int k = 3 - i - j;
      for (const Point& p : circle_circle_intersections(ctr[i], ctr[j], 1.0))
        if (dist(p, ctr[k]) <= 1.0 + 1e-12) verts.push_back({p, i, j});
    }
  if (verts.empty()) return 0.0;
  if (verts.size() == 1) return 0.0;  // tangential contact

  Point centroid{0, 0};
  for (const Vertex& v : verts) centroid = centroid + v.p;
  centroid = (1.0 / static_cast<double>(verts.size())) * centroid;
  std::sort(verts.begin(), verts.end(), [&](const Vertex& l, const Vertex& r) {
    return std::atan2(l.p.y - centroid.y, l.p.x - centroid.x) <
           std::atan2(r.p.y - centroid.y, r.p.x - centroid.x);
  });

  double acc = 0.0;
  const std::size_t m = verts.size();
  for (std::size_t t = 0; t < m; ++t) {
    const Vertex& v0 = verts[t];
    const Vertex& v1 = verts[(t + 1) % m];
    // pick the disc whose circle carries the boundary arc from v0 to v1:
    // both endpoints on it and the arc midpoint inside the other two discs
    bool done = false;
    for (int d = 0; d < 3 && !done; ++d) {
      if (std::fabs(dist(v0.p, ctr[d]) - 1.0) > 1e-9) continue;
      if (std::fabs(dist(v1.p, ctr[d]) - 1.0) > 1e-9) continue;
      const double t0 =
          std::atan2(v0.p.y - ctr[d].y, v0.p.x - ctr[d].x);
      double t1 = std::atan2(v1.p.y - ctr[d].y, v1.p.x - ctr[d].x);
      while (t1 <= t0) t1 += kTwoPi;
      const double tm = 0.5 * (t0 + t1);
      const Point mid{ctr[d].x + std::cos(tm), ctr[d].y + std::sin(tm)};
      bool inside = true;
      for (int o = 0; o < 3; ++o)
        if (o != d && dist(mid, ctr[o]) > 1.0 + 1e-9) inside = false;
      if (!inside) continue;
      acc += 0.5 * (cross(ctr[d], v1.p - v0.p) + (t1 - t0));
      done = true;
    }
    if (!done)
      throw std::logic_error("triple intersection: no carrier arc found");
  }
  return acc;
}

double three_disc_union_area(Point a, Point b, Point c) {
  double area = 3.0 * kPi;
  area -= lens_area(dist(a, b));
  area -= lens_area(dist(a, c));
  area -= lens_area(dist(b, c));
  area += triple_intersection_area(a, b, c);
  return area;
}

}  // namespace arcunion::oracle
