#include "arcunion/disc_union.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arcunion {

namespace {

using Interval = std::pair<double, double>;

// Green's theorem contribution of a radius-1 arc around c spanning
// [a0, a1], traversed counter-clockwise.
double arc_green(Point c, double a0, double a1) {
  const Point pa{c.x + std::cos(a0), c.y + std::sin(a0)};
  const Point pb{c.x + std::cos(a1), c.y + std::sin(a1)};
  return 0.5 * (cross(c, pb - pa) + (a1 - a0));
}

// Canonical form: start in [0, 2*pi), end = start + span, sorted by start.
// Arcs meeting across the angle-zero wrap fuse into one wrapping arc.
std::vector<Interval> canonicalize(std::vector<Interval> arcs) {
  std::vector<Interval> out;
  for (auto [a, b] : arcs) {
    if (b - a <= 1e-12) continue;
    if (b - a >= kTwoPi - 1e-12) {
      out.push_back({0.0, kTwoPi});
      continue;
    }
    const double s = norm_angle(a);
    out.push_back({s, s + (b - a)});
  }
  std::sort(out.begin(), out.end());
  // fuse adjacent arcs (subtraction and status walks can split one maximal
  // arc at an artificial seam)
  std::vector<Interval> fused;
  for (const Interval& iv : out) {
    if (!fused.empty() && iv.first - fused.back().second <= 1e-11 &&
        iv.first - fused.back().second >= -1e-11)
      fused.back().second += iv.second - iv.first;
    else
      fused.push_back(iv);
  }
  if (fused.size() >= 2) {
    const double seam = norm_angle(fused.back().second);
    if (std::fabs(seam - fused.front().first) <= 1e-11) {
      Interval merged{fused.back().first,
                      fused.back().second +
                          (fused.front().second - fused.front().first)};
      fused.erase(fused.begin());
      fused.back() = merged;
      if (merged.second - merged.first >= kTwoPi - 1e-12)
        fused = {{0.0, kTwoPi}};
      else {
        const double s = norm_angle(merged.first);
        fused.back() = {s, s + (merged.second - merged.first)};
        std::sort(fused.begin(), fused.end());
      }
    }
  }
  return fused;
}

// Subtracts the removed intervals from one canonical arc list.
std::vector<Interval> subtract_intervals(const std::vector<Interval>& arcs,
                                         const std::vector<Interval>& removed) {
  std::vector<Interval> kept;
  for (auto [s, e] : arcs) {
    std::vector<Interval> cuts;
    for (auto [a, b] : removed)
      for (int shift = -1; shift <= 1; ++shift) {
        const double aa = a + shift * kTwoPi;
        const double bb = b + shift * kTwoPi;
        const double lo = std::max(aa, s);
        const double hi = std::min(bb, e);
        if (hi > lo + 1e-15) cuts.push_back({lo, hi});
      }
    if (cuts.empty()) {
      kept.push_back({s, e});
      continue;
    }
    std::sort(cuts.begin(), cuts.end());
    double at = s;
    for (auto [lo, hi] : cuts) {
      if (lo > at + 1e-12) kept.push_back({at, lo});
      at = std::max(at, hi);
    }
    if (e > at + 1e-12) kept.push_back({at, e});
  }
  return canonicalize(kept);
}

bool same_arc(const Interval& a, const Interval& b, double tol = 1e-9) {
  return std::fabs(a.first - b.first) <= tol &&
         std::fabs(a.second - b.second) <= tol;
}

// Multiset difference of canonical arc lists under endpoint tolerance.
void diff_arcs(int disc, const std::vector<Interval>& before,
               const std::vector<Interval>& after,
               std::vector<InsertionReport::MaxArc>* removed,
               std::vector<InsertionReport::MaxArc>* added) {
  std::vector<bool> matched(after.size(), false);
  for (const Interval& iv : before) {
    bool found = false;
    for (std::size_t t = 0; t < after.size() && !found; ++t)
      if (!matched[t] && same_arc(iv, after[t])) {
        matched[t] = true;
        found = true;
      }
    if (!found) removed->push_back({disc, iv.first, iv.second});
  }
  for (std::size_t t = 0; t < after.size(); ++t)
    if (!matched[t]) added->push_back({disc, after[t].first, after[t].second});
}

}  // namespace

RebuildResult rebuild_boundary(const std::vector<UnitArc>& arcs, Point x) {
  const double eps = global_tolerance();
  if (arcs.empty())
    throw std::invalid_argument("rebuild boundary: empty arc set");
  // pairwise interior disjointness
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const UnitArc& a = arcs[i];
      const UnitArc& b = arcs[j];
      if (dist(a.center, b.center) <= eps) {
        auto overlaps = [](const UnitArc& u, const UnitArc& v) {
          const double rel = norm_angle(v.theta_start - u.theta_start);
          return rel < u.span() - 1e-7 &&
                 std::min(u.span() - rel, v.span()) > 1e-7;
        };
        if (overlaps(a, b) || overlaps(b, a))
          throw std::invalid_argument("invariant violation");
        continue;
      }
      if (dist(a.center, b.center) >= 2.0) continue;
      for (const Point& p : circle_circle_intersections(a.center, b.center,
                                                        1.0)) {
        const double aa = std::atan2(p.y - a.center.y, p.x - a.center.x);
        const double ab = std::atan2(p.y - b.center.y, p.x - b.center.x);
        const double ra = norm_angle(aa - a.theta_start);
        const double rb = norm_angle(ab - b.theta_start);
        if (ra > 1e-7 && ra < a.span() - 1e-7 && rb > 1e-7 &&
            rb < b.span() - 1e-7)
          throw std::invalid_argument("invariant violation");
      }
    }

  RebuildResult out;
  struct XCut {
    double ang;    // angle on the new circle
    bool entering; // counter-clockwise travel enters the arc's disc here
  };
  std::vector<XCut> xcuts;
  double green = 0.0;
  bool any_inside = false;
  for (const UnitArc& e : arcs) {
    const double d = dist(e.center, x);
    std::vector<double> cuts;
    if (d > eps && std::fabs(d - 2.0) > eps && d < 2.0) {
      for (const Point& p : circle_circle_intersections(e.center, x, 1.0)) {
        const double ang_e = std::atan2(p.y - e.center.y, p.x - e.center.x);
        if (!e.contains_angle(ang_e, 1e-12)) continue;
        double rel = norm_angle(ang_e - e.theta_start);
        if (rel > e.span()) rel = (rel - e.span() <= kTwoPi - rel) ? e.span() : 0.0;
        cuts.push_back(e.theta_start + rel);
        const double ax = std::atan2(p.y - x.y, p.x - x.x);
        const Point tangent{-(p.y - x.y), p.x - x.x};
        xcuts.push_back({norm_angle(ax),
                         dot(tangent, e.center - p) > 0.0});
      }
    }
    if (d <= eps) continue;  // coincident circle: the piece survives as is
    for (double& cv : cuts) cv = std::clamp(cv, e.theta_start, e.theta_end);
    cuts.push_back(e.theta_start);
    cuts.push_back(e.theta_end);
    std::sort(cuts.begin(), cuts.end());
    std::vector<Interval> local_removed, local_kept;
    for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
      if (cuts[t + 1] - cuts[t] <= 1e-12) continue;
      const double mid = 0.5 * (cuts[t] + cuts[t + 1]);
      const Point m = e.point_at(mid);
      if (dist(m, x) < 1.0) {
        any_inside = true;
        local_removed.push_back({cuts[t], cuts[t + 1]});
        green += arc_green(e.center, cuts[t], cuts[t + 1]);
      } else if (cuts.size() > 2) {
        local_kept.push_back({cuts[t], cuts[t + 1]});
      }
    }
    // canonical per-arc form (pieces of a full-circle arc wrap-merge)
    for (const Interval& iv : canonicalize(local_removed))
      out.removed.push_back(make_unit_arc(e.center, iv.first, iv.second, e.id));
    for (const Interval& iv : canonicalize(local_kept))
      out.kept.push_back(make_unit_arc(e.center, iv.first, iv.second, e.id));
  }

  std::sort(xcuts.begin(), xcuts.end(),
            [](const XCut& a, const XCut& b) { return a.ang < b.ang; });
  xcuts.erase(std::unique(xcuts.begin(), xcuts.end(),
                          [](const XCut& a, const XCut& b) {
                            return b.ang - a.ang < 1e-11;
                          }),
              xcuts.end());
  std::vector<Interval> x_out;
  if (xcuts.empty()) {
    if (!any_inside) {
      out.area_delta = 0.0;  // tangential contact only
      return out;
    }
    // arcs strictly inside the uncrossed circle: the circle lies in the
    // union and the disc only fills holes
    green += arc_green(x, 0.0, kTwoPi);
  } else {
    for (std::size_t t = 0; t < xcuts.size(); ++t) {
      const double a0 = xcuts[t].ang;
      const double a1 =
          t + 1 < xcuts.size() ? xcuts[t + 1].ang : xcuts.front().ang + kTwoPi;
      if (a1 - a0 <= 1e-12) continue;
      // just past a crossing, the circle is inside the union exactly when
      // it entered the crossed arc's disc
      if (xcuts[t].entering)
        green += arc_green(x, a0, a1);
      else
        x_out.push_back({a0, a1});
    }
  }
  for (const Interval& iv : canonicalize(x_out))
    out.added.push_back(make_unit_arc(x, iv.first, iv.second, -1));
  out.area_delta = kPi - green;
  if (out.area_delta < 0 && out.area_delta > -1e-9) out.area_delta = 0.0;
  return out;
}

std::vector<CellKey> DiscUnion::cells_in_range(Point x) const {
  std::vector<CellKey> out;
  const std::int64_t i0 =
      static_cast<std::int64_t>(std::floor((x.x - 1.0) / kCellSide)) - 1;
  const std::int64_t i1 =
      static_cast<std::int64_t>(std::floor((x.x + 1.0) / kCellSide)) + 1;
  const std::int64_t j0 =
      static_cast<std::int64_t>(std::floor((x.y - 1.0) / kCellSide)) - 1;
  const std::int64_t j1 =
      static_cast<std::int64_t>(std::floor((x.y + 1.0) / kCellSide)) + 1;
  for (std::int64_t i = i0; i <= i1; ++i)
    for (std::int64_t j = j0; j <= j1; ++j)
      if (cell_point_distance({i, j}, x) <= 1.0 + 1e-12)
        out.push_back({i, j});
  return out;
}

bool DiscUnion::in_union(Point p) const {
  // inclusive by a hair: status probes can land exactly on the boundary
  // when circles coincide
  auto it = cells_.find(cell_key_for(p));
  if (it == cells_.end()) return false;
  for (int d : it->second.discs) {
    const double dx = p.x - centers_[d].x, dy = p.y - centers_[d].y;
    if (dx * dx + dy * dy <= 1.0 + 1e-12) return true;
  }
  return false;
}

void DiscUnion::add_disc_to_lists(int disc, const std::vector<CellKey>& range) {
  for (CellKey k : range) cells_[k].discs.push_back(disc);
}

void DiscUnion::insert_piece(int disc, double a0, double a1, CellKey cell) {
  if (a1 - a0 <= 1e-12) return;
  const std::uint64_t pid = next_piece_++;
  UnitArc arc = make_unit_arc(centers_[disc], a0, a1,
                              static_cast<std::int64_t>(pid));
  pieces_[pid] = PieceRec{disc, arc.theta_start, arc.theta_end, cell};
  cells_[cell].insert_piece(cell, pid, arc);
}

void DiscUnion::insert_arc_split_by_grid(int disc, double a0, double a1) {
  const Point c = centers_[disc];
  std::vector<double> cuts;
  auto add_cut = [&](double ang) {
    const double rel = norm_angle(ang - a0);
    if (rel > 1e-12 && rel < a1 - a0 - 1e-12) cuts.push_back(a0 + rel);
  };
  const std::int64_t gi0 =
      static_cast<std::int64_t>(std::ceil((c.x - 1.0) / kCellSide));
  const std::int64_t gi1 =
      static_cast<std::int64_t>(std::floor((c.x + 1.0) / kCellSide));
  for (std::int64_t i = gi0; i <= gi1; ++i) {
    const double dx = static_cast<double>(i) * kCellSide - c.x;
    if (std::fabs(dx) >= 1.0) continue;
    const double a = std::acos(dx);
    add_cut(a);
    add_cut(-a);
  }
  const std::int64_t gj0 =
      static_cast<std::int64_t>(std::ceil((c.y - 1.0) / kCellSide));
  const std::int64_t gj1 =
      static_cast<std::int64_t>(std::floor((c.y + 1.0) / kCellSide));
  for (std::int64_t j = gj0; j <= gj1; ++j) {
    const double dy = static_cast<double>(j) * kCellSide - c.y;
    if (std::fabs(dy) >= 1.0) continue;
    const double a = std::asin(dy);
    add_cut(a);
    add_cut(kPi - a);
  }
  cuts.push_back(a0);
  cuts.push_back(a1);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return b - a < 1e-12; }),
             cuts.end());
  for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
    const double mid = 0.5 * (cuts[t] + cuts[t + 1]);
    const Point m{c.x + std::cos(mid), c.y + std::sin(mid)};
    insert_piece(disc, cuts[t], cuts[t + 1], cell_key_for(m));
  }
}

void DiscUnion::add_full_circle(int disc) {
  insert_arc_split_by_grid(disc, 0.0, kTwoPi);
}

InsertionReport DiscUnion::insert_disc(Point x) {
  if (!std::isfinite(x.x) || !std::isfinite(x.y))
    throw std::invalid_argument("disc union: non-finite center");
  InsertionReport rep;
  const double eps = global_tolerance();
  const int disc = static_cast<int>(centers_.size());
  centers_.push_back(x);
  disc_boundary_.emplace_back();

  const std::vector<CellKey> range = cells_in_range(x);

  // Step 1+2: collect boundary arcs intersecting the new disc.
  std::vector<std::uint64_t> cand;
  for (CellKey k : range) {
    auto it = cells_.find(k);
    if (it == cells_.end() || !it->second.has_pieces()) continue;
    auto q = it->second.query_disc(k, x);
    cand.insert(cand.end(), q.ids.begin(), q.ids.end());
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<std::uint64_t> hit;
  for (std::uint64_t id : cand) {
    const PieceRec& pr = pieces_.at(id);
    const UnitArc arc = make_unit_arc(centers_[pr.disc], pr.a0, pr.a1,
                                      static_cast<std::int64_t>(id));
    if (arc_intersects_disc(arc, x)) hit.push_back(id);
  }

  if (hit.empty()) {
    // no boundary involved: either swallowed or brand new
    const bool active = cells_.count(cell_key_for(x)) > 0;
    if (active) {
      rep.classification = InsertionReport::Class::Contained;
    } else {
      rep.classification = InsertionReport::Class::Disjoint;
      rep.area_delta = kPi;
      area_ += kPi;
      disc_boundary_[disc] = {{0.0, kTwoPi}};
      add_full_circle(disc);
    }
    add_disc_to_lists(disc, range);
    return rep;
  }

  // ----- normal insertion -----
  // Crossings of the new circle with the hit pieces.
  std::vector<double> xcuts;  // angles on the new circle
  std::unordered_map<std::uint64_t, std::vector<double>> piece_cuts;
  std::set<std::uint64_t> coincident_pieces;
  for (std::uint64_t id : hit) {
    const PieceRec& pr = pieces_.at(id);
    const Point c = centers_[pr.disc];
    const double d = dist(c, x);
    if (d <= eps) {
      coincident_pieces.insert(id);  // same circle: piece survives as is
      continue;
    }
    if (std::fabs(d - 2.0) <= eps) {
      ++rep.tangential_events;
      continue;
    }
    if (d >= 2.0) continue;
    const UnitArc arc = make_unit_arc(c, pr.a0, pr.a1, 0);
    const double span = arc.theta_end - arc.theta_start;
    for (const Point& p : circle_circle_intersections(c, x, 1.0)) {
      const double ang_e = std::atan2(p.y - c.y, p.x - c.x);
      if (!arc.contains_angle(ang_e, 1e-12)) continue;
      double rel = norm_angle(ang_e - arc.theta_start);
      if (rel > span) rel = (rel - span <= kTwoPi - rel) ? span : 0.0;
      piece_cuts[id].push_back(arc.theta_start + rel);
      xcuts.push_back(std::atan2(p.y - x.y, p.x - x.x));
    }
  }
  if (!coincident_pieces.empty()) {
    // the new circle coincides with an existing one: nothing changes
    rep.classification = InsertionReport::Class::Contained;
    add_disc_to_lists(disc, range);
    return rep;
  }

  for (double& a : xcuts) a = norm_angle(a);
  std::sort(xcuts.begin(), xcuts.end());
  {
    auto ne = std::unique(xcuts.begin(), xcuts.end(), [&](double a, double b) {
      return b - a < 1e-11;
    });
    rep.tangential_events += static_cast<int>(xcuts.end() - ne);
    xcuts.erase(ne, xcuts.end());
    if (xcuts.size() >= 2 &&
        (xcuts.front() + kTwoPi) - xcuts.back() < 1e-11) {
      xcuts.pop_back();
      ++rep.tangential_events;
    }
  }

  // Trim the hit pieces against the new disc.
  struct Kept {
    int disc;
    double a0, a1;
    CellKey cell;
  };
  std::vector<Kept> kept_parts;
  std::map<int, std::vector<Interval>> removed_by_disc;
  std::vector<std::uint64_t> dirty;  // pieces to delete from the structures
  double green = 0.0;
  bool any_strict_inside = false;

  for (std::uint64_t id : hit) {
    if (coincident_pieces.count(id)) continue;
    const PieceRec& pr = pieces_.at(id);
    const Point c = centers_[pr.disc];
    std::vector<double> cuts;
    if (auto it = piece_cuts.find(id); it != piece_cuts.end())
      cuts = it->second;
    for (double& cv : cuts) cv = std::clamp(cv, pr.a0, pr.a1);
    cuts.push_back(pr.a0);
    cuts.push_back(pr.a1);
    std::sort(cuts.begin(), cuts.end());
    bool piece_dirty = false;
    std::vector<Kept> local_kept;
    std::vector<Interval> local_removed;
    for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
      if (cuts[t + 1] - cuts[t] <= 1e-12) continue;
      const double mid = 0.5 * (cuts[t] + cuts[t + 1]);
      const Point m{c.x + std::cos(mid), c.y + std::sin(mid)};
      if (dist(m, x) < 1.0) {
        piece_dirty = true;
        any_strict_inside = true;
        local_removed.push_back({cuts[t], cuts[t + 1]});
      } else {
        local_kept.push_back({pr.disc, cuts[t], cuts[t + 1], pr.cell});
      }
    }
    if (!piece_dirty) continue;  // tangential contact only
    dirty.push_back(id);
    kept_parts.insert(kept_parts.end(), local_kept.begin(), local_kept.end());
    auto& rm = removed_by_disc[pr.disc];
    for (const Interval& iv : local_removed) {
      rm.push_back(iv);
      green += arc_green(c, iv.first, iv.second);
    }
  }

  // Status of the new circle's arcs against the old union.
  std::vector<Interval> x_inside, x_outside;
  if (xcuts.empty()) {
    if (!any_strict_inside) {
      // only tangential contacts: the disc is swallowed or separate
      ++rep.tangential_events;
      if (in_union(x)) {
        rep.classification = InsertionReport::Class::Contained;
      } else {
        rep.classification = InsertionReport::Class::Disjoint;
        rep.area_delta = kPi;
        area_ += kPi;
        disc_boundary_[disc] = {{0.0, kTwoPi}};
        add_full_circle(disc);
      }
      add_disc_to_lists(disc, range);
      return rep;
    }
    // pieces strictly inside the disc but the circle itself is uncrossed:
    // the new circle lies inside the union (the disc fills holes)
    x_inside.push_back({0.0, kTwoPi});
  } else {
    for (std::size_t t = 0; t < xcuts.size(); ++t) {
      const double a0 = xcuts[t];
      const double a1 =
          (t + 1 < xcuts.size()) ? xcuts[t + 1] : xcuts.front() + kTwoPi;
      if (a1 - a0 <= 1e-12) continue;
      const double mid = 0.5 * (a0 + a1);
      const Point m{x.x + std::cos(mid), x.y + std::sin(mid)};
      (in_union(m) ? x_inside : x_outside).push_back({a0, a1});
    }
    // merge the wrap pair of outside arcs so maximal arcs stay maximal
    if (x_outside.size() >= 2) {
      const Interval first = x_outside.front();
      Interval& last = x_outside.back();
      if (std::fabs(norm_angle(first.first) -
                    norm_angle(last.second)) < 1e-12 ||
          std::fabs(norm_angle(first.first) - norm_angle(last.second)) >
              kTwoPi - 1e-12) {
        last.second += first.second - first.first;
        x_outside.erase(x_outside.begin());
      }
    }
  }

  for (const Interval& iv : x_inside) green += arc_green(x, iv.first, iv.second);
  rep.area_delta = kPi - green;
  if (rep.area_delta < 0 && rep.area_delta > -1e-6) rep.area_delta = 0.0;
  if (rep.area_delta > kPi && rep.area_delta < kPi + 1e-6)
    rep.area_delta = kPi;
  area_ += rep.area_delta;

  // Maximal-arc bookkeeping per affected disc.
  for (auto& [d, rm] : removed_by_disc) {
    const std::vector<Interval> before = disc_boundary_[d];
    const std::vector<Interval> canon_rm = canonicalize(rm);
    const std::vector<Interval> after = subtract_intervals(before, canon_rm);
    diff_arcs(d, before, after, &rep.removed, &rep.added);
    disc_boundary_[d] = after;
  }
  disc_boundary_[disc] = canonicalize(x_outside);
  diff_arcs(disc, {}, disc_boundary_[disc], &rep.removed, &rep.added);

  // Structure updates: deletions strictly before insertions so the
  // lower-curve family order stays consistent throughout.
  for (std::uint64_t id : dirty) {
    const PieceRec pr = pieces_.at(id);
    cells_.at(pr.cell).erase_piece(id);
    pieces_.erase(id);
  }
  for (const Kept& kp : kept_parts)
    insert_piece(kp.disc, kp.a0, kp.a1, kp.cell);
  for (const Interval& iv : x_outside)
    insert_arc_split_by_grid(disc, iv.first, iv.second);

  add_disc_to_lists(disc, range);
  rep.k = static_cast<int>(rep.removed.size() + rep.added.size());
  total_k_ += static_cast<std::uint64_t>(rep.k);
  if (rep.k == 0) {
    // tangential-only contact: no structural change, no area
    rep.classification = InsertionReport::Class::Contained;
    area_ -= rep.area_delta;
    rep.area_delta = 0.0;
    ++rep.tangential_events;
  } else {
    rep.classification = InsertionReport::Class::Normal;
  }
  return rep;
}

std::vector<UnitArc> DiscUnion::boundary() const {
  std::vector<UnitArc> out;
  for (std::size_t d = 0; d < disc_boundary_.size(); ++d)
    for (auto [a0, a1] : disc_boundary_[d])
      out.push_back(make_unit_arc(centers_[d], a0, a1,
                                  static_cast<std::int64_t>(d)));
  return out;
}

std::vector<UnitArc> DiscUnion::boundary_pieces() const {
  std::vector<UnitArc> out;
  for (const auto& [id, pr] : pieces_)
    out.push_back(make_unit_arc(centers_[pr.disc], pr.a0, pr.a1,
                                static_cast<std::int64_t>(id)));
  return out;
}

std::vector<CellKey> DiscUnion::active_cells() const {
  std::vector<CellKey> out;
  out.reserve(cells_.size());
  for (const auto& [k, c] : cells_) out.push_back(k);
  return out;
}

const CellBoundary* DiscUnion::cell(CellKey k) const {
  auto it = cells_.find(k);
  return it == cells_.end() ? nullptr : &it->second;
}

CellBoundary* DiscUnion::cell_mutable(CellKey k) {
  auto it = cells_.find(k);
  return it == cells_.end() ? nullptr : &it->second;
}

void DiscUnion::save(std::ostream& os) const {
  os << "DISCUNION v1 n=" << centers_.size() << "\n";
  os.precision(17);
  for (const Point& c : centers_) os << "D " << c.x << " " << c.y << "\n";
}

DiscUnion DiscUnion::load(std::istream& is) {
  std::string header;
  if (!std::getline(is, header) || header.rfind("DISCUNION v1", 0) != 0)
    throw std::invalid_argument("snapshot: bad header");
  DiscUnion u;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    double x, y;
    if (!(ls >> tag >> x >> y) || tag != "D")
      throw std::invalid_argument("snapshot: bad record: " + line);
    u.insert_disc({x, y});
  }
  return u;
}

envelope::EnvelopeTree::Counters DiscUnion::merge_counters() const {
  envelope::EnvelopeTree::Counters total;
  for (const auto& [k, cb] : cells_)
    for (int q = 0; q < 4; ++q) {
      const auto& c =
          cb.set(static_cast<Quadrant>(q)).lower_envelope().counters();
      total.merges += c.merges;
      total.steps += c.steps;
      total.pushes += c.pushes;
      total.pops += c.pops;
      total.max_steps = std::max(total.max_steps, c.max_steps);
    }
  return total;
}

}  // namespace arcunion
