#include "arcunion/cell.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arcunion {

CellKey cell_key_for(Point p) {
  return {static_cast<std::int64_t>(std::floor(p.x / kCellSide)),
          static_cast<std::int64_t>(std::floor(p.y / kCellSide))};
}

Point cell_center(CellKey k) {
  return {(static_cast<double>(k.i) + 0.5) * kCellSide,
          (static_cast<double>(k.j) + 0.5) * kCellSide};
}

double cell_point_distance(CellKey k, Point p) {
  const double x0 = static_cast<double>(k.i) * kCellSide;
  const double y0 = static_cast<double>(k.j) * kCellSide;
  const double cx = std::clamp(p.x, x0, x0 + kCellSide);
  const double cy = std::clamp(p.y, y0, y0 + kCellSide);
  return std::hypot(p.x - cx, p.y - cy);
}

Quadrant quadrant_of(CellKey k, Point c) {
  const Point cc = cell_center(k);
  const double dx = c.x - cc.x;
  const double dy = c.y - cc.y;
  if (dy >= std::fabs(dx)) return Quadrant::Top;
  if (-dy >= std::fabs(dx)) return Quadrant::Bottom;
  return dx > 0 ? Quadrant::Right : Quadrant::Left;
}

namespace {

// counter-clockwise rotation steps taking the quadrant direction to +y
int rot_steps(Quadrant q) {
  switch (q) {
    case Quadrant::Top:
      return 0;
    case Quadrant::Right:
      return 1;  // +90 degrees
    case Quadrant::Bottom:
      return 2;
    case Quadrant::Left:
      return 3;  // -90 degrees == +270
  }
  return 0;
}

Point rot90(Point p, int steps) {
  switch (steps & 3) {
    case 0:
      return p;
    case 1:
      return {-p.y, p.x};
    case 2:
      return {-p.x, -p.y};
    default:
      return {p.y, -p.x};
  }
}

}  // namespace

Point to_canonical(CellKey k, Quadrant q, Point p) {
  const Point cc = cell_center(k);
  return cc + rot90(p - cc, rot_steps(q));
}

Point from_canonical(CellKey k, Quadrant q, Point p) {
  const Point cc = cell_center(k);
  return cc + rot90(p - cc, 4 - rot_steps(q));
}

UnitArc arc_to_canonical(CellKey k, Quadrant q, const UnitArc& e) {
  const int steps = rot_steps(q);
  UnitArc out = make_unit_arc(to_canonical(k, q, e.center),
                              e.theta_start + steps * (kPi / 2),
                              e.theta_end + steps * (kPi / 2), e.id);
  return out;
}

// ---------------------------------------------------------------------------

void QuadrantSet::insert(std::uint64_t piece_id, const UnitArc& arc) {
  auto entry = std::make_unique<Entry>();
  entry->arc = arc;
  entry->arc.id = static_cast<std::int64_t>(piece_id);  // both phases report it
  const MinkowskiCurves mc = minkowski_curves(arc);
  entry->gamma_minus = envelope::Curve::from_chain(
      mc.gamma_minus, arc.first_endpoint().x,
      static_cast<std::int64_t>(piece_id));
  Entry* raw = entry.get();
  auto [it, fresh] = entries_.emplace(piece_id, std::move(entry));
  if (!fresh) throw std::invalid_argument("quadrant set: duplicate piece");
  dminus_.insert(&raw->gamma_minus);
  dplus_.insert(raw->arc.first_endpoint(), &raw->arc);
  dplus_.insert(raw->arc.second_endpoint(), &raw->arc);
}

void QuadrantSet::erase(std::uint64_t piece_id) {
  auto it = entries_.find(piece_id);
  if (it == entries_.end())
    throw std::invalid_argument("quadrant set: erase of absent piece");
  Entry* e = it->second.get();
  dplus_.erase(e->arc.first_endpoint(), &e->arc);
  dplus_.erase(e->arc.second_endpoint(), &e->arc);
  dminus_.erase(&e->gamma_minus);
  entries_.erase(it);
}

QuadrantSet::QueryResult QuadrantSet::query(Point x) {
  QueryResult r;
  if (entries_.empty()) return r;
  const bool complete = dplus_.query_above(
      x,
      [&](const DeltaPlusIndex::LeafData& leaf) {
        for (const UnitArc* a : leaf.arcs) {
          ++r.upper_tests;
          if (!arc_intersects_disc(*a, x)) return false;  // x is below xi
          r.ids.push_back(static_cast<std::uint64_t>(a->id));
        }
        return true;
      },
      nullptr);
  if (!complete) {
    // x lies on or below the upper envelope of the lower curves: the
    // answer is exactly the arcs whose lower curve passes below x.
    r.ids.clear();
    r.used_lower = true;
    for (const envelope::Curve* c : dminus_.report_below(x))
      r.ids.push_back(static_cast<std::uint64_t>(c->id()));
  }
  std::sort(r.ids.begin(), r.ids.end());
  r.ids.erase(std::unique(r.ids.begin(), r.ids.end()), r.ids.end());
  return r;
}

std::vector<const UnitArc*> QuadrantSet::arcs() const {
  std::vector<const UnitArc*> out;
  out.reserve(entries_.size());
  for (const auto& [id, e] : entries_) out.push_back(&e->arc);
  return out;
}

const envelope::Curve* QuadrantSet::lower_curve(std::uint64_t piece_id) const {
  auto it = entries_.find(piece_id);
  return it == entries_.end() ? nullptr : &it->second->gamma_minus;
}

// ---------------------------------------------------------------------------

void CellBoundary::insert_piece(CellKey key, std::uint64_t piece_id,
                                const UnitArc& e) {
  const Quadrant q = quadrant_of(key, e.center);
  const UnitArc canon = arc_to_canonical(key, q, e);
  sets_[static_cast<int>(q)].insert(piece_id, canon);
  piece_quadrant_[piece_id] = static_cast<int>(q);
}

void CellBoundary::erase_piece(std::uint64_t piece_id) {
  auto it = piece_quadrant_.find(piece_id);
  if (it == piece_quadrant_.end())
    throw std::invalid_argument("cell: erase of absent piece");
  sets_[it->second].erase(piece_id);
  piece_quadrant_.erase(it);
}

bool CellBoundary::has_pieces() const { return !piece_quadrant_.empty(); }

CellBoundary::CellQuery CellBoundary::query_disc(CellKey key, Point x) {
  CellQuery out;
  for (int q = 0; q < 4; ++q) {
    if (sets_[q].empty()) continue;
    const Point cx = to_canonical(key, static_cast<Quadrant>(q), x);
    auto r = sets_[q].query(cx);
    out.upper_tests += r.upper_tests;
    out.used_lower = out.used_lower || r.used_lower;
    out.ids.insert(out.ids.end(), r.ids.begin(), r.ids.end());
  }
  return out;
}

}  // namespace arcunion
