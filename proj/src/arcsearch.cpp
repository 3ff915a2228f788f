#include "arcunion/arcsearch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arcunion::arcsearch {

ArcRecord make_record(const UnitArc& e) {
  if (!e.on_lower_semicircle(1e-9))
    throw std::invalid_argument("arc search: arc not on a lower semicircle");
  ArcRecord r;
  r.arc = e;
  r.p1 = e.first_endpoint();
  r.p2 = e.second_endpoint();
  r.region = tangent_line_region(e);
  return r;
}

bool criteria_check(const ArcRecord& r, Point x) {
  return disc_contains(x, r.p1, 1.0) || disc_contains(x, r.p2, 1.0) ||
         region_contains(r.region, x);
}

ArcSearchIndex::GridKey ArcSearchIndex::key_for(Point p) {
  return {static_cast<std::int64_t>(std::floor(p.x)),
          static_cast<std::int64_t>(std::floor(p.y))};
}

void ArcSearchIndex::index_record(std::int64_t id, const ArcRecord& r) {
  p1_grid_[key_for(r.p1)].push_back({id, r.p1});
  p2_grid_[key_for(r.p2)].push_back({id, r.p2});
  // the cap region is confined to the radius-2 disc around the center
  const GridKey lo = key_for({r.arc.center.x - 2.0, r.arc.center.y - 2.0});
  const GridKey hi = key_for({r.arc.center.x + 2.0, r.arc.center.y + 2.0});
  for (std::int64_t i = lo.i; i <= hi.i; ++i)
    for (std::int64_t j = lo.j; j <= hi.j; ++j)
      region_grid_[{i, j}].push_back(id);
}

void ArcSearchIndex::unindex_record(std::int64_t id, const ArcRecord& r) {
  auto drop_point = [&](PointGrid& g, Point p) {
    auto it = g.find(key_for(p));
    auto& v = it->second;
    v.erase(std::remove_if(v.begin(), v.end(),
                           [&](const auto& e) { return e.first == id; }),
            v.end());
    if (v.empty()) g.erase(it);
  };
  drop_point(p1_grid_, r.p1);
  drop_point(p2_grid_, r.p2);
  const GridKey lo = key_for({r.arc.center.x - 2.0, r.arc.center.y - 2.0});
  const GridKey hi = key_for({r.arc.center.x + 2.0, r.arc.center.y + 2.0});
  for (std::int64_t i = lo.i; i <= hi.i; ++i)
    for (std::int64_t j = lo.j; j <= hi.j; ++j) {
      auto it = region_grid_.find({i, j});
      auto& v = it->second;
      v.erase(std::remove(v.begin(), v.end(), id), v.end());
      if (v.empty()) region_grid_.erase(it);
    }
}

void ArcSearchIndex::build(const std::vector<UnitArc>& arcs) {
  records_.clear();
  p1_grid_.clear();
  p2_grid_.clear();
  region_grid_.clear();
  for (const UnitArc& e : arcs) insert(e);
}

void ArcSearchIndex::insert(const UnitArc& e) {
  const ArcRecord r = make_record(e);
  auto [it, fresh] = records_.emplace(e.id, r);
  if (!fresh) throw std::invalid_argument("arc search: duplicate arc id");
  index_record(e.id, it->second);
}

void ArcSearchIndex::erase(std::int64_t id) {
  auto it = records_.find(id);
  if (it == records_.end())
    throw std::invalid_argument("arc search: erase of unknown id");
  unindex_record(id, it->second);
  records_.erase(it);
}

const ArcRecord* ArcSearchIndex::record(std::int64_t id) const {
  auto it = records_.find(id);
  return it == records_.end() ? nullptr : &it->second;
}

std::vector<std::int64_t> ArcSearchIndex::query_disc(Point x) const {
  std::vector<std::int64_t> out;
  const double eps = global_tolerance();
  // (a), (b): endpoints within distance 1 of x
  auto scan_points = [&](const PointGrid& g) {
    const GridKey c = key_for(x);
    for (std::int64_t i = c.i - 1; i <= c.i + 1; ++i)
      for (std::int64_t j = c.j - 1; j <= c.j + 1; ++j) {
        auto it = g.find({i, j});
        if (it == g.end()) continue;
        for (const auto& [id, p] : it->second)
          if (dist(p, x) <= 1.0 + eps) out.push_back(id);
      }
  };
  scan_points(p1_grid_);
  scan_points(p2_grid_);
  // (c): cap regions stabbed by x
  if (auto it = region_grid_.find(key_for(x)); it != region_grid_.end())
    for (std::int64_t id : it->second)
      if (region_contains(records_.at(id).region, x)) out.push_back(id);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  // epsilon guard: every reported arc must pass the direct predicate
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](std::int64_t id) {
                             return !arc_intersects_disc(records_.at(id).arc,
                                                         x);
                           }),
            out.end());
  return out;
}

}  // namespace arcunion::arcsearch
