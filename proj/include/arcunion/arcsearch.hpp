#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "arcunion/geom.hpp"

// Intersection searching over unit-radius lower-semicircle arcs with
// unit-disc queries. An arc meets D(x) exactly when x lies in the disc of
// one of its endpoints or in the tangent-line cap region L(e); the index
// keeps one point set per endpoint plus the regions, each over a coarse
// uniform grid with exact predicate filtering. Correctness is exact
// (epsilon-guarded); query cost is output-sensitive in practice.

namespace arcunion::arcsearch {

struct ArcRecord {
  UnitArc arc;
  Point p1, p2;
  HalfPlaneCapRegion region;
};

// Validates the lower-semicircle restriction; throws std::invalid_argument.
ArcRecord make_record(const UnitArc& e);

// The disjunction (a) x in D(p1), (b) x in D(p2), (c) x in L(e).
bool criteria_check(const ArcRecord& r, Point x);

class ArcSearchIndex {
 public:
  void build(const std::vector<UnitArc>& arcs);
  void insert(const UnitArc& e);        // throws on duplicate id / bad arc
  void erase(std::int64_t id);          // throws on unknown id
  std::size_t size() const { return records_.size(); }

  // Ids of all arcs intersecting the unit disc around x, ascending,
  // duplicate-free, independent of sub-index evaluation order.
  std::vector<std::int64_t> query_disc(Point x) const;

  const ArcRecord* record(std::int64_t id) const;

 private:
  struct GridKey {
    std::int64_t i, j;
    friend bool operator==(GridKey a, GridKey b) {
      return a.i == b.i && a.j == b.j;
    }
  };
  struct GridHash {
    std::size_t operator()(GridKey k) const {
      return std::hash<std::int64_t>()(k.i * 2654435761 + k.j);
    }
  };
  using PointGrid =
      std::unordered_map<GridKey, std::vector<std::pair<std::int64_t, Point>>,
                         GridHash>;
  using RegionGrid =
      std::unordered_map<GridKey, std::vector<std::int64_t>, GridHash>;

  static GridKey key_for(Point p);
  void index_record(std::int64_t id, const ArcRecord& r);
  void unindex_record(std::int64_t id, const ArcRecord& r);

  std::unordered_map<std::int64_t, ArcRecord> records_;
  PointGrid p1_grid_, p2_grid_;
  RegionGrid region_grid_;
};

}  // namespace arcunion::arcsearch
