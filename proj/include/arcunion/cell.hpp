#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "arcunion/curve.hpp"
#include "arcunion/delta_plus.hpp"
#include "arcunion/envelope.hpp"
#include "arcunion/geom.hpp"

// Grid cells of unit diagonal and the per-cell boundary structures. Arcs of
// the union boundary are clipped to cells; within a cell they split into
// four sets by the quadrant (relative to the cell's diagonals) holding the
// arc's center. The right, bottom and left sets rotate into the top frame
// and run identical code.

namespace arcunion {

inline constexpr double kCellSide = 0.70710678118654752440;  // 1/sqrt(2)

struct CellKey {
  std::int64_t i = 0, j = 0;
  friend bool operator==(CellKey a, CellKey b) {
    return a.i == b.i && a.j == b.j;
  }
  friend bool operator<(CellKey a, CellKey b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
};

CellKey cell_key_for(Point p);
Point cell_center(CellKey k);
// Distance from p to the closed cell square (0 when inside).
double cell_point_distance(CellKey k, Point p);

enum class Quadrant : int { Top = 0, Right = 1, Bottom = 2, Left = 3 };

// Quadrant of the cell's diagonals containing c; centers on a diagonal go
// to the top or bottom set.
Quadrant quadrant_of(CellKey k, Point c);

// Rotation about the cell center taking the given quadrant to Top.
Point to_canonical(CellKey k, Quadrant q, Point p);
Point from_canonical(CellKey k, Quadrant q, Point p);
UnitArc arc_to_canonical(CellKey k, Quadrant q, const UnitArc& e);

// One quadrant set: arcs in the canonical (top) frame, with the upper-curve
// endpoint index and the lower-curve envelope structure over their
// Minkowski curves.
class QuadrantSet {
 public:
  void insert(std::uint64_t piece_id, const UnitArc& canonical_arc);
  void erase(std::uint64_t piece_id);
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  struct QueryResult {
    std::vector<std::uint64_t> ids;
    bool used_lower = false;  // phase 1 aborted, answered by report_below
    int upper_tests = 0;      // arcs tested while walking the upper curves
  };
  // All arcs of the set intersecting the unit disc around x (canonical
  // frame). Mutates the lower-curve structure transiently (report_below).
  QueryResult query(Point x);

  // Testing hooks.
  const DeltaPlusIndex& upper_index() const { return dplus_; }
  envelope::EnvelopeTree& lower_envelope() { return dminus_; }
  const envelope::EnvelopeTree& lower_envelope() const { return dminus_; }
  std::vector<const UnitArc*> arcs() const;
  const envelope::Curve* lower_curve(std::uint64_t piece_id) const;

 private:
  struct Entry {
    UnitArc arc;
    envelope::Curve gamma_minus;
  };
  std::unordered_map<std::uint64_t, std::unique_ptr<Entry>> entries_;
  DeltaPlusIndex dplus_;
  envelope::EnvelopeTree dminus_;
};

// All boundary arcs stored in one active cell, plus the ids of every disc
// intersecting the cell (for local point-in-union tests).
class CellBoundary {
 public:
  void insert_piece(CellKey key, std::uint64_t piece_id, const UnitArc& e);
  void erase_piece(std::uint64_t piece_id);
  bool has_pieces() const;

  // Union of the four quadrant queries, deduplicated. The predicate is
  // rotation invariant, so each set answers in its own canonical frame.
  struct CellQuery {
    std::vector<std::uint64_t> ids;
    int upper_tests = 0;
    bool used_lower = false;
  };
  CellQuery query_disc(CellKey key, Point x);

  std::vector<int> discs;  // every disc whose unit disc meets this cell

  QuadrantSet& set(Quadrant q) { return sets_[static_cast<int>(q)]; }
  const QuadrantSet& set(Quadrant q) const {
    return sets_[static_cast<int>(q)];
  }

 private:
  std::array<QuadrantSet, 4> sets_;
  std::unordered_map<std::uint64_t, int> piece_quadrant_;
};

}  // namespace arcunion

template <>
struct std::hash<arcunion::CellKey> {
  std::size_t operator()(const arcunion::CellKey& k) const {
    return std::hash<std::int64_t>()(k.i * 1000003 + k.j);
  }
};
