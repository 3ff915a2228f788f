#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <unordered_map>
#include <vector>

#include "arcunion/cell.hpp"

// Maintains the union of unit discs under insertions: boundary arcs per
// grid cell with their quadrant indexes, the running area, and a per-disc
// view of the boundary as maximal angular arcs. Single writer; area() and
// boundary() may be read concurrently between insertions.

namespace arcunion {

// Standalone boundary rebuild against one new disc: given the boundary
// arcs intersecting D(x) (pairwise interior-disjoint; throws
// std::invalid_argument("invariant violation") otherwise), returns the
// covered portions, the surviving trimmed portions, the new arcs of the
// inserted circle, and the area gained. Statuses along the new circle come
// from the crossing orientations alone, so the result is independent of
// any global union state.
struct RebuildResult {
  std::vector<UnitArc> removed;  // portions of the input arcs inside D(x)
  std::vector<UnitArc> kept;     // surviving portions of trimmed arcs
  std::vector<UnitArc> added;    // portions of the new circle on the boundary
  double area_delta = 0.0;
};
RebuildResult rebuild_boundary(const std::vector<UnitArc>& arcs, Point x);

struct InsertionReport {
  enum class Class { Normal, Contained, Disjoint };
  Class classification = Class::Normal;
  double area_delta = 0.0;
  // structural changes at maximal-arc granularity (cell splits excluded);
  // 0 for contained/disjoint insertions
  int k = 0;
  struct MaxArc {
    int disc;
    double a0, a1;
  };
  std::vector<MaxArc> removed, added;
  int tangential_events = 0;  // epsilon-perturbed degeneracies encountered
};

class DiscUnion {
 public:
  DiscUnion() = default;
  DiscUnion(const DiscUnion&) = delete;
  DiscUnion& operator=(const DiscUnion&) = delete;
  DiscUnion(DiscUnion&&) = default;
  DiscUnion& operator=(DiscUnion&&) = default;

  // Duplicate centers are legal and classify as contained.
  InsertionReport insert_disc(Point x);

  double area() const { return area_; }
  std::size_t disc_count() const { return centers_.size(); }
  std::uint64_t total_structural_changes() const { return total_k_; }
  const std::vector<Point>& centers() const { return centers_; }

  // Maximal boundary arcs (cell splits deduplicated); arc ids carry the
  // owning disc index.
  std::vector<UnitArc> boundary() const;
  // Raw per-cell pieces.
  std::vector<UnitArc> boundary_pieces() const;
  // Per-disc angular intervals, canonical form (testing/oracle comparison).
  const std::vector<std::vector<std::pair<double, double>>>& boundary_by_disc()
      const {
    return disc_boundary_;
  }

  std::vector<CellKey> active_cells() const;
  const CellBoundary* cell(CellKey k) const;
  CellBoundary* cell_mutable(CellKey k);

  // Replay-based persistence: header "DISCUNION v1 n=<count>", then one
  // "D <x> <y>" line per disc in insertion order.
  void save(std::ostream& os) const;
  static DiscUnion load(std::istream& is);

  // Aggregated envelope-merge counters over every quadrant set (walks all
  // cells; meant for benchmarks, not hot paths).
  envelope::EnvelopeTree::Counters merge_counters() const;

 private:
  struct PieceRec {
    int disc;
    double a0, a1;  // angles on the disc's circle
    CellKey cell;
  };

  std::map<CellKey, CellBoundary> cells_;
  std::unordered_map<std::uint64_t, PieceRec> pieces_;
  std::vector<Point> centers_;
  std::vector<std::vector<std::pair<double, double>>> disc_boundary_;
  double area_ = 0.0;
  std::uint64_t total_k_ = 0;
  std::uint64_t next_piece_ = 1;

  std::vector<CellKey> cells_in_range(Point x) const;
  bool in_union(Point p) const;  // against the discs inserted so far
  void add_disc_to_lists(int disc, const std::vector<CellKey>& range);
  void insert_piece(int disc, double a0, double a1, CellKey cell);
  void insert_arc_split_by_grid(int disc, double a0, double a1);
  void add_full_circle(int disc);
};

}  // namespace arcunion
