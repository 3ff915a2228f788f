#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "arcunion/geom.hpp"

// Index over the endpoints of a quadrant arc set, in x-order. Each endpoint
// owns one arc of the upper envelope of the endpoint unit circles, so a
// query walks leaves outward from the envelope position of the query point,
// testing one upper semicircle per leaf. Coincident endpoints (two arcs
// meeting in a vertex) share a leaf marked with both arcs.

namespace arcunion {

class DeltaPlusIndex {
 public:
  struct LeafData {
    Point p;
    std::vector<const UnitArc*> arcs;  // incident arcs, usually 1 or 2
  };

  DeltaPlusIndex() = default;
  ~DeltaPlusIndex();
  DeltaPlusIndex(const DeltaPlusIndex&) = delete;
  DeltaPlusIndex& operator=(const DeltaPlusIndex&) = delete;

  // Endpoints within the merge tolerance collapse into one leaf.
  void insert(Point p, const UnitArc* arc);
  // Throws std::invalid_argument when the endpoint or arc is unknown.
  void erase(Point p, const UnitArc* arc);

  bool empty() const { return root_ == nullptr; }
  std::size_t leaf_count() const;

  struct QueryStats {
    int leaves_examined = 0;
  };

  // Visits every leaf whose endpoint upper semicircle passes on or above q,
  // starting at the leaf owning the envelope position of q.x and walking
  // rightward then leftward until the first leaf failing that test in each
  // direction. The visitor returns false to abort the whole query (the
  // caller then falls back to the lower-curve structure). Returns false iff
  // aborted.
  bool query_above(Point q,
                   const std::function<bool(const LeafData&)>& visit,
                   QueryStats* stats = nullptr) const;

  // In-order endpoints (testing hook).
  std::vector<LeafData> leaves() const;

  struct Node;  // defined in the implementation

 private:
  Node* root_ = nullptr;

  Node* insert_rec(Node* v, Point p, const UnitArc* arc);
  Node* erase_rec(Node* v, Point p, const UnitArc* arc, bool* dropped);
};

}  // namespace arcunion
