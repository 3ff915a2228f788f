#pragma once

#include <functional>
#include <vector>

#include "arcunion/curve.hpp"

// Envelope chains: height-balanced binary trees whose leaves hold the
// envelope segments left to right and whose inner nodes hold the breakpoint
// between the last segment of the left subtree and the first segment of the
// right one. Split/join run in O(log n); the crossing of two chains (all
// curves of the left chain preceding all curves of the right one) is found
// in O(log n) by tentative binary search.

namespace arcunion::envelope {

struct ChainNode {
  ChainNode* left = nullptr;
  ChainNode* right = nullptr;
  int height = 1;
  int leaves = 1;

  // leaf payload
  const Curve* curve = nullptr;
  double seg_lo = 0.0, seg_hi = 0.0;

  // subtree aggregates
  const Curve* first_curve = nullptr;
  const Curve* last_curve = nullptr;
  double first_lo = 0.0, last_hi = 0.0;
  double first_y_lo = 0.0, last_y_hi = 0.0;

  // inner payload: breakpoint between the adjacent segments of the two
  // subtrees
  Point bp{};

  bool is_leaf() const { return left == nullptr; }
};

ChainNode* chain_new_leaf(const Curve* c, double lo, double hi);
void chain_free(ChainNode* t);

inline int chain_height(const ChainNode* t) { return t ? t->height : 0; }
inline int chain_leaves(const ChainNode* t) { return t ? t->leaves : 0; }

// Concatenation; assumes A's last segment ends where B's first begins.
// Adjacent leaves of the same curve are fused back into one segment.
ChainNode* chain_concat(ChainNode* a, ChainNode* b);

// First k leaves / rest.
std::pair<ChainNode*, ChainNode*> chain_split_leaves(ChainNode* t, int k);

// Leaf whose half-open segment (lo, hi] contains x.
const ChainNode* chain_find_by_x(const ChainNode* t, double x);
const ChainNode* chain_leaf_at(const ChainNode* t, int index);

struct ChainSegment {
  const Curve* curve;
  double x_lo, x_hi;
};
void chain_collect(const ChainNode* t, std::vector<ChainSegment>& out);

// Balanced chain from explicit segments (test/bootstrap helper).
ChainNode* chain_build(const std::vector<ChainSegment>& segs);

// Sanity check of ordering and adjacency; throws std::logic_error.
void chain_validate(const ChainNode* t);

// ---------------------------------------------------------------------------
// Tentative binary search for the crossing of two envelope chains.

struct MergeStats {
  int steps = 0;
  int pushes = 0;
  int pops = 0;
  int path_len = 0;  // height(A) + height(B)
};

// Observer hook for instrumented runs. Leaf ranges are half-open
// [begin, end) leaf-index intervals of the current search nodes;
// ustack_left_ranges holds the left-subtree range of every uStack entry and
// vstack_right_ranges the right-subtree range of every vStack entry (the
// sets named by the search invariant). case_main/case_nested are 1..3
// (0 when no nested compare ran).
struct MergeStep {
  int step = 0;
  const ChainNode* u = nullptr;
  const ChainNode* v = nullptr;
  int u_begin = 0, u_end = 0;
  int v_begin = 0, v_end = 0;
  int case_main = 0, case_nested = 0;
  std::vector<std::pair<int, int>> ustack_left_ranges;
  std::vector<std::pair<int, int>> vstack_right_ranges;
};
using MergeObserver = std::function<void(const MergeStep&)>;

struct CrossResult {
  Point q{};
  int u_leaf = -1;  // leaf index in the left chain whose segment contains q
  int v_leaf = -1;
  MergeStats stats;
};

// The three-way comparison driving the search: 1 when u's point lies on or
// above v's local envelope, 2 for the symmetric condition, 3 when both
// points are strictly below (ties resolve to case 1 first). u must come
// from the left chain (leaf points are left segment endpoints), v from the
// right one.
int compare_nodes(const ChainNode* u, const ChainNode* v);

// Every curve of `a` must precede every curve of `b` in the family order.
// Throws std::logic_error when no case dispatch is consistent (interleaved
// orders) or the step budget is exceeded.
CrossResult find_envelope_crossing(const ChainNode* a, const ChainNode* b,
                                   const MergeObserver* observer = nullptr);

// Destructive merge: consumes a and b, returns the merged envelope plus the
// hidden fragments of either side (the parts cut away at the crossing).
struct ChainMerge {
  ChainNode* merged = nullptr;
  ChainNode* left_hidden = nullptr;
  ChainNode* right_hidden = nullptr;
  int left_leaf_count = 0;
  MergeStats stats;
};
ChainMerge merge_chains(ChainNode* a, ChainNode* b);

}  // namespace arcunion::envelope
