#pragma once

#include <cstdint>
#include <vector>

#include "arcunion/chain.hpp"

// Fully dynamic lower envelope over a family of curves with properties A
// and B. A balanced tree holds the curves at its leaves in the family
// order; every node keeps the fragment of its subtree's envelope that is
// hidden at the parent, and the root keeps the whole envelope. Updates
// rebuild the O(log n) affected nodes with chain splits, joins and one
// tentative-binary-search crossing per node, for O(log^2 n) total.
//
// Single writer; read-only queries (ray_shoot, full_envelope) may run
// concurrently between mutations. report_below mutates.

namespace arcunion::envelope {

class EnvelopeTree {
 public:
  EnvelopeTree() = default;
  ~EnvelopeTree();
  EnvelopeTree(const EnvelopeTree&) = delete;
  EnvelopeTree& operator=(const EnvelopeTree&) = delete;
  EnvelopeTree(EnvelopeTree&& o) noexcept;
  EnvelopeTree& operator=(EnvelopeTree&& o) noexcept;

  // Curves are owned by the caller and must outlive the tree. Duplicate
  // insert / missing erase throw std::invalid_argument.
  void insert(const Curve* c);
  void erase(const Curve* c);
  bool contains(const Curve* c) const;

  bool empty() const { return root_ == nullptr; }
  std::size_t size() const;

  struct RayHit {
    const Curve* curve;
    double seg_lo, seg_hi;
  };
  // The curve attaining the envelope minimum at x0; ties at a breakpoint
  // resolve to the segment whose half-open interval (lo, hi] contains x0.
  // Throws std::logic_error on an empty structure.
  RayHit ray_shoot(double x0) const;

  // In-order envelope of the whole family.
  std::vector<ChainSegment> full_envelope() const;

  // Exactly the curves strictly below q (by more than the tolerance),
  // found by repeated ray shooting and deletion, then reinsertion.
  std::vector<const Curve*> report_below(Point q);

  const ChainNode* root_chain() const;

  // Aggregated tentative-search counters across all merges.
  struct Counters {
    std::uint64_t merges = 0;
    std::uint64_t steps = 0;
    std::uint64_t pushes = 0;
    std::uint64_t pops = 0;
    int max_steps = 0;
  };
  const Counters& counters() const { return counters_; }
  void reset_counters() { counters_ = Counters{}; }

  struct Node;  // defined in the implementation

 private:
  Node* root_ = nullptr;
  Counters counters_;

  Node* insert_rec(Node* v, const Curve* c);
  Node* erase_rec(Node* v, const Curve* c, bool* removed_child);
  void expose(Node* v);
  void rebuild(Node* v);
  Node* rebalance_node(Node* v);
  Node* rotate_left_node(Node* v);
  Node* rotate_right_node(Node* v);
  static void free_node_rec(Node* v);
};

}  // namespace arcunion::envelope
