#include "arcunion/envelope.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcunion::envelope {

struct EnvelopeTree::Node {
  Node* left = nullptr;
  Node* right = nullptr;
  int height = 1;
  int count = 1;
  const Curve* curve = nullptr;      // leaf payload
  const Curve* max_curve = nullptr;  // last curve of the subtree
  ChainNode* frag = nullptr;  // hidden fragment; full envelope at the root
                              // and on nodes currently "in hand"
  int left_leafcnt = 0;       // chain leaves contributed by the left child

  bool is_leaf() const { return left == nullptr; }
};

namespace {

using Node = EnvelopeTree::Node;

int node_height(const Node* n) { return n ? n->height : 0; }

Node* make_leaf_node(const Curve* c) {
  Node* n = new Node{};
  n->curve = c;
  n->max_curve = c;
  n->frag = chain_new_leaf(c, -kInfX, kInfX);
  return n;
}

void pull_meta(Node* v) {
  v->height = 1 + std::max(v->left->height, v->right->height);
  v->count = v->left->count + v->right->count;
  v->max_curve = v->right->max_curve;
}

}  // namespace

EnvelopeTree::~EnvelopeTree() { free_node_rec(root_); }

EnvelopeTree::EnvelopeTree(EnvelopeTree&& o) noexcept
    : root_(o.root_), counters_(o.counters_) {
  o.root_ = nullptr;
}

EnvelopeTree& EnvelopeTree::operator=(EnvelopeTree&& o) noexcept {
  if (this != &o) {
    free_node_rec(root_);
    root_ = o.root_;
    counters_ = o.counters_;
    o.root_ = nullptr;
  }
  return *this;
}

void EnvelopeTree::free_node_rec(Node* v) {
  if (!v) return;
  chain_free(v->frag);
  free_node_rec(v->left);
  free_node_rec(v->right);
  delete v;
}

std::size_t EnvelopeTree::size() const { return root_ ? root_->count : 0; }

void EnvelopeTree::expose(Node* v) {
  // v holds the full envelope of its subtree; hand each child its own.
  auto [vis_l, vis_r] = chain_split_leaves(v->frag, v->left_leafcnt);
  v->frag = nullptr;
  v->left->frag = chain_concat(vis_l, v->left->frag);
  v->right->frag = chain_concat(v->right->frag, vis_r);
}

void EnvelopeTree::rebuild(Node* v) {
  ChainNode* a = v->left->frag;
  ChainNode* b = v->right->frag;
  v->left->frag = nullptr;
  v->right->frag = nullptr;
  ChainMerge m = merge_chains(a, b);
  v->frag = m.merged;
  v->left->frag = m.left_hidden;
  v->right->frag = m.right_hidden;
  v->left_leafcnt = m.left_leaf_count;
  pull_meta(v);
  ++counters_.merges;
  counters_.steps += static_cast<std::uint64_t>(m.stats.steps);
  counters_.pushes += static_cast<std::uint64_t>(m.stats.pushes);
  counters_.pops += static_cast<std::uint64_t>(m.stats.pops);
  counters_.max_steps = std::max(counters_.max_steps, m.stats.steps);
}

EnvelopeTree::Node* EnvelopeTree::rotate_right_node(Node* v) {
  if (v->frag) expose(v);
  Node* l = v->left;
  if (l->frag) expose(l);
  v->left = l->right;
  rebuild(v);
  l->right = v;
  return l;  // children hold full envelopes; caller rebuilds
}

EnvelopeTree::Node* EnvelopeTree::rotate_left_node(Node* v) {
  if (v->frag) expose(v);
  Node* r = v->right;
  if (r->frag) expose(r);
  v->right = r->left;
  rebuild(v);
  r->left = v;
  return r;
}

EnvelopeTree::Node* EnvelopeTree::rebalance_node(Node* v) {
  const int bf = node_height(v->left) - node_height(v->right);
  if (bf > 1) {
    if (node_height(v->left->left) < node_height(v->left->right))
      v->left = rotate_left_node(v->left);
    return rotate_right_node(v);
  }
  if (bf < -1) {
    if (node_height(v->right->right) < node_height(v->right->left))
      v->right = rotate_right_node(v->right);
    return rotate_left_node(v);
  }
  return v;
}

void EnvelopeTree::insert(const Curve* c) {
  if (!root_) {
    root_ = make_leaf_node(c);
    return;
  }
  root_ = insert_rec(root_, c);
}

EnvelopeTree::Node* EnvelopeTree::insert_rec(Node* v, const Curve* c) {
  if (v->is_leaf()) {
    if (v->curve->id() == c->id())
      throw std::invalid_argument("envelope: duplicate insert");
    Node* nl = make_leaf_node(c);
    Node* parent = new Node{};
    if (curve_less(*c, *v->curve)) {
      parent->left = nl;
      parent->right = v;
    } else {
      parent->left = v;
      parent->right = nl;
    }
    rebuild(parent);
    return parent;
  }
  expose(v);
  if (curve_less(*c, *v->left->max_curve) || c->id() == v->left->max_curve->id())
    v->left = insert_rec(v->left, c);
  else
    v->right = insert_rec(v->right, c);
  v = rebalance_node(v);
  rebuild(v);
  return v;
}

void EnvelopeTree::erase(const Curve* c) {
  if (!root_) throw std::invalid_argument("envelope: erase of absent curve");
  if (root_->is_leaf()) {
    if (root_->curve->id() != c->id())
      throw std::invalid_argument("envelope: erase of absent curve");
    free_node_rec(root_);
    root_ = nullptr;
    return;
  }
  bool removed = false;
  root_ = erase_rec(root_, c, &removed);
}

EnvelopeTree::Node* EnvelopeTree::erase_rec(Node* v, const Curve* c,
                                            bool* removed_child) {
  if (v->is_leaf()) {
    if (v->curve->id() != c->id())
      throw std::invalid_argument("envelope: erase of absent curve");
    chain_free(v->frag);
    delete v;
    *removed_child = true;
    return nullptr;
  }
  expose(v);
  bool removed = false;
  if (curve_less(*c, *v->left->max_curve) || c->id() == v->left->max_curve->id())
    v->left = erase_rec(v->left, c, &removed);
  else
    v->right = erase_rec(v->right, c, &removed);
  if (removed) {
    Node* sibling = v->left ? v->left : v->right;
    delete v;
    return sibling;  // carries its full envelope
  }
  v = rebalance_node(v);
  rebuild(v);
  return v;
}

bool EnvelopeTree::contains(const Curve* c) const {
  const Node* v = root_;
  if (!v) return false;
  while (!v->is_leaf())
    v = (curve_less(*c, *v->left->max_curve) ||
         c->id() == v->left->max_curve->id())
            ? v->left
            : v->right;
  return v->curve->id() == c->id();
}

EnvelopeTree::RayHit EnvelopeTree::ray_shoot(double x0) const {
  if (!root_) throw std::logic_error("envelope: ray shoot on empty structure");
  const ChainNode* leaf = chain_find_by_x(root_->frag, x0);
  return {leaf->curve, leaf->seg_lo, leaf->seg_hi};
}

std::vector<ChainSegment> EnvelopeTree::full_envelope() const {
  std::vector<ChainSegment> out;
  if (root_) chain_collect(root_->frag, out);
  return out;
}

std::vector<const Curve*> EnvelopeTree::report_below(Point q) {
  std::vector<const Curve*> out;
  const double eps = global_tolerance();
  while (root_) {
    const RayHit hit = ray_shoot(q.x);
    const double y = hit.curve->y_at(q.x);
    if (!(y < q.y - eps)) break;
    out.push_back(hit.curve);
    erase(hit.curve);
  }
  for (const Curve* c : out) insert(c);
  return out;
}

const ChainNode* EnvelopeTree::root_chain() const {
  return root_ ? root_->frag : nullptr;
}

}  // namespace arcunion::envelope
