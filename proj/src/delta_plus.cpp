#include "arcunion/delta_plus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace arcunion {

struct DeltaPlusIndex::Node {
  Node* left = nullptr;
  Node* right = nullptr;
  int height = 1;
  int leaves = 1;
  // leaf payload + neighbor links
  LeafData data;
  Node* prev = nullptr;
  Node* next = nullptr;
  // subtree endpoint extremes
  Point first_p{}, last_p{};

  bool is_leaf() const { return left == nullptr; }
};

namespace {

using Node = DeltaPlusIndex::Node;

constexpr double kMergeTol = 1e-9;

bool key_less(Point a, Point b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

bool coincident(Point a, Point b) {
  return std::fabs(a.x - b.x) <= kMergeTol && std::fabs(a.y - b.y) <= kMergeTol;
}

void pull(Node* n) {
  n->height = 1 + std::max(n->left->height, n->right->height);
  n->leaves = n->left->leaves + n->right->leaves;
  n->first_p = n->left->first_p;
  n->last_p = n->right->last_p;
}

Node* rot_left(Node* n) {
  Node* r = n->right;
  n->right = r->left;
  r->left = n;
  pull(n);
  pull(r);
  return r;
}

Node* rot_right(Node* n) {
  Node* l = n->left;
  n->left = l->right;
  l->right = n;
  pull(n);
  pull(l);
  return l;
}

Node* rebalance(Node* n) {
  pull(n);
  const int bf = n->left->height - n->right->height;
  if (bf > 1) {
    if (n->left->left->height < n->left->right->height)
      n->left = rot_left(n->left);
    return rot_right(n);
  }
  if (bf < -1) {
    if (n->right->right->height < n->right->left->height)
      n->right = rot_right(n->right);
    return rot_left(n);
  }
  return n;
}

void free_rec(Node* n) {
  if (!n) return;
  free_rec(n->left);
  free_rec(n->right);
  delete n;
}

// Upper-envelope value of the unit circle around p, -inf outside its span.
double upper_semi_y(Point p, double x) {
  const double dx = x - p.x;
  const double s = 1.0 - dx * dx;
  if (s < 0) return -std::numeric_limits<double>::infinity();
  return p.y + std::sqrt(s);
}

// Abscissa where the upper envelope switches from the circle of a to the
// circle of b (a left of b). Falls back to a domain edge when one circle
// dominates the other on the overlap.
double upper_break_x(Point a, Point b) {
  const double d = dist(a, b);
  if (d >= 2.0 - 1e-12) return 0.5 * (a.x + b.x);  // disjoint-ish circles
  Point hi{};
  bool have = false;
  for (const Point& p : circle_circle_intersections(a, b, 1.0))
    if (!have || p.y > hi.y) {
      hi = p;
      have = true;
    }
  if (have && hi.y >= std::max(a.y, b.y) - 1e-9) return hi.x;
  // no crossing on the upper halves: whoever is higher owns the overlap
  const double lo = std::max(a.x, b.x) - 1.0;
  const double hi_x = std::min(a.x, b.x) + 1.0;
  const double mid = 0.5 * (lo + hi_x);
  if (upper_semi_y(b, mid) >= upper_semi_y(a, mid)) return b.x - 1.0;
  return a.x + 1.0;
}

}  // namespace

DeltaPlusIndex::~DeltaPlusIndex() { free_rec(root_); }

std::size_t DeltaPlusIndex::leaf_count() const {
  return root_ ? static_cast<std::size_t>(root_->leaves) : 0;
}

DeltaPlusIndex::Node* DeltaPlusIndex::insert_rec(Node* v, Point p,
                                                 const UnitArc* arc) {
  if (v->is_leaf()) {
    if (coincident(v->data.p, p)) {
      v->data.arcs.push_back(arc);
      return v;
    }
    Node* nl = new Node{};
    nl->data.p = p;
    nl->data.arcs.push_back(arc);
    nl->first_p = nl->last_p = p;
    Node* parent = new Node{};
    if (key_less(p, v->data.p)) {
      parent->left = nl;
      parent->right = v;
      nl->prev = v->prev;
      nl->next = v;
      if (v->prev) v->prev->next = nl;
      v->prev = nl;
    } else {
      parent->left = v;
      parent->right = nl;
      nl->next = v->next;
      nl->prev = v;
      if (v->next) v->next->prev = nl;
      v->next = nl;
    }
    pull(parent);
    return parent;
  }
  if (key_less(p, v->left->last_p) || coincident(p, v->left->last_p))
    v->left = insert_rec(v->left, p, arc);
  else
    v->right = insert_rec(v->right, p, arc);
  return rebalance(v);
}

void DeltaPlusIndex::insert(Point p, const UnitArc* arc) {
  if (!root_) {
    root_ = new Node{};
    root_->data.p = p;
    root_->data.arcs.push_back(arc);
    root_->first_p = root_->last_p = p;
    return;
  }
  root_ = insert_rec(root_, p, arc);
}

DeltaPlusIndex::Node* DeltaPlusIndex::erase_rec(Node* v, Point p,
                                                const UnitArc* arc,
                                                bool* dropped) {
  if (v->is_leaf()) {
    if (!coincident(v->data.p, p))
      throw std::invalid_argument("delta-plus: unknown endpoint");
    auto it = std::find(v->data.arcs.begin(), v->data.arcs.end(), arc);
    if (it == v->data.arcs.end())
      throw std::invalid_argument("delta-plus: arc not at endpoint");
    v->data.arcs.erase(it);
    if (!v->data.arcs.empty()) return v;
    if (v->prev) v->prev->next = v->next;
    if (v->next) v->next->prev = v->prev;
    delete v;
    *dropped = true;
    return nullptr;
  }
  bool dropped_child = false;
  if (key_less(p, v->left->last_p) || coincident(p, v->left->last_p))
    v->left = erase_rec(v->left, p, arc, &dropped_child);
  else
    v->right = erase_rec(v->right, p, arc, &dropped_child);
  if (dropped_child && (!v->left || !v->right)) {
    Node* s = v->left ? v->left : v->right;
    delete v;
    return s;
  }
  return rebalance(v);
}

void DeltaPlusIndex::erase(Point p, const UnitArc* arc) {
  if (!root_) throw std::invalid_argument("delta-plus: empty index");
  bool dropped = false;
  root_ = erase_rec(root_, p, arc, &dropped);
}

bool DeltaPlusIndex::query_above(
    Point q, const std::function<bool(const LeafData&)>& visit,
    QueryStats* stats) const {
  if (!root_) return true;
  const double eps = global_tolerance();
  // locate the leaf owning the envelope position of q.x
  const Node* v = root_;
  while (!v->is_leaf()) {
    const double bx = upper_break_x(v->left->last_p, v->right->first_p);
    v = (q.x <= bx) ? v->left : v->right;
  }
  auto above = [&](const Node* n) {
    return q.y <= upper_semi_y(n->data.p, q.x) + eps;
  };
  for (const Node* n = v; n; n = n->next) {
    if (stats) ++stats->leaves_examined;
    if (!above(n)) break;
    if (!visit(n->data)) return false;
  }
  for (const Node* n = v->prev; n; n = n->prev) {
    if (stats) ++stats->leaves_examined;
    if (!above(n)) break;
    if (!visit(n->data)) return false;
  }
  return true;
}

std::vector<DeltaPlusIndex::LeafData> DeltaPlusIndex::leaves() const {
  std::vector<LeafData> out;
  if (!root_) return out;
  const Node* n = root_;
  while (!n->is_leaf()) n = n->left;
  for (; n; n = n->next) out.push_back(n->data);
  return out;
}

}  // namespace arcunion
