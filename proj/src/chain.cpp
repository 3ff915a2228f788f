#include "arcunion/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arcunion::envelope {

namespace {

// Per-thread node pool; split/join churn dominates update cost otherwise.
struct FreeList {
  ChainNode* head = nullptr;
  ~FreeList() {
    while (head) {
      ChainNode* n = head;
      head = head->left;
      delete n;
    }
  }
};
thread_local FreeList t_free_list;

ChainNode* alloc_node() {
  if (t_free_list.head) {
    ChainNode* n = t_free_list.head;
    t_free_list.head = n->left;
    *n = ChainNode{};
    return n;
  }
  return new ChainNode{};
}

void release_node(ChainNode* n) {
  n->left = t_free_list.head;
  t_free_list.head = n;
}

void pull(ChainNode* n) {
  ChainNode* l = n->left;
  ChainNode* r = n->right;
  n->height = 1 + std::max(l->height, r->height);
  n->leaves = l->leaves + r->leaves;
  n->first_curve = l->first_curve;
  n->first_lo = l->first_lo;
  n->first_y_lo = l->first_y_lo;
  n->last_curve = r->last_curve;
  n->last_hi = r->last_hi;
  n->last_y_hi = r->last_y_hi;
  n->bp = Point{l->last_hi, l->last_y_hi};
}

ChainNode* make_inner(ChainNode* l, ChainNode* r) {
  ChainNode* n = alloc_node();
  n->left = l;
  n->right = r;
  pull(n);
  return n;
}

ChainNode* rot_left(ChainNode* n) {
  ChainNode* r = n->right;
  n->right = r->left;
  r->left = n;
  pull(n);
  pull(r);
  return r;
}

ChainNode* rot_right(ChainNode* n) {
  ChainNode* l = n->left;
  n->left = l->right;
  l->right = n;
  pull(n);
  pull(l);
  return l;
}

ChainNode* rebalance(ChainNode* n) {
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

// Plain concatenation, no leaf fusing.
ChainNode* join(ChainNode* a, ChainNode* b) {
  if (!a) return b;
  if (!b) return a;
  if (std::abs(a->height - b->height) <= 1) return make_inner(a, b);
  if (a->height > b->height) {
    a->right = join(a->right, b);
    return rebalance(a);
  }
  b->left = join(a, b->left);
  return rebalance(b);
}

void set_rightmost_hi(ChainNode* t, double x, double y) {
  if (t->is_leaf()) {
    t->seg_hi = x;
    t->last_hi = x;
    t->last_y_hi = y;
    return;
  }
  set_rightmost_hi(t->right, x, y);
  pull(t);
}

void set_leftmost_lo(ChainNode* t, double x, double y) {
  if (t->is_leaf()) {
    t->seg_lo = x;
    t->first_lo = x;
    t->first_y_lo = y;
    return;
  }
  set_leftmost_lo(t->left, x, y);
  pull(t);
}

const ChainNode* leftmost(const ChainNode* t) {
  while (!t->is_leaf()) t = t->left;
  return t;
}

const ChainNode* rightmost(const ChainNode* t) {
  while (!t->is_leaf()) t = t->right;
  return t;
}

}  // namespace

ChainNode* chain_new_leaf(const Curve* c, double lo, double hi) {
  ChainNode* n = alloc_node();
  n->curve = c;
  n->seg_lo = lo;
  n->seg_hi = hi;
  n->first_curve = n->last_curve = c;
  n->first_lo = lo;
  n->last_hi = hi;
  n->first_y_lo = c->y_at(lo);
  n->last_y_hi = c->y_at(hi);
  return n;
}

void chain_free(ChainNode* t) {
  if (!t) return;
  ChainNode* l = t->left;
  ChainNode* r = t->right;
  release_node(t);
  chain_free(l);
  chain_free(r);
}

ChainNode* chain_concat(ChainNode* a, ChainNode* b) {
  if (!a) return b;
  if (!b) return a;
  if (a->last_curve == b->first_curve) {
    auto [head, rest] = chain_split_leaves(b, 1);
    const double hi = head->last_hi;
    const double y = head->last_y_hi;
    chain_free(head);
    set_rightmost_hi(a, hi, y);
    if (!rest) return a;
    b = rest;
  }
  return join(a, b);
}

std::pair<ChainNode*, ChainNode*> chain_split_leaves(ChainNode* t, int k) {
  if (!t) return {nullptr, nullptr};
  if (k <= 0) return {nullptr, t};
  if (k >= t->leaves) return {t, nullptr};
  ChainNode* l = t->left;
  ChainNode* r = t->right;
  release_node(t);
  if (k <= l->leaves) {
    auto [x, y] = chain_split_leaves(l, k);
    return {x, join(y, r)};
  }
  auto [x, y] = chain_split_leaves(r, k - l->leaves);
  return {join(l, x), y};
}

const ChainNode* chain_find_by_x(const ChainNode* t, double x) {
  if (!t) return nullptr;
  while (!t->is_leaf()) t = (x <= t->bp.x) ? t->left : t->right;
  return t;
}

const ChainNode* chain_leaf_at(const ChainNode* t, int index) {
  if (!t || index < 0 || index >= t->leaves) return nullptr;
  while (!t->is_leaf()) {
    if (index < t->left->leaves) {
      t = t->left;
    } else {
      index -= t->left->leaves;
      t = t->right;
    }
  }
  return t;
}

void chain_collect(const ChainNode* t, std::vector<ChainSegment>& out) {
  if (!t) return;
  if (t->is_leaf()) {
    out.push_back({t->curve, t->seg_lo, t->seg_hi});
    return;
  }
  chain_collect(t->left, out);
  chain_collect(t->right, out);
}

ChainNode* chain_build(const std::vector<ChainSegment>& segs) {
  if (segs.empty()) return nullptr;
  std::function<ChainNode*(int, int)> rec = [&](int lo, int hi) -> ChainNode* {
    if (lo == hi) {
      const ChainSegment& s = segs[lo];
      return chain_new_leaf(s.curve, s.x_lo, s.x_hi);
    }
    const int mid = (lo + hi) / 2;
    return make_inner(rec(lo, mid), rec(mid + 1, hi));
  };
  return rec(0, static_cast<int>(segs.size()) - 1);
}

void chain_validate(const ChainNode* t) {
  if (!t) return;
  if (t->is_leaf()) {
    if (t->seg_hi < t->seg_lo)
      throw std::logic_error("chain: inverted segment");
    return;
  }
  if (std::abs(t->left->height - t->right->height) > 1)
    throw std::logic_error("chain: unbalanced node");
  if (t->leaves != t->left->leaves + t->right->leaves)
    throw std::logic_error("chain: bad leaf count");
  const double gap = std::fabs(t->left->last_hi - t->right->first_lo);
  if (gap > 1e-6 * (1 + std::fabs(t->left->last_hi)))
    throw std::logic_error("chain: segments not adjacent");
  chain_validate(t->left);
  chain_validate(t->right);
}

// ---------------------------------------------------------------------------
// Tentative binary search.

namespace {

double env_eval(const ChainNode* v, double x) {
  if (v->is_leaf()) return v->curve->y_at(x);
  const double a = v->left->last_curve->y_at(x);
  const double b = v->right->first_curve->y_at(x);
  return a < b ? a : b;
}

// role 0: node of the left chain (leaf point = left segment endpoint),
// role 1: node of the right chain (leaf point = right segment endpoint).
// Returns false for the symbolic endpoint at infinity that lies below
// every curve.
bool node_point(const ChainNode* n, int role, Point* out) {
  if (!n->is_leaf()) {
    *out = n->bp;
    return true;
  }
  const double px = (role == 0) ? n->seg_lo : n->seg_hi;
  if (px <= -0.5 * kInfX || px >= 0.5 * kInfX) return false;
  *out = (role == 0) ? Point{n->seg_lo, n->first_y_lo}
                     : Point{n->seg_hi, n->last_y_hi};
  return true;
}

// 1: u.p on or above L(v); 2: v.p on or above L(u); 3: both strictly below.
// Ties resolve to Case 1 first.
int compare_uv(const ChainNode* u, const ChainNode* v) {
  const double eps = global_tolerance();
  Point up, vp;
  if (node_point(u, 0, &up)) {
    const double e = env_eval(v, up.x);
    const double tol = eps * (1.0 + std::fabs(up.y) + std::fabs(e));
    if (up.y >= e - tol) return 1;
  }
  if (node_point(v, 1, &vp)) {
    const double e = env_eval(u, vp.x);
    const double tol = eps * (1.0 + std::fabs(vp.y) + std::fabs(e));
    if (vp.y >= e - tol) return 2;
  }
  return 3;
}

struct StackEntry {
  const ChainNode* node;
  int begin;  // leaf index of the subtree's first leaf
};

constexpr int kMaxDepth = 96;

}  // namespace

int compare_nodes(const ChainNode* u, const ChainNode* v) {
  return compare_uv(u, v);
}

CrossResult find_envelope_crossing(const ChainNode* a, const ChainNode* b,
                                   const MergeObserver* observer) {
  if (!a || !b)
    throw std::invalid_argument("envelope crossing: empty chain");

  StackEntry ustk[kMaxDepth], vstk[kMaxDepth];
  int un = 0, vn = 0;
  const ChainNode* u = a;
  const ChainNode* v = b;
  int ub = 0, vb = 0;

  CrossResult res;
  res.stats.path_len = a->height + b->height;
  const int cap = 4 * (a->height + b->height) + 16;

  while (true) {
    if (res.stats.steps >= cap)
      throw std::logic_error("envelope crossing: step budget exceeded");
    ++res.stats.steps;

    MergeStep snap;
    if (observer) {
      snap.step = res.stats.steps;
      snap.u = u;
      snap.v = v;
      snap.u_begin = ub;
      snap.u_end = ub + u->leaves;
      snap.v_begin = vb;
      snap.v_end = vb + v->leaves;
      for (int i = 0; i < un; ++i)
        snap.ustack_left_ranges.emplace_back(
            ustk[i].begin, ustk[i].begin + ustk[i].node->left->leaves);
      for (int i = 0; i < vn; ++i)
        snap.vstack_right_ranges.emplace_back(
            vstk[i].begin + vstk[i].node->left->leaves,
            vstk[i].begin + vstk[i].node->leaves);
    }

    const int c1 = compare_uv(u, v);
    int c2 = 0;
    bool found = false;

    if (c1 == 3) {
      if (!u->is_leaf()) {
        ustk[un++] = {u, ub};
        ++res.stats.pushes;
        ub += u->left->leaves;
        u = u->right;
      }
      if (!v->is_leaf()) {
        vstk[vn++] = {v, vb};
        ++res.stats.pushes;
        v = v->left;
      }
      if (u->is_leaf() && v->is_leaf()) found = true;
    } else if (c1 == 1) {
      if (un == 0) {
        if (u->is_leaf())
          throw std::logic_error("envelope crossing: inconsistent case 1");
        u = u->left;
      } else if (u->is_leaf()) {
        const StackEntry e = ustk[--un];
        ++res.stats.pops;
        u = e.node->left;
        ub = e.begin;
      } else {
        const StackEntry e = ustk[un - 1];
        c2 = compare_uv(e.node, v);
        if (c2 == 1) {
          --un;
          ++res.stats.pops;
          u = e.node->left;
          ub = e.begin;
        } else if (c2 == 2) {
          u = u->left;
          if (!v->is_leaf()) {
            vb += v->left->leaves;
            v = v->right;
          }
        } else {
          u = u->left;
          if (!v->is_leaf()) {
            vstk[vn++] = {v, vb};
            ++res.stats.pushes;
            v = v->left;
          }
        }
      }
    } else {  // c1 == 2, symmetric to case 1
      if (vn == 0) {
        if (v->is_leaf())
          throw std::logic_error("envelope crossing: inconsistent case 2");
        vb += v->left->leaves;
        v = v->right;
      } else if (v->is_leaf()) {
        const StackEntry e = vstk[--vn];
        ++res.stats.pops;
        v = e.node->right;
        vb = e.begin + e.node->left->leaves;
      } else {
        const StackEntry e = vstk[vn - 1];
        c2 = compare_uv(u, e.node);
        if (c2 == 2) {
          --vn;
          ++res.stats.pops;
          v = e.node->right;
          vb = e.begin + e.node->left->leaves;
        } else if (c2 == 1) {
          vb += v->left->leaves;
          v = v->right;
          if (!u->is_leaf()) u = u->left;
        } else {
          vb += v->left->leaves;
          v = v->right;
          if (!u->is_leaf()) {
            ustk[un++] = {u, ub};
            ++res.stats.pushes;
            ub += u->left->leaves;
            u = u->right;
          }
        }
      }
    }

    if (un >= kMaxDepth || vn >= kMaxDepth)
      throw std::logic_error("envelope crossing: stack overflow");

    if (observer) {
      snap.case_main = c1;
      snap.case_nested = c2;
      (*observer)(snap);
    }
    if (found) break;
  }

  const double lo = std::max(u->seg_lo, v->seg_lo);
  const double hi = std::min(u->seg_hi, v->seg_hi);
  res.q = curve_crossing(*u->curve, *v->curve, lo, hi);
  res.u_leaf = ub;
  res.v_leaf = vb;
  return res;
}

ChainMerge merge_chains(ChainNode* a, ChainNode* b) {
  ChainMerge m;
  const CrossResult cr = find_envelope_crossing(a, b);
  m.stats = cr.stats;
  const Point q = cr.q;

  // Left chain: keep the prefix through the crossing, hide the rest.
  auto [keep_a, hide_a] = chain_split_leaves(a, cr.u_leaf + 1);
  {
    const ChainNode* ul = rightmost(keep_a);
    if (q.x >= ul->seg_hi) {
      // crossing at the existing breakpoint, nothing to cut
    } else if (q.x <= ul->seg_lo) {
      auto [p2, l] = chain_split_leaves(keep_a, keep_a->leaves - 1);
      keep_a = p2;
      hide_a = join(l, hide_a);
    } else {
      ChainNode* rem = chain_new_leaf(ul->curve, q.x, ul->seg_hi);
      set_rightmost_hi(keep_a, q.x, q.y);
      hide_a = join(rem, hide_a);
    }
  }

  // Right chain: keep the suffix from the crossing on.
  auto [hide_b, keep_b] = chain_split_leaves(b, cr.v_leaf);
  {
    const ChainNode* vl = leftmost(keep_b);
    if (q.x <= vl->seg_lo) {
      // nothing to cut
    } else if (q.x >= vl->seg_hi) {
      auto [f, s2] = chain_split_leaves(keep_b, 1);
      keep_b = s2;
      hide_b = join(hide_b, f);
    } else {
      ChainNode* rem = chain_new_leaf(vl->curve, vl->seg_lo, q.x);
      set_leftmost_lo(keep_b, q.x, q.y);
      hide_b = join(hide_b, rem);
    }
  }

  m.left_leaf_count = chain_leaves(keep_a);
  m.merged = join(keep_a, keep_b);
  m.left_hidden = hide_a;
  m.right_hidden = hide_b;
  return m;
}

}  // namespace arcunion::envelope
